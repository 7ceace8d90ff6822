#include "eqg/sheets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace eqg {

SheetModel SheetModel::from_cover(std::shared_ptr<const SimplicialComplex> base, const Cover& cover) {
  SheetModel m;
  m.base_ = std::move(base);
  m.nl_ = static_cast<int>(cover.size());
  const SimplicialComplex& k = *m.base_;
  std::vector<std::vector<char>> in(m.nl_, std::vector<char>(k.num_vertices(), 0));
  for (int a = 0; a < m.nl_; ++a) {
    if (cover[a].empty()) throw InvalidCover("empty cover set");
    for (int v : cover[a]) in[a][v] = 1;
  }
  m.labels_.resize(k.dimension() + 1);
  for (int d = 0; d <= k.dimension(); ++d) {
    m.labels_[d].resize(k.count(d));
    for (int i = 0; i < k.count(d); ++i)
      for (int a = 0; a < m.nl_; ++a) {
        bool all = true;
        for (int v : k.simplex(d, i))
          if (!in[a][v]) {
            all = false;
            break;
          }
        if (all) m.labels_[d][i].push_back(a);
      }
  }
  m.finish();
  return m;
}

SheetModel SheetModel::from_labels(std::shared_ptr<const SimplicialComplex> base, int num_labels,
                                   std::vector<std::vector<std::vector<int>>> labels) {
  SheetModel m;
  m.base_ = std::move(base);
  m.nl_ = num_labels;
  m.labels_ = std::move(labels);
  const SimplicialComplex& k = *m.base_;
  for (int d = 0; d <= k.dimension(); ++d)
    for (int i = 0; i < k.count(d); ++i) {
      auto& l = m.labels_[d][i];
      std::sort(l.begin(), l.end());
      if (d == 0) continue;
      const Simplex& s = k.simplex(d, i);
      for (int r = 0; r <= d; ++r) {
        Simplex f = s;
        f.erase(f.begin() + r);
        const auto& fl = m.labels_[d - 1][k.index_of(f)];
        if (!std::includes(fl.begin(), fl.end(), l.begin(), l.end()))
          throw LevelError("sheet labels must shrink from faces to cofaces");
      }
    }
  m.finish();
  return m;
}

void SheetModel::finish() {
  const SimplicialComplex& k = *base_;
  vedges_.assign(k.num_vertices(), {});
  for (int e = 0; e < k.count(1); ++e) {
    vedges_[k.simplex(1, e)[0]].push_back(e);
    vedges_[k.simplex(1, e)[1]].push_back(e);
  }
}

int SheetModel::position(int k, int idx, int label) const {
  const auto& l = labels_[k][idx];
  auto it = std::lower_bound(l.begin(), l.end(), label);
  return (it != l.end() && *it == label) ? static_cast<int>(it - l.begin()) : -1;
}

bool SheetModel::covers(int k, int idx, const std::vector<int>& tuple) const {
  for (int a : tuple)
    if (position(k, idx, a) < 0) return false;
  return true;
}

bool SheetModel::surjective() const {
  for (const auto& level : labels_)
    for (const auto& l : level)
      if (l.empty()) return false;
  return true;
}

std::vector<int> SheetModel::tuple_components(const std::vector<int>& tuple, int* count) const {
  const SimplicialComplex& k = *base_;
  std::vector<int> parent(k.num_vertices(), -1);
  for (int v = 0; v < k.num_vertices(); ++v)
    if (covers(0, v, tuple)) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int e = 0; e < k.count(1); ++e)
    if (covers(1, e, tuple)) {
      int a = find(k.simplex(1, e)[0]), b = find(k.simplex(1, e)[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> comp(k.num_vertices(), -1);
  std::vector<int> root_id(k.num_vertices(), -1);
  int n = 0;
  for (int v = 0; v < k.num_vertices(); ++v) {
    if (parent[v] < 0) continue;
    int r = find(v);
    if (root_id[r] < 0) root_id[r] = n++;
    comp[v] = root_id[r];
  }
  if (count) *count = n;
  return comp;
}

SheetForm::SheetForm(const SheetModel& m, int p, int k) : m_(&m), p_(p), k_(k) {
  const int n = m.base().count(k);
  offset_.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    size_t c = 1;
    const size_t l = m.labels(k, i).size();
    for (int r = 0; r < p; ++r) c *= l;
    offset_[i + 1] = offset_[i] + c;
  }
  data_.assign(offset_.back(), Rat(0));
}

size_t SheetForm::encode(int idx, const std::vector<int>& tuple) const {
  const size_t n = m_->labels(k_, idx).size();
  size_t code = 0;
  for (int a : tuple) {
    int pos = m_->position(k_, idx, a);
    if (pos < 0) throw LevelError("label tuple does not lie over the simplex");
    code = code * n + static_cast<size_t>(pos);
  }
  return code;
}

void SheetForm::decode(int idx, size_t code, std::vector<int>& tuple) const {
  const auto& l = m_->labels(k_, idx);
  const size_t n = l.size();
  tuple.resize(p_);
  for (int r = p_ - 1; r >= 0; --r) {
    tuple[r] = l[code % n];
    code /= n;
  }
}

bool SheetForm::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

SheetForm& SheetForm::operator+=(const SheetForm& o) {
  if (!same_shape(o)) throw LevelError("shape mismatch in form sum");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

SheetForm& SheetForm::operator-=(const SheetForm& o) {
  if (!same_shape(o)) throw LevelError("shape mismatch in form difference");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

SheetForm& SheetForm::operator*=(const Rat& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

SheetForm SheetForm::operator-() const {
  SheetForm r = *this;
  for (auto& v : r.data_) v = -v;
  return r;
}

SheetForm delta(const SheetForm& x) {
  SheetForm out(x.model(), x.p() + 1, x.k());
  std::vector<int> t, f;
  for (int i = 0; i < out.num_simplices(); ++i)
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      Rat acc = 0;
      for (int l = 0; l <= x.p(); ++l) {
        f = t;
        f.erase(f.begin() + l);
        if (l % 2)
          acc -= x.value(i, f);
        else
          acc += x.value(i, f);
      }
      out.at(i, c) = acc;
    }
  return out;
}

SheetForm exterior_d(const SheetForm& x) {
  const SheetModel& m = x.model();
  SheetForm out(m, x.p(), x.k() + 1);
  std::vector<int> t;
  for (int i = 0; i < out.num_simplices(); ++i) {
    const Simplex& s = m.base().simplex(x.k() + 1, i);
    std::vector<int> faces;
    for (int r = 0; r <= x.k() + 1; ++r) {
      Simplex f = s;
      f.erase(f.begin() + r);
      faces.push_back(m.base().index_of(f));
    }
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      Rat acc = 0;
      for (int r = 0; r <= x.k() + 1; ++r) {
        if (r % 2)
          acc -= x.value(faces[r], t);
        else
          acc += x.value(faces[r], t);
      }
      out.at(i, c) = acc;
    }
  }
  return out;
}

CircleFunction CircleFunction::from_lift(const SheetForm& lift) {
  CircleFunction f;
  f.val = lift;
  f.inc = exterior_d(lift);
  f.normalize();
  return f;
}

void CircleFunction::normalize() {
  for (auto& v : val.raw()) v = frac(v);
}

bool CircleFunction::is_consistent() const {
  SheetForm dv = exterior_d(val);
  for (size_t i = 0; i < dv.raw().size(); ++i) {
    Rat diff = inc.raw()[i] - dv.raw()[i];
    if (diff.get_den() != 1) return false;
  }
  for (const auto& v : val.raw())
    if (v < 0 || v >= 1) return false;
  return exterior_d(inc).is_zero();
}

bool CircleFunction::is_one() const { return val.is_zero() && inc.is_zero(); }

CircleFunction& CircleFunction::operator+=(const CircleFunction& o) {
  val += o.val;
  inc += o.inc;
  normalize();
  return *this;
}

CircleFunction& CircleFunction::operator-=(const CircleFunction& o) {
  val -= o.val;
  inc -= o.inc;
  normalize();
  return *this;
}

CircleFunction CircleFunction::operator-() const {
  CircleFunction r;
  r.val = -val;
  r.inc = -inc;
  r.normalize();
  return r;
}

SheetForm CircleFunction::lift() const {
  const SheetModel& m = val.model();
  const SimplicialComplex& k = m.base();
  SheetForm out(m, val.p(), 0);
  std::vector<char> seen(out.raw().size(), 0);
  std::vector<int> t;
  for (int v0 = 0; v0 < k.num_vertices(); ++v0)
    for (size_t c0 = 0; c0 < out.tuples(v0); ++c0) {
      if (seen[out.offset(v0) + c0]) continue;
      out.decode(v0, c0, t);
      out.at(v0, c0) = val.at(v0, c0);
      seen[out.offset(v0) + c0] = 1;
      std::vector<int> stack{v0};
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        const Rat base = out.value(v, t);
        for (int e : m.incident_edges(v)) {
          if (!m.covers(1, e, t)) continue;
          const Simplex& s = k.simplex(1, e);
          const int w = s[0] == v ? s[1] : s[0];
          const Rat step = inc.value(e, t);
          Rat lw = (s[0] == v) ? Rat(base + step) : Rat(base - step);
          size_t cw = out.encode(w, t);
          if (!seen[out.offset(w) + cw]) {
            seen[out.offset(w) + cw] = 1;
            out.at(w, cw) = lw;
            stack.push_back(w);
          } else if (out.at(w, cw) != lw) {
            throw LevelError("circle function winds around a loop; no real lift");
          }
        }
      }
    }
  return out;
}

CircleFunction delta(const CircleFunction& x) {
  CircleFunction r;
  r.val = delta(x.val);
  r.inc = delta(x.inc);
  r.normalize();
  return r;
}

EquivariantSheetModel::EquivariantSheetModel(SheetModel model, SimplicialGroupAction action,
                                             std::vector<std::vector<int>> label_perm)
    : model_(std::make_shared<const SheetModel>(std::move(model))),
      action_(std::move(action)),
      label_perm_(std::move(label_perm)) {
  const SimplicialComplex& k = model_->base();
  const int order = action_.group.order;
  if (static_cast<int>(label_perm_.size()) != order) throw LevelError("label action has wrong size");
  image_.assign(order, std::vector<std::vector<int>>(k.dimension() + 1));
  sign_.assign(order, std::vector<std::vector<int>>(k.dimension() + 1));
  for (int g = 0; g < order; ++g)
    for (int d = 0; d <= k.dimension(); ++d) {
      image_[g][d].resize(k.count(d));
      sign_[g][d].resize(k.count(d));
      for (int i = 0; i < k.count(d); ++i) {
        std::vector<int> img;
        for (int v : k.simplex(d, i)) img.push_back(action_.act(g, v));
        sign_[g][d][i] = permutation_sign(img);
        std::sort(img.begin(), img.end());
        const int j = k.index_of(img);
        if (j < 0) throw LevelError("group does not act simplicially");
        image_[g][d][i] = j;
        std::vector<int> moved;
        for (int a : model_->labels(d, i)) moved.push_back(label_perm_[g][a]);
        std::sort(moved.begin(), moved.end());
        if (moved != model_->labels(d, j)) throw LevelError("sheet labels are not G-compatible");
      }
    }
}

EquivariantSheetModel EquivariantSheetModel::trivial(SheetModel model) {
  const int nv = model.base().num_vertices();
  std::vector<std::vector<int>> lp(1, std::vector<int>(model.num_labels()));
  std::iota(lp[0].begin(), lp[0].end(), 0);
  return EquivariantSheetModel(std::move(model), SimplicialGroupAction::trivial(nv), lp);
}

SheetForm EquivariantSheetModel::pullback(int g, const SheetForm& x) const {
  SheetForm out(x.model(), x.p(), x.k());
  std::vector<int> t;
  for (int i = 0; i < out.num_simplices(); ++i) {
    const int j = image_[g][x.k()][i];
    const int s = x.k() > 0 ? sign_[g][x.k()][i] : 1;
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      for (auto& a : t) a = label_perm_[g][a];
      out.at(i, c) = s > 0 ? x.value(j, t) : Rat(-x.value(j, t));
    }
  }
  return out;
}

CircleFunction EquivariantSheetModel::pullback(int g, const CircleFunction& x) const {
  CircleFunction r;
  r.val = pullback(g, x.val);
  r.inc = pullback(g, x.inc);
  return r;
}

bool EquivariantSheetModel::is_invariant(const SheetForm& x) const {
  for (int g = 1; g < group().order; ++g)
    if (!(pullback(g, x) == x)) return false;
  return true;
}

bool EquivariantSheetModel::is_invariant(const CircleFunction& x) const {
  for (int g = 1; g < group().order; ++g)
    if (!(pullback(g, x) == x)) return false;
  return true;
}

}  // namespace eqg
