#include "eqg/trigraded.hpp"

#include <sstream>

namespace eqg {

DeligneContext::DeligneContext(std::shared_ptr<const EquivariantSheetModel> em, int N, int max_i)
    : em_(std::move(em)), n_(N), max_i_(max_i) {
  if (N < 0 || max_i < 0) throw GradingError("negative truncation level");
}

int DeligneContext::num_points(int i) const {
  int n = 1;
  for (int r = 0; r < i; ++r) n *= order();
  return n;
}

std::vector<int> DeligneContext::point(int i, int code) const {
  std::vector<int> g(i);
  for (int r = i - 1; r >= 0; --r) {
    g[r] = code % order();
    code /= order();
  }
  return g;
}

int DeligneContext::code(const std::vector<int>& g) const {
  int c = 0;
  for (int x : g) c = c * order() + x;
  return c;
}

const SheetForm& DeligneContext::shape(int p, int k) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = shapes_[{p, k}];
  if (!slot) slot = std::make_unique<SheetForm>(model(), p, k);
  return *slot;
}

size_t DeligneContext::block_size(int p, int k) const { return shape(p, k).raw().size(); }

const SparseIntMatrix& DeligneContext::delta_stencil(int p, int k) const {
  const SheetForm& in = shape(p, k);
  const SheetForm& out = shape(p + 1, k);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = delta_[{p, k}];
  if (slot) return *slot;
  auto s = std::make_unique<SparseIntMatrix>(static_cast<int>(out.raw().size()), static_cast<int>(in.raw().size()));
  std::vector<int> t, f;
  for (int i = 0; i < out.num_simplices(); ++i)
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      for (int l = 0; l <= p; ++l) {
        f = t;
        f.erase(f.begin() + l);
        s->add(static_cast<int>(out.offset(i) + c), static_cast<int>(in.offset(i) + in.encode(i, f)),
               (l % 2) ? -1 : 1);
      }
    }
  slot = std::move(s);
  return *slot;
}

const SparseIntMatrix& DeligneContext::d_stencil(int p, int k) const {
  const SheetForm& in = shape(p, k);
  const SheetForm& out = shape(p, k + 1);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = d_[{p, k}];
  if (slot) return *slot;
  const SimplicialComplex& base = model().base();
  auto s = std::make_unique<SparseIntMatrix>(static_cast<int>(out.raw().size()), static_cast<int>(in.raw().size()));
  std::vector<int> t;
  for (int i = 0; i < out.num_simplices(); ++i) {
    const Simplex& sx = base.simplex(k + 1, i);
    for (int r = 0; r <= k + 1; ++r) {
      Simplex f = sx;
      f.erase(f.begin() + r);
      const int fi = base.index_of(f);
      for (size_t c = 0; c < out.tuples(i); ++c) {
        out.decode(i, c, t);
        s->add(static_cast<int>(out.offset(i) + c), static_cast<int>(in.offset(fi) + in.encode(fi, t)),
               (r % 2) ? -1 : 1);
      }
    }
  }
  slot = std::move(s);
  return *slot;
}

const SparseIntMatrix& DeligneContext::pullback_stencil(int g, int p, int k) const {
  const SheetForm& f = shape(p, k);
  std::lock_guard<std::mutex> lock(mu_);
  auto& slot = pull_[{g, p, k}];
  if (slot) return *slot;
  const auto& em = *em_;
  const int n = static_cast<int>(f.raw().size());
  auto s = std::make_unique<SparseIntMatrix>(n, n);
  std::vector<int> t;
  for (int i = 0; i < f.num_simplices(); ++i) {
    const int j = em.image(g, k, i);
    const int sg = k > 0 ? em.sign(g, k, i) : 1;
    for (size_t c = 0; c < f.tuples(i); ++c) {
      f.decode(i, c, t);
      for (auto& a : t) a = em.label(g, a);
      s->add(static_cast<int>(f.offset(i) + c), static_cast<int>(f.offset(j) + f.encode(j, t)), sg);
    }
  }
  slot = std::move(s);
  return *slot;
}

bool TriComponent::is_zero() const {
  for (const auto& c : circle)
    if (!c.is_one()) return false;
  for (const auto& f : form)
    if (!f.is_zero()) return false;
  return true;
}

TriComponent TriGradedCochain::zero_component(const DeligneContext& ctx, const Degree3& d) {
  const auto [i, j, k] = d;
  if (i < 0 || j < 0 || k < 0 || k > ctx.N() || i > ctx.max_i())
    throw GradingError("component out of range for this truncation");
  TriComponent c;
  const int n = ctx.num_points(i);
  if (k == 0)
    c.circle.assign(n, CircleFunction(ctx.model(), j + 1));
  else
    c.form.assign(n, ctx.shape(j + 1, k));
  return c;
}

TriGradedCochain TriGradedCochain::zero(const DeligneContext& ctx, int m) {
  TriGradedCochain c;
  for (int i = 0; i <= std::min(m, ctx.max_i()); ++i)
    for (int k = 0; k <= std::min(m - i, ctx.N()); ++k) {
      const Degree3 d{i, m - i - k, k};
      c.parts[d] = zero_component(ctx, d);
    }
  return c;
}

TriComponent& TriGradedCochain::at(const DeligneContext& ctx, const Degree3& d) {
  auto it = parts.find(d);
  if (it != parts.end()) return it->second;
  return parts.emplace(d, zero_component(ctx, d)).first->second;
}

const TriComponent* TriGradedCochain::find(const Degree3& d) const {
  auto it = parts.find(d);
  return it == parts.end() ? nullptr : &it->second;
}

int TriGradedCochain::degree() const {
  int m = -1;
  for (const auto& [d, c] : parts) {
    const int t = d[0] + d[1] + d[2];
    if (m >= 0 && t != m) throw GradingError("cochain mixes total degrees");
    m = t;
  }
  return m;
}

bool TriGradedCochain::is_zero() const {
  for (const auto& [d, c] : parts)
    if (!c.is_zero()) return false;
  return true;
}

void TriGradedCochain::validate(const DeligneContext& ctx) const {
  degree();
  for (const auto& [d, c] : parts) {
    const auto [i, j, k] = d;
    if (i < 0 || j < 0 || k < 0) throw GradingError("negative index");
    if (k > ctx.N()) throw GradingError("form degree above the truncation level");
    if (i > ctx.max_i()) throw GradingError("group degree above the truncation");
    const size_t n = static_cast<size_t>(ctx.num_points(i));
    if (k == 0) {
      if (c.circle.size() != n || !c.form.empty()) throw GradingError("circle component has wrong size");
      for (const auto& f : c.circle)
        if (!f.val.same_shape(ctx.shape(j + 1, 0)) || !f.inc.same_shape(ctx.shape(j + 1, 1)))
          throw GradingError("circle component has wrong shape");
    } else {
      if (c.form.size() != n || !c.circle.empty()) throw GradingError("form component has wrong size");
      for (const auto& f : c.form)
        if (!f.same_shape(ctx.shape(j + 1, k))) throw GradingError("form component has wrong shape");
    }
  }
}

TriGradedCochain& TriGradedCochain::add(const DeligneContext& ctx, const TriGradedCochain& o, int sign) {
  for (const auto& [d, c] : o.parts) {
    TriComponent& t = at(ctx, d);
    for (size_t q = 0; q < c.circle.size(); ++q) {
      if (sign > 0)
        t.circle[q] += c.circle[q];
      else
        t.circle[q] -= c.circle[q];
    }
    for (size_t q = 0; q < c.form.size(); ++q) {
      if (sign > 0)
        t.form[q] += c.form[q];
      else
        t.form[q] -= c.form[q];
    }
  }
  return *this;
}

bool TriGradedCochain::operator==(const TriGradedCochain& o) const {
  for (const auto& [d, c] : parts) {
    const TriComponent* x = o.find(d);
    if (x ? !(*x == c) : !c.is_zero()) return false;
  }
  for (const auto& [d, c] : o.parts)
    if (!find(d) && !c.is_zero()) return false;
  return true;
}

namespace {

// out += sign * S in; identity when s is null
void apply_stencil(const SparseIntMatrix* s, const SheetForm& in, SheetForm& out, int sign) {
  auto& o = out.raw();
  const auto& x = in.raw();
  if (!s) {
    for (size_t r = 0; r < o.size(); ++r) {
      if (sign > 0)
        o[r] += x[r];
      else
        o[r] -= x[r];
    }
    return;
  }
  for (int r = 0; r < s->rows; ++r) {
    if (s->data[r].empty()) continue;
    Rat acc = 0;
    for (const auto& [c, v] : s->data[r]) acc += x[c] * v;
    if (sign > 0)
      o[r] += acc;
    else
      o[r] -= acc;
  }
}

}  // namespace

TriGradedCochain total_coboundary(const DeligneContext& ctx, const TriGradedCochain& c) {
  c.validate(ctx);
  TriGradedCochain out;
  for (const auto& [deg, comp] : c.parts) {
    const auto [i, j, k] = deg;
    const int p = j + 1;
    const bool circ = k == 0;

    auto push = [&](TriComponent& target, int src, int dst, const SparseIntMatrix* s0,
                    const SparseIntMatrix* s1, int sign) {
      if (circ) {
        apply_stencil(s0, comp.circle[src].val, target.circle[dst].val, sign);
        apply_stencil(s1, comp.circle[src].inc, target.circle[dst].inc, sign);
      } else {
        apply_stencil(s0, comp.form[src], target.form[dst], sign);
      }
    };

    if (i + 1 <= ctx.max_i()) {
      TriComponent& t = out.at(ctx, {i + 1, j, k});
      for (int code = 0; code < ctx.num_points(i + 1); ++code) {
        const std::vector<int> g = ctx.point(i + 1, code);
        for (int l = 0; l <= i + 1; ++l) {
          const int sign = (l % 2) ? -1 : 1;
          std::vector<int> h;
          if (l == 0) {
            h.assign(g.begin() + 1, g.end());
            push(t, ctx.code(h), code, nullptr, nullptr, sign);
          } else if (l <= i) {
            h = g;
            h[l - 1] = ctx.equivariant().group().mul(g[l - 1], g[l]);
            h.erase(h.begin() + l);
            push(t, ctx.code(h), code, nullptr, nullptr, sign);
          } else {
            h.assign(g.begin(), g.end() - 1);
            const int last = g.back();
            push(t, ctx.code(h), code, &ctx.pullback_stencil(last, p, k),
                 circ ? &ctx.pullback_stencil(last, p, 1) : nullptr, sign);
          }
        }
      }
    }

    {
      TriComponent& t = out.at(ctx, {i, j + 1, k});
      const int sign = (i % 2) ? -1 : 1;
      for (int q = 0; q < ctx.num_points(i); ++q)
        push(t, q, q, &ctx.delta_stencil(p, k), circ ? &ctx.delta_stencil(p, 1) : nullptr, sign);
    }

    if (k + 1 <= ctx.N()) {
      TriComponent& t = out.at(ctx, {i, j, k + 1});
      const int sign = ((i + j) % 2) ? -1 : 1;
      for (int q = 0; q < ctx.num_points(i); ++q) {
        if (circ)
          apply_stencil(nullptr, comp.circle[q].inc, t.form[q], sign);
        else
          apply_stencil(&ctx.d_stencil(p, k), comp.form[q], t.form[q], sign);
      }
    }
  }
  for (auto& [d, t] : out.parts)
    for (auto& f : t.circle) f.normalize();
  return out;
}

std::string Residual::to_string() const {
  std::ostringstream os;
  os << "(" << ijk[0] << "," << ijk[1] << "," << ijk[2] << ") g=[";
  for (size_t r = 0; r < point.size(); ++r) os << (r ? "," : "") << point[r];
  os << "] " << (circle ? "circle " : "") << "simplex " << simplex_dim << ":" << simplex << " labels [";
  for (size_t r = 0; r < tuple.size(); ++r) os << (r ? "," : "") << tuple[r];
  os << "] value " << rat_to_string(value);
  return os.str();
}

std::vector<Residual> nonzero_entries(const DeligneContext& ctx, const TriGradedCochain& c) {
  std::vector<Residual> out;
  auto scan = [&](const Degree3& d, int q, const SheetForm& f, bool circ) {
    for (int s = 0; s < f.num_simplices(); ++s)
      for (size_t code = 0; code < f.tuples(s); ++code) {
        const Rat& v = f.at(s, code);
        if (v == 0) continue;
        Residual r;
        r.ijk = d;
        r.point = ctx.point(d[0], q);
        r.simplex_dim = f.k();
        r.simplex = s;
        f.decode(s, code, r.tuple);
        r.value = v;
        r.circle = circ;
        out.push_back(std::move(r));
      }
  };
  for (const auto& [d, comp] : c.parts) {
    for (size_t q = 0; q < comp.circle.size(); ++q) {
      scan(d, static_cast<int>(q), comp.circle[q].val, true);
      scan(d, static_cast<int>(q), comp.circle[q].inc, true);
    }
    for (size_t q = 0; q < comp.form.size(); ++q) scan(d, static_cast<int>(q), comp.form[q], false);
  }
  return out;
}

CocycleReport is_cocycle(const DeligneContext& ctx, const DeligneNCocycle& c) {
  if (c.N != ctx.N()) throw GradingError("cocycle level does not match the context");
  const int m = c.data.degree();
  if (m >= 0 && m != c.degree) throw GradingError("cocycle degree does not match its data");
  CocycleReport r;
  r.residuals = nonzero_entries(ctx, total_coboundary(ctx, c.data));
  r.closed = r.residuals.empty();
  return r;
}

}  // namespace eqg
