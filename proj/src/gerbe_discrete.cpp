#include "eqg/gerbe_discrete.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace eqg {

GerbeData GerbeData::trivial(std::shared_ptr<const EquivariantSheetModel> em) {
  GerbeData g;
  const SheetModel& m = em->model();
  g.s = CircleFunction(m, 3);
  g.A = SheetForm(m, 2, 1);
  g.B = SheetForm(m, 1, 2);
  g.em = std::move(em);
  return g;
}

std::vector<int> equivariant_section(const EquivariantSheetModel& em, int k) {
  const SheetModel& m = em.model();
  const int n = m.base().count(k);
  std::vector<int> sec(n, -1);
  for (int i = 0; i < n; ++i) {
    if (sec[i] >= 0) continue;
    if (m.labels(k, i).empty()) throw NoSection("a simplex carries no sheet");
    const int b = m.labels(k, i).front();
    for (int g = 0; g < em.group().order; ++g) {
      const int j = em.image(g, k, i);
      const int lab = em.label(g, b);
      if (sec[j] < 0)
        sec[j] = lab;
      else if (sec[j] != lab)
        throw NoSection("group does not act freely on simplices; no equivariant section");
    }
  }
  return sec;
}

SheetForm solve_delta(const SheetForm& xi, const EquivariantSheetModel* em) {
  if (xi.p() < 2) throw LevelError("solve_delta needs p >= 2");
  if (!delta(xi).is_zero()) throw NotClosed("delta(xi) != 0");
  const SheetModel& m = xi.model();
  std::vector<int> sec;
  if (em) {
    if (&em->model() != &m) throw LevelError("form lives on a different sheet model");
    sec = equivariant_section(*em, xi.k());
  } else {
    sec.resize(m.base().count(xi.k()));
    for (size_t i = 0; i < sec.size(); ++i) {
      if (m.labels(xi.k(), static_cast<int>(i)).empty()) throw NoSection("a simplex carries no sheet");
      sec[i] = m.labels(xi.k(), static_cast<int>(i)).front();
    }
  }
  SheetForm out(m, xi.p() - 1, xi.k());
  std::vector<int> t;
  for (int i = 0; i < out.num_simplices(); ++i)
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      t.insert(t.begin(), sec[i]);
      out.at(i, c) = xi.value(i, t);
    }
  return out;
}

std::vector<Rat> three_curvature(const GerbeData& g) {
  const SheetModel& m = g.model();
  if (m.base().dimension() < 3) return {};
  SheetForm db = exterior_d(g.B);
  std::vector<Rat> omega(m.base().count(3));
  for (int i = 0; i < db.num_simplices(); ++i) {
    if (db.tuples(i) == 0) throw NoSection("a 3-simplex carries no sheet");
    omega[i] = db.at(i, 0);
    for (size_t c = 1; c < db.tuples(i); ++c)
      if (db.at(i, c) != omega[i]) throw NotBasic("dB differs between sheets over a 3-simplex");
  }
  return omega;
}

GerbeCheck validate(const GerbeData& g, bool equivariant) {
  GerbeCheck r;
  auto fail = [&](const std::string& s) {
    r.ok = false;
    r.failures.push_back(s);
  };
  if (!g.s.is_consistent()) fail("s is not a consistent circle function");
  if (!delta(g.s).is_one()) fail("delta s != 1");
  if (!(delta(g.A) + g.s.inc).is_zero()) fail("s*(delta nabla) != 0");
  if (!(delta(g.B) - exterior_d(g.A)).is_zero()) fail("delta f != F(nabla)");
  try {
    three_curvature(g);
  } catch (const std::exception& e) {
    fail(e.what());
  }
  if (equivariant) {
    if (!g.em->is_invariant(g.s)) fail("s is not G-invariant");
    if (!g.em->is_invariant(g.A)) fail("nabla is not G-invariant");
    if (!g.em->is_invariant(g.B)) fail("f is not G-invariant");
  }
  return r;
}

GerbeData gerbe_from_cocycle(std::shared_ptr<const EquivariantSheetModel> em, const SimplicialComplex& nerve,
                             const std::vector<int>& label_vertex, const std::vector<Int>& n) {
  GerbeData g = GerbeData::trivial(em);
  const SheetModel& m = g.model();
  const SimplicialComplex& base = m.base();
  auto value = [&](const std::vector<int>& labels) -> Int {
    std::vector<int> v;
    for (int a : labels) v.push_back(label_vertex[a]);
    const int sg = permutation_sign(v);
    if (sg == 0) return 0;
    std::sort(v.begin(), v.end());
    const int idx = nerve.index_of(v);
    if (idx < 0) throw LevelError("labels over a point do not span a simplex of the nerve");
    return sg * n[idx];
  };
  const std::vector<int> b = equivariant_section(*em, 0);
  std::vector<int> t;
  for (int e = 0; e < base.count(1); ++e) {
    const Simplex& s = base.simplex(1, e);
    for (size_t c = 0; c < g.s.inc.tuples(e); ++c) {
      g.s.inc.decode(e, c, t);
      std::vector<int> x1 = t, x2 = t;
      x1.insert(x1.begin(), b[s[0]]);
      x2.insert(x2.begin(), b[s[1]]);
      g.s.inc.at(e, c) = Rat(value(x2) - value(x1));
    }
  }
  g.A = solve_delta(-g.s.inc, em.get());
  g.B = solve_delta(exterior_d(g.A), em.get());
  return g;
}

GerbeData twist(const GerbeData& g, const CircleFunction& t) {
  GerbeData r = g;
  r.s += delta(t);
  r.A -= t.inc;
  return r;
}

GerbeData product(const GerbeData& a, const GerbeData& b) {
  if (&a.model() != &b.model()) throw LevelError("product needs gerbes over the same sheet model");
  GerbeData r = a;
  r.s += b.s;
  r.A += b.A;
  r.B += b.B;
  return r;
}

GerbeData inverse(const GerbeData& a) {
  GerbeData r = a;
  r.s = -a.s;
  r.A = -a.A;
  r.B = -a.B;
  return r;
}

SheetForm random_invariant_form(const EquivariantSheetModel& em, int p, int k, std::mt19937_64& rng, int den) {
  SheetForm x(em.model(), p, k);
  std::uniform_int_distribution<int> dist(-den, den);
  for (auto& v : x.raw()) v = Rat(dist(rng), den);
  for (auto& v : x.raw()) v.canonicalize();
  SheetForm sum(em.model(), p, k);
  for (int g = 0; g < em.group().order; ++g) sum += em.pullback(g, x);
  return sum;
}

CircleFunction random_invariant_circle(const EquivariantSheetModel& em, int p, std::mt19937_64& rng, int den) {
  return CircleFunction::from_lift(random_invariant_form(em, p, 0, rng, den));
}

ComponentNerve sheet_component_nerve(const SheetModel& m, int max_dim) {
  const SimplicialComplex& base = m.base();
  std::set<std::vector<int>> tuples;
  for (int v = 0; v < base.num_vertices(); ++v) {
    const auto& l = m.labels(0, v);
    const int n = static_cast<int>(l.size());
    for (int d = 0; d <= std::min(max_dim, n - 1); ++d) {
      std::vector<char> pick(n, 0);
      std::fill(pick.begin(), pick.begin() + d + 1, 1);
      do {
        std::vector<int> t;
        for (int r = 0; r < n; ++r)
          if (pick[r]) t.push_back(l[r]);
        tuples.insert(t);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  ComponentNerve cn;
  cn.pieces.resize(max_dim + 1);
  for (const auto& t : tuples) {
    const int d = static_cast<int>(t.size()) - 1;
    int cnt = 0;
    std::vector<int> comp = m.tuple_components(t, &cnt);
    cn.lookup_[t] = {static_cast<int>(cn.pieces[d].size()), comp};
    std::vector<std::vector<int>> verts(cnt);
    for (int v = 0; v < base.num_vertices(); ++v)
      if (comp[v] >= 0) verts[comp[v]].push_back(v);
    for (int c = 0; c < cnt; ++c) cn.pieces[d].push_back({t, verts[c]});
  }
  while (cn.pieces.size() > 1 && cn.pieces.back().empty()) cn.pieces.pop_back();
  const int top = static_cast<int>(cn.pieces.size()) - 1;
  for (int d = 0; d <= top; ++d) cn.complex.dims.push_back(static_cast<int>(cn.pieces[d].size()));
  for (int d = 0; d < top; ++d) {
    SparseIntMatrix mat(cn.complex.dims[d + 1], cn.complex.dims[d]);
    for (int p = 0; p < cn.complex.dims[d + 1]; ++p) {
      const auto& piece = cn.pieces[d + 1][p];
      for (int i = 0; i <= d + 1; ++i) {
        std::vector<int> face = piece.tuple;
        face.erase(face.begin() + i);
        mat.add(p, cn.locate(face, piece.vertices.front()), (i % 2) ? -1 : 1);
      }
    }
    cn.complex.delta.push_back(mat);
  }
  return cn;
}

DDCocycle dd_cocycle(const GerbeData& g) {
  const SheetModel& m = g.model();
  if (!m.surjective()) throw NoSection("some simplex has no local section");
  DDCocycle r;
  r.nerve = sheet_component_nerve(m, 3);
  if (r.nerve.pieces.size() < 4) return r;
  const SheetForm lift = g.s.lift();
  for (const auto& piece : r.nerve.pieces[3]) {
    const int v = piece.vertices.front();
    Rat acc = 0;
    for (int l = 0; l < 4; ++l) {
      std::vector<int> f = piece.tuple;
      f.erase(f.begin() + l);
      if (l % 2)
        acc -= lift.value(v, f);
      else
        acc += lift.value(v, f);
    }
    if (acc.get_den() != 1) throw ExactError("Cech coboundary of the lifted s is not integral");
    r.n.push_back(acc.get_num());
  }
  return r;
}

bool same_dd_class(const DDCocycle& a, const DDCocycle& b) {
  if (a.nerve.complex.dims != b.nerve.complex.dims) throw LevelError("classes live on different nerves");
  if (a.n.empty()) return true;
  std::vector<Int> diff(a.n.size());
  for (size_t i = 0; i < diff.size(); ++i) diff[i] = a.n[i] - b.n[i];
  return a.nerve.complex.is_coboundary(3, diff);
}

Int dd_pairing(const DDCocycle& c) {
  if (c.n.empty()) return 0;
  if (c.nerve.complex.delta.size() < 3) throw ExactError("nerve has no 3-cells");
  const std::vector<int> cyc = orientation_cycle(c.nerve.complex.delta[2].transpose());
  if (cyc.empty()) throw ExactError("nerve is not an orientable closed pseudomanifold");
  return pair_with_cycle(cyc, c.n);
}

TriGradedCochain deligne_class_cocycle(const GerbeData& g, const DeligneContext& ctx) {
  if (&ctx.model() != &g.model()) throw LevelError("context lives on a different sheet model");
  if (ctx.N() < 2) throw GradingError("gerbe classes need N >= 2");
  TriGradedCochain c;
  c.at(ctx, {0, 2, 0}).circle[0] = g.s;
  c.at(ctx, {0, 1, 1}).form[0] = g.A;
  c.at(ctx, {0, 0, 2}).form[0] = g.B;
  return c;
}

}  // namespace eqg
