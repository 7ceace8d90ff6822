#include "eqg/reduction_discrete.hpp"

#include <algorithm>

#include "eqg/cohomology.hpp"
#include "eqg/deligne_discrete.hpp"

namespace eqg {

QuotientSheets quotient_sheets(const EquivariantSheetModel& em) {
  const SheetModel& m = em.model();
  const SimplicialComplex& k = m.base();
  const SimplicialGroupAction& act = em.action();
  if (!act.is_regular_on(k)) throw NotFreeAction("action on the base is not regular; subdivide first");
  QuotientResult qr = quotient_complex(k, act);
  QuotientSheets q;
  q.order = act.group.order;
  q.projection = qr.projection;
  q.base = std::make_shared<const SimplicialComplex>(std::move(qr.quotient));

  q.label_orbit.assign(m.num_labels(), -1);
  int nl = 0;
  for (int a = 0; a < m.num_labels(); ++a) {
    if (q.label_orbit[a] >= 0) continue;
    for (int g = 0; g < q.order; ++g) q.label_orbit[em.label(g, a)] = nl;
    ++nl;
  }

  const int dim = k.dimension();
  q.rep.resize(dim + 1);
  q.image.resize(dim + 1);
  q.sign.resize(dim + 1);
  std::vector<std::vector<std::vector<int>>> labels(dim + 1);
  for (int d = 0; d <= dim; ++d) {
    q.rep[d].assign(q.base->count(d), -1);
    labels[d].resize(q.base->count(d));
    for (int i = 0; i < k.count(d); ++i) {
      Simplex s;
      for (int v : k.simplex(d, i)) s.push_back(q.projection[v]);
      const int sg = permutation_sign(s);
      std::sort(s.begin(), s.end());
      const int j = q.base->index_of(s);
      q.image[d].push_back(j);
      q.sign[d].push_back(sg);
      if (q.rep[d][j] >= 0) continue;
      q.rep[d][j] = i;
      std::vector<int> l;
      for (int a : m.labels(d, i)) l.push_back(q.label_orbit[a]);
      std::sort(l.begin(), l.end());
      if (std::adjacent_find(l.begin(), l.end()) != l.end())
        throw NotFreeAction("a simplex carries two sheets of one orbit");
      labels[d][j] = std::move(l);
    }
  }
  auto model = SheetModel::from_labels(q.base, nl, std::move(labels));
  q.em = std::make_shared<const EquivariantSheetModel>(EquivariantSheetModel::trivial(std::move(model)));
  return q;
}

namespace {

// upstairs label over simplex (d, i) in the given orbit
int lift_label(const SheetModel& m, const std::vector<int>& orbit, int d, int i, int o) {
  for (int a : m.labels(d, i))
    if (orbit[a] == o) return a;
  throw NotFreeAction("orbit has no sheet over the representative");
}

}  // namespace

SheetForm QuotientSheets::descend(const EquivariantSheetModel& up, const SheetForm& x) const {
  if (&x.model() != &up.model()) throw LevelError("form lives on a different sheet model");
  SheetForm out(em->model(), x.p(), x.k());
  std::vector<int> t, u;
  for (int j = 0; j < out.num_simplices(); ++j) {
    const int i = rep[x.k()][j];
    for (size_t c = 0; c < out.tuples(j); ++c) {
      out.decode(j, c, t);
      u.clear();
      for (int o : t) u.push_back(lift_label(up.model(), label_orbit, x.k(), i, o));
      out.at(j, c) = sign[x.k()][i] * x.value(i, u);
    }
  }
  return out;
}

CircleFunction QuotientSheets::descend(const EquivariantSheetModel& up, const CircleFunction& x) const {
  CircleFunction r;
  r.val = descend(up, x.val);
  r.inc = descend(up, x.inc);
  return r;
}

SheetForm QuotientSheets::pull_back(const EquivariantSheetModel& up, const SheetForm& x) const {
  if (&x.model() != &em->model()) throw LevelError("form does not live on the quotient model");
  SheetForm out(up.model(), x.p(), x.k());
  std::vector<int> t, u;
  for (int i = 0; i < out.num_simplices(); ++i) {
    const int j = image[x.k()][i];
    for (size_t c = 0; c < out.tuples(i); ++c) {
      out.decode(i, c, t);
      u.clear();
      for (int a : t) u.push_back(label_orbit[a]);
      out.at(i, c) = sign[x.k()][i] * x.value(j, u);
    }
  }
  return out;
}

CircleFunction QuotientSheets::pull_back(const EquivariantSheetModel& up, const CircleFunction& x) const {
  CircleFunction r;
  r.val = pull_back(up, x.val);
  r.inc = pull_back(up, x.inc);
  return r;
}

ReducedDiscrete reduce_topological(const GerbeData& g) {
  GerbeCheck chk = validate(g, true);
  if (!chk.ok) throw NotBasic("input is not a valid equivariant gerbe: " + chk.failures.front());
  ReducedDiscrete r{quotient_sheets(*g.em), {}};
  r.gerbe.em = r.q.em;
  r.gerbe.s = r.q.descend(*g.em, g.s);
  r.gerbe.A = r.q.descend(*g.em, g.A);
  r.gerbe.B = r.q.descend(*g.em, g.B);
  return r;
}

GerbeData pull_back_reduced(const ReducedDiscrete& r, std::shared_ptr<const EquivariantSheetModel> up) {
  GerbeData g;
  g.s = r.q.pull_back(*up, r.gerbe.s);
  g.A = r.q.pull_back(*up, r.gerbe.A);
  g.B = r.q.pull_back(*up, r.gerbe.B);
  g.em = std::move(up);
  return g;
}

Rat three_curvature_period(const GerbeData& g) {
  const std::vector<Rat> omega = three_curvature(g);
  if (omega.empty()) return Rat(0);
  const std::vector<int> cyc = fundamental_cycle(g.model().base());
  if (cyc.empty()) throw ExactError("base is not an orientable closed pseudomanifold");
  Rat p = 0;
  for (size_t i = 0; i < omega.size(); ++i) p += cyc[i] * omega[i];
  return p;
}

bool DescentReport::degree_relation() const { return abs(period_up) == order * abs(period_down); }

DescentReport descent_report(const GerbeData& g, const ReducedDiscrete& r) {
  DescentReport rep;
  rep.order = r.q.order;
  const GerbeData back = pull_back_reduced(r, g.em);
  rep.pullback_matches = back.s == g.s && back.A == g.A && back.B == g.B;
  rep.same_dd_class = same_dd_class(dd_cocycle(g), dd_cocycle(back));
  DeligneContext ctx(g.em, 2, 0);
  TriGradedCochain diff = deligne_class_cocycle(back, ctx);
  diff.add(ctx, deligne_class_cocycle(g, ctx), -1);
  rep.deligne_witness = find_primitive(ctx, diff).found;
  rep.period_up = three_curvature_period(g);
  rep.period_down = three_curvature_period(r.gerbe);
  return rep;
}

}  // namespace eqg
