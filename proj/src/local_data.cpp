#include "eqg/local_data.hpp"

#include <algorithm>

namespace eqg {

namespace {

std::vector<std::vector<int>> admissible_sheets(const SheetModel& y, const SheetModel& cover) {
  const SimplicialComplex& base = y.base();
  std::vector<std::vector<int>> cand(cover.num_labels());
  std::vector<char> init(cover.num_labels(), 0);
  for (int d = 0; d <= base.dimension(); ++d)
    for (int i = 0; i < base.count(d); ++i)
      for (int a : cover.labels(d, i)) {
        const auto& yl = y.labels(d, i);
        if (!init[a]) {
          cand[a] = yl;
          init[a] = 1;
          continue;
        }
        std::vector<int> keep;
        std::set_intersection(cand[a].begin(), cand[a].end(), yl.begin(), yl.end(), std::back_inserter(keep));
        cand[a] = std::move(keep);
      }
  for (int a = 0; a < cover.num_labels(); ++a)
    if (cand[a].empty()) throw NoSection("no sheet of Y lies over a whole cover set");
  return cand;
}

CircleFunction random_circle(const SheetModel& m, int p, std::mt19937_64& rng) {
  SheetForm x(m, p, 0);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (auto& v : x.raw()) {
    v = Rat(dist(rng), 11);
    v.canonicalize();
  }
  return CircleFunction::from_lift(x);
}

// Evaluation of the local data at a simplex of the common base, on a chosen sheet y.
class Eval {
 public:
  explicit Eval(const LocalData& ld) : ld_(ld), em_(*ld.gerbe.em), dA_(exterior_d(ld.gerbe.A)) {}

  // s at a k-simplex (k = 0 value, k = 1 increment)
  Rat s(int k, int idx, const std::vector<int>& t) const {
    return k == 0 ? ld_.gerbe.s.val.value(idx, t) : ld_.gerbe.s.inc.value(idx, t);
  }
  Rat sigma(int k, int idx, int a, int b) const {
    return k == 0 ? ld_.choice.sigma.val.value(idx, {a, b}) : ld_.choice.sigma.inc.value(idx, {a, b});
  }
  Rat tau(int g, int k, int idx, int a) const {
    const auto& t = ld_.choice.tau[g];
    return k == 0 ? t.val.value(idx, {a}) : t.inc.value(idx, {a});
  }
  int psi(int a) const { return ld_.choice.psi[a]; }
  int ca(int g, int a) const { return ld_.cover->label(g, a); }
  int ya(int g, int y) const { return em_.label(g, y); }
  int img(int g, int k, int idx) const { return em_.image(g, k, idx); }
  int eps(int g, int k, int idx) const { return k > 0 ? em_.sign(g, k, idx) : 1; }

  Rat v(int a, int k, int idx, int y1, int y2) const { return s(k, idx, {y1, y2, psi(a)}); }
  Rat w(int a, int b, int k, int idx, int y) const { return sigma(k, idx, a, b) - s(k, idx, {y, psi(a), psi(b)}); }
  Rat eta(int a, int e, int y) const { return -ld_.gerbe.A.value(e, {y, psi(a)}); }
  Rat deta(int a, int t, int y) const { return -dA_.value(t, {y, psi(a)}); }
  Rat r(int g, int a, int k, int idx, int y) const {
    const int b1 = ld_.choice.psi1[a];
    return -s(k, idx, {y, psi(a), b1}) +
           eps(g, k, idx) * s(k, img(g, k, idx), {ya(g, y), psi(ca(g, a)), ya(g, b1)}) + tau(g, k, idx, a);
  }

 private:
  const LocalData& ld_;
  const EquivariantSheetModel& em_;
  SheetForm dA_;
};

}  // namespace

LocalDataChoice default_local_choice(const GerbeData& g, const EquivariantSheetModel& cover) {
  auto cand = admissible_sheets(g.model(), cover.model());
  LocalDataChoice c;
  for (const auto& l : cand) {
    c.psi.push_back(l.front());
    c.psi1.push_back(l.front());
  }
  c.sigma = CircleFunction(cover.model(), 2);
  c.tau.assign(cover.group().order, CircleFunction(cover.model(), 1));
  return c;
}

LocalDataChoice random_local_choice(const GerbeData& g, const EquivariantSheetModel& cover, std::mt19937_64& rng) {
  auto cand = admissible_sheets(g.model(), cover.model());
  LocalDataChoice c;
  for (const auto& l : cand) {
    std::uniform_int_distribution<size_t> pick(0, l.size() - 1);
    c.psi.push_back(l[pick(rng)]);
    c.psi1.push_back(l[pick(rng)]);
  }
  c.sigma = random_circle(cover.model(), 2, rng);
  for (int q = 0; q < cover.group().order; ++q) c.tau.push_back(random_circle(cover.model(), 1, rng));
  return c;
}

LocalData build_local_data(const GerbeData& g, std::shared_ptr<const EquivariantSheetModel> cover,
                           LocalDataChoice choice) {
  const SheetModel& y = g.model();
  const SheetModel& c = cover->model();
  if (!y.base().same_as(c.base())) throw LevelError("cover and gerbe live over different bases");
  if (cover->group().order != g.em->group().order) throw LevelError("cover and gerbe carry different groups");
  for (int q = 0; q < cover->group().order; ++q)
    for (int v = 0; v < y.base().num_vertices(); ++v)
      if (cover->image(q, 0, v) != g.em->image(q, 0, v)) throw LevelError("cover and gerbe carry different actions");
  auto cand = admissible_sheets(y, c);
  if (choice.psi.size() != cand.size() || choice.psi1.size() != cand.size())
    throw NoSection("one section per cover set is required");
  for (size_t a = 0; a < cand.size(); ++a)
    if (!std::binary_search(cand[a].begin(), cand[a].end(), choice.psi[a]) ||
        !std::binary_search(cand[a].begin(), cand[a].end(), choice.psi1[a]))
      throw NoSection("chosen sheet does not lie over the whole cover set");
  if (static_cast<int>(choice.tau.size()) != cover->group().order) throw LevelError("tau needs one entry per group element");
  return LocalData{std::move(cover), g, std::move(choice)};
}

LocalDataCheck check_local_data(const LocalData& ld) {
  LocalDataCheck res;
  Eval ev(ld);
  const SheetModel& y = ld.gerbe.model();
  const SheetModel& c = ld.cover->model();
  const SimplicialComplex& base = y.base();
  bool ok1 = true, ok2 = true, ok3 = true;
  auto same = [](int k, const Rat& a, const Rat& b) { return k == 0 ? frac(a - b) == 0 : a == b; };
  for (int k = 0; k <= 1; ++k)
    for (int idx = 0; idx < base.count(k); ++idx) {
      const auto& yl = y.labels(k, idx);
      for (int a : c.labels(k, idx))
        for (int y1 : yl)
          for (int y2 : yl) {
            for (int y3 : yl) {
              Rat dv = ev.v(a, k, idx, y2, y3) - ev.v(a, k, idx, y1, y3) + ev.v(a, k, idx, y1, y2);
              if (!same(k, dv, ev.s(k, idx, {y1, y2, y3}))) ok1 = false;
            }
            for (int b : c.labels(k, idx)) {
              Rat dw = ev.w(a, b, k, idx, y2) - ev.w(a, b, k, idx, y1);
              if (!same(k, dw, ev.v(b, k, idx, y1, y2) - ev.v(a, k, idx, y1, y2))) ok2 = false;
            }
            for (int g = 0; g < ld.cover->group().order; ++g) {
              Rat dr = ev.r(g, a, k, idx, y2) - ev.r(g, a, k, idx, y1);
              Rat dgv = ev.v(a, k, idx, y1, y2) -
                        ev.eps(g, k, idx) * ev.v(ev.ca(g, a), k, ev.img(g, k, idx), ev.ya(g, y1), ev.ya(g, y2));
              if (!same(k, dr, -dgv)) ok3 = false;
            }
          }
    }
  if (!ok1) res.failures.push_back("delta v != s");
  if (!ok2) res.failures.push_back("delta w_ab != -v_a + v_b");
  if (!ok3) res.failures.push_back("delta r != -d_G v + t");
  res.ok = res.failures.empty();
  return res;
}

TriGradedCochain equivariant_class_cocycle(const LocalData& ld, const DeligneContext& ctx) {
  if (&ctx.model() != &ld.cover->model()) throw LevelError("context lives on a different cover model");
  if (ctx.N() < 2 || ctx.max_i() < 2) throw GradingError("the class needs N >= 2 and group degree >= 2");
  Eval ev(ld);
  const SheetModel& cm = ld.cover->model();
  const SimplicialComplex& base = cm.base();
  const int order = ctx.order();
  TriGradedCochain out;
  std::vector<int> t;

  // circle component filled from a rule giving val (k = 0) and inc (k = 1)
  auto fill_circle = [&](CircleFunction& f, auto rule) {
    for (int k = 0; k <= 1; ++k) {
      SheetForm& sf = k == 0 ? f.val : f.inc;
      for (int idx = 0; idx < base.count(k); ++idx)
        for (size_t code = 0; code < sf.tuples(idx); ++code) {
          sf.decode(idx, code, t);
          sf.at(idx, code) = rule(k, idx, t);
        }
    }
    f.normalize();
  };
  auto fill_form = [&](SheetForm& sf, auto rule) {
    for (int idx = 0; idx < sf.num_simplices(); ++idx)
      for (size_t code = 0; code < sf.tuples(idx); ++code) {
        sf.decode(idx, code, t);
        sf.at(idx, code) = rule(idx, t);
      }
  };

  fill_circle(out.at(ctx, {0, 2, 0}).circle[0], [&](int k, int idx, const std::vector<int>& x) {
    const int y = ev.psi(x[0]);
    return Rat(ev.w(x[1], x[2], k, idx, y) - ev.w(x[0], x[2], k, idx, y) + ev.w(x[0], x[1], k, idx, y));
  });
  fill_form(out.at(ctx, {0, 1, 1}).form[0], [&](int e, const std::vector<int>& x) {
    const int y = ev.psi(x[0]);
    return Rat(ev.eta(x[1], e, y) - ev.eta(x[0], e, y) - ev.w(x[0], x[1], 1, e, y));
  });
  fill_form(out.at(ctx, {0, 0, 2}).form[0], [&](int tri, const std::vector<int>& x) {
    const int y = ev.psi(x[0]);
    return Rat(ev.deta(x[0], tri, y) - ld.gerbe.B.value(tri, {y}));
  });
  for (int g = 0; g < order; ++g) {
    const int code = ctx.code({g});
    fill_circle(out.at(ctx, {1, 1, 0}).circle[code], [&](int k, int idx, const std::vector<int>& x) {
      const int a = x[0], b = x[1], y = ev.psi(a);
      return Rat(ev.w(a, b, k, idx, y) -
                 ev.eps(g, k, idx) * ev.w(ev.ca(g, a), ev.ca(g, b), k, ev.img(g, k, idx), ev.ya(g, y)) +
                 ev.r(g, b, k, idx, y) - ev.r(g, a, k, idx, y));
    });
    fill_form(out.at(ctx, {1, 0, 1}).form[code], [&](int e, const std::vector<int>& x) {
      const int a = x[0], y = ev.psi(a);
      return Rat(ev.eta(a, e, y) - ev.eps(g, 1, e) * ev.eta(ev.ca(g, a), ev.img(g, 1, e), ev.ya(g, y)) +
                 ev.r(g, a, 1, e, y));
    });
  }
  for (int g1 = 0; g1 < order; ++g1)
    for (int g2 = 0; g2 < order; ++g2) {
      const int code = ctx.code({g1, g2});
      const int g12 = ctx.equivariant().group().mul(g1, g2);
      fill_circle(out.at(ctx, {2, 0, 0}).circle[code], [&](int k, int idx, const std::vector<int>& x) {
        const int a = x[0], y = ev.psi(a);
        Rat d = ev.r(g2, a, k, idx, y) - ev.r(g12, a, k, idx, y) +
                ev.eps(g2, k, idx) * ev.r(g1, ev.ca(g2, a), k, ev.img(g2, k, idx), ev.ya(g2, y));
        return Rat(-d);
      });
    }
  return out;
}

}  // namespace eqg
