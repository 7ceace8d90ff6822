#include <doctest.h>

#include <random>

#include "eqg/deligne_discrete.hpp"
#include "eqg/equivariant_analytic.hpp"
#include "eqg/hopf.hpp"
#include "eqg/lens.hpp"
#include "eqg/local_data.hpp"

using namespace eqg;

namespace {

std::vector<AnalyticAction> actions() {
  const Mat rot = (Mat(2, 2) << 0, -1, 1, 0).finished();
  return {AnalyticAction::circle_weights({1, -1}), AnalyticAction::circle_weights({2, 1, -3}),
          AnalyticAction::adjoint(MatrixLieGroup::su2()), AnalyticAction::translation(rot)};
}

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = nd(rng);
  return v;
}

struct LensGerbe {
  LensSpace L = lens_join(3);
  BlockModel cov = block_model(L.cover, L.action, 1);
  BlockModel be = block_model(L.cover, L.action, 2);
  GerbeData g = gerbe_from_cocycle(be.em, *be.nerve, be.label_vertex,
                                   orbit_sum(L.cover, L.action, unit_top_cocycle(L.cover)));
};

}  // namespace

TEST_CASE("local data are consistent and independent of the choices") {
  LensGerbe lg;
  std::mt19937_64 rng(21);
  GerbeData g = twist(lg.g, random_invariant_circle(*lg.be.em, 2, rng));
  LocalData a = build_local_data(g, lg.cov.em, random_local_choice(g, *lg.cov.em, rng));
  LocalData b = build_local_data(g, lg.cov.em, random_local_choice(g, *lg.cov.em, rng));
  CHECK(check_local_data(a).ok);
  CHECK(check_local_data(b).ok);
  DeligneContext ctx(lg.cov.em, 2, 2);
  TriGradedCochain ca = equivariant_class_cocycle(a, ctx);
  TriGradedCochain cb = equivariant_class_cocycle(b, ctx);
  CHECK(is_cocycle(ctx, {2, 2, ca}).closed);
  CHECK(is_cocycle(ctx, {2, 2, cb}).closed);
  TriGradedCochain diff = cb;
  diff.add(ctx, ca, -1);
  WitnessResult w = find_primitive(ctx, diff);
  REQUIRE(w.found);
  CHECK(total_coboundary(ctx, w.witness) == diff);
  // the class itself is not trivial
  CHECK_FALSE(find_primitive(ctx, ca).found);
}

TEST_CASE("local data choices are validated") {
  LensGerbe lg;
  LocalDataChoice c = default_local_choice(lg.g, *lg.cov.em);
  LocalDataChoice short_tau = c;
  short_tau.tau.pop_back();
  CHECK_THROWS_AS(build_local_data(lg.g, lg.cov.em, short_tau), LevelError);
  LocalDataChoice bad_psi = c;
  bad_psi.psi.pop_back();
  CHECK_THROWS_AS(build_local_data(lg.g, lg.cov.em, bad_psi), NoSection);
}

TEST_CASE("B elements lie in Z and Phi inverts Psi") {
  std::mt19937_64 rng(22);
  for (const auto& a : actions()) {
    SampleSet s = SampleSet::random(a, 10, 4, rng);
    EZPair b = b_element(a, PolyField::random(a.group.dim(), a.n, rng));
    CHECK(z_residual(a, b, s).max() < 1e-8);
    DoubleForm ab = psi_map(a, b);
    DoubleResidual dr = double_cocycle_residual(a, ab, s);
    CHECK(dr.mixed.max < 1e-6);
    CHECK(dr.del_beta.max < 1e-12);
    CHECK(dr.filtration.max == 0);
    CHECK(ez_distance(a, b, phi_map(a, ab), s) < 1e-12);
    for (const Vec& x : s.points) CHECK(b.zeta(a.group.identity(), x).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("Psi of a B element is the coboundary of gamma") {
  std::mt19937_64 rng(23);
  for (const auto& a : actions()) {
    SampleSet s = SampleSet::random(a, 6, 3, rng);
    PolyField mu = PolyField::random(a.group.dim(), a.n, rng);
    DoubleForm p = psi_map(a, b_element(a, mu));
    DoubleForm c = coboundary(a, gamma_form(mu));
    double m = 0;
    for (int t = 0; t < 6; ++t) {
      PointGM pt{{s.group[t % s.group.size()]}, s.points[t]};
      TangentGM u{{random_vec(a.group.dim(), rng)}, random_vec(a.n, rng)};
      TangentGM v{{random_vec(a.group.dim(), rng)}, random_vec(a.n, rng)};
      m = std::max(m, std::abs(p.alpha(pt, {u, v}) - c.alpha(pt, {u, v})));
    }
    CHECK(m < 1e-7);
    BFit fit = b_fit(a, phi_map(a, c), s);
    CHECK(fit.verdict == BFit::Verdict::InB);
  }
}

TEST_CASE("averaging removes zeta for compact groups") {
  std::mt19937_64 rng(24);
  const auto cq = GroupQuadrature::circle(128);
  const auto sq = GroupQuadrature::su2(12);
  for (int t = 0; t < 2; ++t) {
    const AnalyticAction a = t == 0 ? AnalyticAction::circle_weights({1, -1}) : AnalyticAction::adjoint(MatrixLieGroup::su2());
    SampleSet s = SampleSet::random(a, 6, 4, rng);
    ZBRep z = zb_normalize(a, b_element(a, PolyField::random(a.group.dim(), a.n, rng)), true, t == 0 ? &cq : &sq);
    double m = 0;
    for (const auto& x : s.points)
      for (const auto& g : s.group) m = std::max(m, z.representative.zeta(g, x).cwiseAbs().maxCoeff());
    CHECK(m < 1e-10);
    CHECK(z_residual(a, z.representative, s).max() < 1e-6);
  }
  const AnalyticAction a = AnalyticAction::circle_weights({1, -1});
  CHECK_THROWS_AS(zb_normalize(a, EZPair::zero(1), true, nullptr), MissingMeasure);
}

TEST_CASE("Psi rejects pairs outside Z") {
  std::mt19937_64 rng(25);
  const AnalyticAction a = AnalyticAction::circle_weights({1, -1});
  SampleSet s = SampleSet::random(a, 6, 4, rng);
  EZPair bad = EZPair::zero(1);
  bad.E = [](const Vec& x, const Vec& v) { return Vec::Constant(1, x[0] * v[1]); };
  CHECK(z_residual(a, bad, s).max() > 1e-3);
  CHECK_THROWS_AS(psi_map_checked(a, bad, s), NotInZ);
  CHECK(b_fit(a, bad, s).verdict == BFit::Verdict::NotInB);
}

TEST_CASE("moments of analytic gerbes") {
  std::mt19937_64 rng(26);
  SampleSet s = hopf_samples(20, 4, rng);
  AnalyticGerbe eg = hopf_gerbe(2);
  CHECK(invariance_residual(eg, s) < 1e-12);
  MomentField mf = solve_lambda(moment(eg, s), s);
  CHECK(lambda_residual(mf, s) < 1e-12);
  EZPair ez = ez_pair(eg, mf);
  CHECK(z_residual(eg.action, ez, s).max() < 1e-8);

  AnalyticGerbe bad = eg;
  bad.a[1] = [](const Vec&, const Vec& v) { return v[0]; };
  bad.da.clear();
  CHECK_THROWS_AS(moment(bad, s), NotEquivariant);
}

TEST_CASE("obstruction classes") {
  std::mt19937_64 rng(27);
  SampleSet s = hopf_samples(24, 4, rng);
  const auto q = GroupQuadrature::circle(64);
  ObstructionClass h = obstruction(hopf_gerbe(2), s, &q);
  CHECK(h.vanishes);
  CHECK(h.gauge_dim == 1);
  CHECK(h.witness_residual < 1e-8);

  AnalyticGerbe lt = toy_loop_gerbe(3, 1);
  SampleSet ls = SampleSet::random(lt.action, 20, 6, rng);
  ObstructionClass t = obstruction(lt, ls);
  CHECK_FALSE(t.vanishes);
  CHECK(t.fit.verdict == BFit::Verdict::NotInB);
  CHECK(t.fit.residual > kBFitReject);
  // the toy class is a genuine element of Z
  CHECK(z_residual(lt.action, t.ez, ls).max() < 1e-8);
  CHECK(double_cocycle_residual(lt.action, psi_map(lt.action, t.ez), ls).max() < 1e-6);
}

TEST_CASE("gauge dimensions") {
  CHECK(MatrixLieGroup::circle().dim() - MatrixLieGroup::circle().derived_dim() == 1);
  CHECK(MatrixLieGroup::su2().dim() - MatrixLieGroup::su2().derived_dim() == 0);
  CHECK(MatrixLieGroup::torus(3).derived_dim() == 0);
}
