#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eqg/hopf.hpp"
#include "eqg/lens.hpp"
#include "eqg/reduction.hpp"
#include "eqg/reduction_discrete.hpp"

using namespace eqg;

namespace {

// Curvature of the Hopf bundle on the unit sphere: minus half the area form.
double F_oracle(const Vec& p, const Vec& u, const Vec& v) {
  const Vec3 a = p.head<3>(), b = u.head<3>(), c = v.head<3>();
  return -0.5 * a.dot(b.cross(c));
}

}  // namespace

TEST_CASE("discrete reduction on the lens space") {
  LensSpace L = lens_join(3);
  Subdivision sd = barycentric_subdivision(L.cover);
  auto act = L.action.on_subdivision(L.cover, sd);
  BlockModel bm = block_model(sd.complex, act, 1);
  GerbeData g = gerbe_from_cocycle(bm.em, *bm.nerve, bm.label_vertex,
                                   orbit_sum(sd.complex, act, unit_top_cocycle(sd.complex)));
  ReducedDiscrete r = reduce_topological(g);
  CHECK(validate(r.gerbe, false).ok);
  CHECK(integer_cohomology(*r.q.base, 2).to_string() == "Z/3");
  DescentReport rep = descent_report(g, r);
  CHECK(rep.pullback_matches);
  CHECK(rep.same_dd_class);
  CHECK(rep.deligne_witness);
  CHECK(rep.degree_relation());
  CHECK(abs(rep.period_up) == 3 * abs(rep.period_down));
}

TEST_CASE("Hopf curvature against the area form") {
  std::mt19937_64 rng(31);
  SampleSet b = sphere_samples(40, rng);
  const BaseForm2 F = hopf_curvature_bar();
  double m = 0;
  for (size_t k = 0; k < b.points.size(); ++k)
    m = std::max(m, std::abs(F(b.points[k], b.vectors[k], b.second_vector(k)) -
                             F_oracle(b.points[k], b.vectors[k], b.second_vector(k))));
  CHECK(m < 1e-9);
}

TEST_CASE("Hopf reduction: curving and integrality") {
  std::mt19937_64 rng(32);
  SampleSet b = sphere_samples(20, rng);
  for (double r : {-3.0, 0.0, 1.0, 2.0, 0.5, 1.25, -0.4}) {
    HopfReduction h = hopf_reduction(r);
    CHECK(h.trivial == (std::round(r) == r));
    CHECK(h.pointwise_residual < 1e-9);
    CHECK(h.descent.max() < 1e-9);
    CHECK(std::abs(std::abs(h.period) - std::abs(r)) < 1e-6);
    double m = 0;
    for (size_t k = 0; k < b.points.size(); ++k) {
      const Vec& p = b.points[k];
      const Vec& u = b.vectors[k];
      const Vec& v = b.second_vector(k);
      m = std::max(m, std::abs(h.fbar(p, u, v) - kHopfCurvingSign * r * F_oracle(p, u, v)));
    }
    CHECK(m < 1e-9);
  }
  CHECK_THROWS_AS(hopf_reduction(0.005), Indeterminate);
}

TEST_CASE("reduction along a perturbed connection") {
  HopfReduction h = hopf_reduction(1.5, 5, 64, 0, 0.2);
  CHECK_FALSE(h.trivial);
  CHECK(h.pointwise_residual < 1e-8);
  HopfReduction t = hopf_reduction(2.0, 5, 64, 0, 0.2);
  CHECK(t.trivial);
}

TEST_CASE("integrality thresholds") {
  double d = 0;
  CHECK(integrality(2.0005, &d) == Integrality::Integer);
  CHECK(d == doctest::Approx(0.0005));
  CHECK(integrality(-1.98) == Integrality::NonInteger);
  CHECK(integrality(3.005) == Integrality::Indeterminate);
}

TEST_CASE("lambda choices differing by an integer give isomorphic reductions") {
  std::mt19937_64 rng(33);
  SampleSet s = hopf_samples(16, 4, rng);
  AnalyticGerbe eg = hopf_gerbe(1);
  BasePeriod per = [](const BaseForm2& w) { return sphere_period(w, 4); };
  for (auto [a, b, iso] : std::vector<std::tuple<double, double, bool>>{{0, 2, true}, {0.5, -0.5, true}, {0, 0.5, false}, {1, 1.3, false}}) {
    LambdaComparison c = compare_lambda_choices(eg, hopf_lambda(eg, a, s), hopf_lambda(eg, b, s), hopf_connection(),
                                                hopf_section(), per, s);
    CHECK(c.stably_isomorphic == iso);
    CHECK(std::abs(c.mu[0] - (b - a)) < 1e-9);
    CHECK(c.mu_variation < 1e-9);
  }
}

TEST_CASE("independence of the connection Xi") {
  std::mt19937_64 rng(34);
  SampleSet s = hopf_samples(16, 4, rng);
  SampleSet bs = sphere_samples(30, rng);
  AnalyticGerbe eg = hopf_gerbe(2);
  XiIndependence x = check_xi_independence(eg, hopf_lambda(eg, 0.7, s), hopf_connection(), hopf_connection(0.3),
                                           hopf_section(), bs, s);
  CHECK(x.nabla_difference < 1e-9);
  CHECK(x.curving_vs_dalpha < 1e-8);
  CHECK(x.alpha_scale > 1e-2);
  CHECK(x.stably_isomorphic);
}

TEST_CASE("a nonvanishing obstruction blocks the reduction") {
  std::mt19937_64 rng(35);
  SampleSet s = hopf_samples(16, 4, rng);
  AnalyticGerbe eg = hopf_gerbe(1);
  DualFunction base = [](const Vec& x) { return Vec::Constant(1, x[0]); };
  MomentField mf = solve_lambda(moment(eg, s), s, base);
  CHECK_THROWS_AS(reduce_with_connection(eg, mf, hopf_connection(), hopf_section(), s), ObstructionNonzero);
}

TEST_CASE("principal connections") {
  std::mt19937_64 rng(36);
  SampleSet s = hopf_samples(30, 5, rng);
  for (double eps : {0.0, 0.4}) {
    ConnectionResidual c = connection_residual(hopf_action(), hopf_connection(eps), s);
    CHECK(c.vertical < 1e-12);
    CHECK(c.equivariance < 1e-12);
  }
}

TEST_CASE("pseudo-bundle reduction") {
  std::mt19937_64 rng(37);
  SampleSet s = hopf_samples(16, 4, rng);
  SampleSet bs = sphere_samples(30, rng);
  AnalyticGerbe eg = hopf_gerbe(1);
  const double r = 1.5;
  PseudoBundle pb{[r](const Vec& x, const Vec& v) { return r * hopf_xi(x, v); }};
  ReducedPseudoBundle rp = reduce_pseudo_bundle(eg, pb, hopf_lambda(eg, r, s), hopf_connection(), hopf_section(), s);
  CHECK(rp.mu.cwiseAbs().maxCoeff() < 1e-9);
  double fe = 0, om = 0;
  for (size_t k = 0; k < bs.points.size(); ++k) {
    const Vec& p = bs.points[k];
    const Vec& u = bs.vectors[k];
    const Vec& v = bs.second_vector(k);
    fe = std::max(fe, std::abs(rp.F_eta_bar(p, u, v)));
    om = std::max(om, std::abs(rp.omega_bar(p, u, v) - r * F_oracle(p, u, v)));
  }
  // eta - kappa vanishes on the single sheet, so eta-bar is flat; omega-bar carries r F(Xi)
  CHECK(fe < 1e-9);
  CHECK(om < 1e-8);
  try {
    reduce_pseudo_bundle(eg, pb, hopf_lambda(eg, r + 1, s), hopf_connection(), hopf_section(), s);
    FAIL("mismatched moment accepted");
  } catch (const MomentMismatch& e) {
    CHECK(e.mu[0] == doctest::Approx(-1.0));
  }
}
