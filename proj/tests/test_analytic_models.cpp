#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eqg/hopf.hpp"
#include "eqg/loop.hpp"
#include "eqg/quadrature.hpp"
#include "eqg/su2.hpp"

using namespace eqg;

namespace {

constexpr double kPi = std::numbers::pi;

double area_form(const Vec3& p, const Vec3& u, const Vec3& v) { return p.dot(u.cross(v)); }

}  // namespace

TEST_CASE("Gauss-Legendre rules are exact on polynomials") {
  for (int n : {2, 4, 7}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    for (int d = 0; d < 2 * n; ++d) {
      double s = 0;
      for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], d);
      const double exact = d % 2 ? 0.0 : 2.0 / (d + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
  }
}

TEST_CASE("icosphere faces are oriented outward") {
  for (int level : {0, 2}) {
    const Icosphere s = icosphere(level);
    for (const auto& f : s.faces) {
      const Vec3 a = s.vertices[f[0]], b = s.vertices[f[1]], c = s.vertices[f[2]];
      CHECK((b - a).cross(c - a).dot(a + b + c) > 0);
    }
  }
}

TEST_CASE("sphere area and convergence order") {
  std::vector<double> err;
  for (int level = 1; level <= 4; ++level)
    err.push_back(std::abs(integrate_sphere_serial(icosphere(level), area_form, TriangleRule::Centroid) - 4 * kPi));
  for (size_t i = 1; i < err.size(); ++i) CHECK(std::log2(err[i - 1] / err[i]) > 1.9);
  CHECK(std::abs(integrate_sphere_serial(icosphere(5), area_form) - 4 * kPi) < 1e-6);
}

TEST_CASE("parallel and serial sphere quadrature agree") {
  const Icosphere s = icosphere(5);
  const SphereTwoForm w = [](const Vec3& p, const Vec3& u, const Vec3& v) {
    return (1 + p[0] * p[2] + std::sin(p[1])) * p.dot(u.cross(v));
  };
  for (TriangleRule r : {TriangleRule::Centroid, TriangleRule::Dunavant7})
  {
    const double a = integrate_sphere_omp(s, w, r);
    CHECK(a == integrate_sphere_omp(s, w, r));
    CHECK(std::abs(a - integrate_sphere_serial(s, w, r)) < 1e-12);
  }
}

TEST_CASE("Euler period and orientation") {
  CHECK(std::abs(euler_period(6) - 1.0) < 1e-5);
  CHECK(std::abs(euler_period(5, -1) + 1.0) < 1e-5);
  CHECK(std::abs(euler_period(4, 1, true) - euler_period(4, 1, false)) < 1e-13);
  std::vector<double> err;
  for (int level = 1; level <= 4; ++level) err.push_back(std::abs(euler_period(level, 1, false, TriangleRule::Centroid) - 1));
  for (size_t i = 1; i < err.size(); ++i) CHECK(std::log2(err[i - 1] / err[i]) > 1.9);
}

TEST_CASE("SU(2) period of chi") {
  for (int k : {0, 1, 2, 5}) CHECK(std::abs(su2_chi_period(k) - k) < 1e-9);
  CHECK(su2_chi_period(3, 8, true) == doctest::Approx(su2_chi_period(3, 8, false)).epsilon(1e-14));
  std::vector<double> err;
  for (int n : {4, 8, 16, 32}) err.push_back(std::abs(su2_chi_period(1, n, true, EtaRule::Midpoint) - 1));
  for (size_t i = 1; i < err.size(); ++i) CHECK(std::log2(err[i - 1] / err[i]) > 1.9);
}

TEST_CASE("serial SU(2) quadrature") {
  const SU2ThreeForm w = [](const CMat& g, const CMat& a, const CMat& b, const CMat& c) {
    (void)g;
    return su2_chi(1, a, b, c);
  };
  CHECK(std::abs(integrate_su2_serial(w, 12) - 1.0) < 1e-9);
  CHECK(std::abs(integrate_su2_omp(w, 12, EtaRule::Midpoint) - integrate_su2_serial(w, 12, EtaRule::Midpoint)) < 1e-12);
}

TEST_CASE("e is a primitive of chi for the conjugation action") {
  std::mt19937_64 rng(41);
  for (int k : {1, 4}) {
    SU2Residuals r = su2_form_residuals(k, 60, rng);
    CHECK(r.de_vs_chi < 1e-8);
    CHECK(r.equivariance < 1e-12);
  }
}

TEST_CASE("loop algebra cocycle") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    auto a = LoopAlgebraElement::random(3, 2, rng), b = LoopAlgebraElement::random(3, 2, rng),
         c = LoopAlgebraElement::random(3, 2, rng);
    CHECK(std::abs(loop_cocycle_c(a, b) + loop_cocycle_c(b, a)) < 1e-12);
    CHECK(std::abs(loop_cocycle_c(bracket(a, b), c) + loop_cocycle_c(bracket(b, c), a) +
                   loop_cocycle_c(bracket(c, a), b)) < 1e-12);
    CHECK(std::abs(loop_cocycle_c(a, b) - loop_cocycle_c_quadrature(a, b, 64)) < 1e-12);
    for (double s : {0.2, 2.9, 5.5})
      CHECK((bracket(a, b).value(s) - a.value(s).cross(b.value(s))).norm() < 1e-12);
    CHECK(std::abs(loop_cocycle_c(2.0 * a + b, c) - 2 * loop_cocycle_c(a, c) - loop_cocycle_c(b, c)) < 1e-12);
  }
  // c vanishes on constant loops
  auto x = LoopAlgebraElement::zero(2, 1), y = LoopAlgebraElement::zero(2, 1);
  x.coef.col(0) << 1, 2, 3;
  y.coef.col(0) << -1, 0, 4;
  CHECK(loop_cocycle_c(x, y) == 0);
}

TEST_CASE("levels must match") {
  std::mt19937_64 rng(43);
  auto a = LoopAlgebraElement::random(2, 1, rng), b = LoopAlgebraElement::random(2, 2, rng);
  CHECK_THROWS_AS(loop_cocycle_c(a, b), LevelMismatch);
}

TEST_CASE("Ad relation of the loop cocycle") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 5; ++t) {
    auto a = LoopAlgebraElement::random(3, 1, rng), b = LoopAlgebraElement::random(3, 1, rng);
    CHECK(ad_relation_residual(random_loop(rng), a, b) < 1e-8);
    CHECK(ad_relation_residual(identity_loop(), a, b) < 1e-12);
  }
  auto a = LoopAlgebraElement::random(4, 1, rng), b = LoopAlgebraElement::random(4, 1, rng);
  CHECK_THROWS_AS(ad_relation_residual(random_loop(rng), a, b, 8), ResolutionError);
}

TEST_CASE("Z of a one-parameter loop") {
  Vec xi(3);
  xi << 0, 0, 4;
  for (int k : {1, 3}) {
    auto X = LoopAlgebraElement::zero(2, k);
    X.coef.col(0) << 0.3, -0.2, 0.7;
    // k Tr(xi X) with Tr(T_a T_b) = -delta_ab / 2
    CHECK(loop_Z(one_parameter_loop(xi), X) == doctest::Approx(k * -0.5 * 4 * 0.7).epsilon(1e-12));
  }
}
