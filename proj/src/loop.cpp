#include "eqg/loop.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

namespace eqg {

namespace {

CMat to_matrix(const Eigen::Vector3d& v) {
  const auto& T = su2_basis();
  return v[0] * T[0] + v[1] * T[1] + v[2] * T[2];
}

void check_level(const LoopAlgebraElement& a, const LoopAlgebraElement& b) {
  if (a.k != b.k) throw LevelMismatch("loop elements carry levels " + std::to_string(a.k) + " and " + std::to_string(b.k));
}

LoopAlgebraElement resized(const LoopAlgebraElement& a, int modes) {
  LoopAlgebraElement r = LoopAlgebraElement::zero(modes, a.k);
  r.coef.leftCols(a.coef.cols()) = a.coef;
  return r;
}

}  // namespace

Eigen::Vector3d LoopAlgebraElement::value(double t) const {
  Eigen::Vector3d v = coef.col(0);
  for (int m = 1; m <= modes(); ++m) v += coef.col(2 * m - 1) * std::cos(m * t) + coef.col(2 * m) * std::sin(m * t);
  return v;
}

Eigen::Vector3d LoopAlgebraElement::derivative(double t) const {
  Eigen::Vector3d v = Eigen::Vector3d::Zero();
  for (int m = 1; m <= modes(); ++m)
    v += m * (-coef.col(2 * m - 1) * std::sin(m * t) + coef.col(2 * m) * std::cos(m * t));
  return v;
}

CMat LoopAlgebraElement::matrix(double t) const { return to_matrix(value(t)); }
CMat LoopAlgebraElement::matrix_derivative(double t) const { return to_matrix(derivative(t)); }

LoopAlgebraElement LoopAlgebraElement::zero(int modes, int k) {
  LoopAlgebraElement x;
  x.k = k;
  x.coef = Eigen::Matrix<double, 3, Eigen::Dynamic>::Zero(3, 2 * modes + 1);
  return x;
}

LoopAlgebraElement LoopAlgebraElement::random(int modes, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  LoopAlgebraElement x = zero(modes, k);
  for (int c = 0; c < x.coef.cols(); ++c)
    for (int r = 0; r < 3; ++r) x.coef(r, c) = d(rng);
  return x;
}

LoopAlgebraElement operator+(const LoopAlgebraElement& a, const LoopAlgebraElement& b) {
  check_level(a, b);
  const int m = std::max(a.modes(), b.modes());
  LoopAlgebraElement r = resized(a, m);
  r.coef.leftCols(b.coef.cols()) += b.coef;
  return r;
}

LoopAlgebraElement operator*(double s, const LoopAlgebraElement& a) {
  LoopAlgebraElement r = a;
  r.coef *= s;
  return r;
}

LoopAlgebraElement bracket(const LoopAlgebraElement& a, const LoopAlgebraElement& b) {
  check_level(a, b);
  const int M = a.modes() + b.modes();
  LoopAlgebraElement r = LoopAlgebraElement::zero(M, a.k);
  // term u cos(mt) or sin(mt), with m = 0 the constant
  struct Term {
    int m;
    bool sine;
    Eigen::Vector3d v;
  };
  auto terms = [](const LoopAlgebraElement& x) {
    std::vector<Term> t{{0, false, x.coef.col(0)}};
    for (int m = 1; m <= x.modes(); ++m) {
      t.push_back({m, false, x.coef.col(2 * m - 1)});
      t.push_back({m, true, x.coef.col(2 * m)});
    }
    return t;
  };
  auto add = [&r](int m, bool sine, const Eigen::Vector3d& v) {
    if (m == 0) {
      if (!sine) r.coef.col(0) += v;
    } else if (m > 0) {
      r.coef.col(sine ? 2 * m : 2 * m - 1) += v;
    } else {
      if (sine)
        r.coef.col(-2 * m) -= v;
      else
        r.coef.col(-2 * m - 1) += v;
    }
  };
  for (const Term& p : terms(a))
    for (const Term& q : terms(b)) {
      const Eigen::Vector3d v = p.v.cross(q.v) / 2;
      const int s = p.m + q.m, d = p.m - q.m;
      if (!p.sine && !q.sine) {  // cos cos = (cos(s) + cos(d)) / 2
        add(s, false, v);
        add(d, false, v);
      } else if (p.sine && q.sine) {  // sin sin = (cos(d) - cos(s)) / 2
        add(d, false, v);
        add(s, false, -v);
      } else if (p.sine) {  // sin(p) cos(q) = (sin(s) + sin(d)) / 2
        add(s, true, v);
        add(d, true, v);
      } else {  // cos(p) sin(q) = (sin(s) - sin(d)) / 2
        add(s, true, v);
        add(d, true, -v);
      }
    }
  return r;
}

double loop_cocycle_c(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2) {
  check_level(x1, x2);
  const int M = std::min(x1.modes(), x2.modes());
  double s = 0;
  for (int m = 1; m <= M; ++m)
    s += m * (x1.coef.col(2 * m - 1).dot(x2.coef.col(2 * m)) - x1.coef.col(2 * m).dot(x2.coef.col(2 * m - 1)));
  return x1.k / 4.0 * s;
}

double loop_cocycle_c_quadrature(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2, int grid) {
  check_level(x1, x2);
  const double h = 2 * std::numbers::pi / grid;
  double s = 0;
  for (int j = 0; j < grid; ++j) s += (x1.matrix(j * h) * x2.matrix_derivative(j * h)).trace().real();
  return -x1.k / (2 * std::numbers::pi) * s * h;
}

Loop identity_loop() {
  return {[](double, CMat& g, CMat& dg) {
    g = CMat::Identity(2, 2);
    dg = CMat::Zero(2, 2);
  }};
}

Loop one_parameter_loop(const Vec& xi) {
  const CMat x = to_matrix(Eigen::Vector3d(xi[0], xi[1], xi[2]));
  return {[x](double t, CMat& g, CMat& dg) {
    g = (t * x).exp();
    dg = x * g;
  }};
}

Loop random_loop(std::mt19937_64& rng, int factors) {
  std::uniform_int_distribution<int> n(-2, 2);
  std::vector<CMat> h, xi;
  for (int j = 0; j < factors; ++j) {
    const CMat hj = su2_haar(rng);
    h.push_back(hj);
    xi.push_back(hj * (2.0 * n(rng) * su2_basis()[2]) * hj.adjoint());
  }
  const CMat g0 = su2_haar(rng);
  return {[xi, g0](double t, CMat& g, CMat& dg) {
    g = g0;
    dg = CMat::Zero(2, 2);
    for (const CMat& x : xi) {
      const CMat e = (t * x).exp();
      dg = dg * e + g * x * e;
      g = g * e;
    }
  }};
}

double loop_Z(const Loop& gamma, const LoopAlgebraElement& x, int grid) {
  const double h = 2 * std::numbers::pi / grid;
  CMat g, dg;
  double s = 0;
  for (int j = 0; j < grid; ++j) {
    gamma.eval(j * h, g, dg);
    s += (g.adjoint() * dg * x.matrix(j * h)).trace().real();
  }
  return x.k / (2 * std::numbers::pi) * s * h;
}

double loop_c_adjoint(const Loop& gamma, const LoopAlgebraElement& x1, const LoopAlgebraElement& x2, int grid) {
  check_level(x1, x2);
  const double h = 2 * std::numbers::pi / grid;
  CMat g, dg;
  double s = 0;
  for (int j = 0; j < grid; ++j) {
    const double t = j * h;
    gamma.eval(t, g, dg);
    const CMat gi = g.adjoint();
    const CMat X = x2.matrix(t);
    const CMat y1 = g * x1.matrix(t) * gi;
    const CMat dy2 = dg * X * gi + g * x2.matrix_derivative(t) * gi - g * X * gi * dg * gi;
    s += (y1 * dy2).trace().real();
  }
  return -x1.k / (2 * std::numbers::pi) * s * h;
}

double ad_relation_residual(const Loop& gamma, const LoopAlgebraElement& x1, const LoopAlgebraElement& x2, int grid) {
  const double r =
      std::abs(loop_c_adjoint(gamma, x1, x2, grid) - loop_cocycle_c(x1, x2) - loop_Z(gamma, bracket(x1, x2), grid));
  if (r > kResolutionLimit) throw ResolutionError("Ad-relation residual " + std::to_string(r) + " at grid " + std::to_string(grid));
  return r;
}

}  // namespace eqg
