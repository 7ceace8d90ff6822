#ifndef EQG_HOPF_HPP
#define EQG_HOPF_HPP

#include "eqg/quadrature.hpp"
#include "eqg/reduction.hpp"

namespace eqg {

// S^1 acting on S^3 in C^2 = R^4, coordinates (x1, y1, x2, y2), by (a, b) -> (e^(it) a, e^(-it) b).
// Xi = sqrt(-1) xi with xi = (x1 dy1 - y1 dx1) - (x2 dy2 - y2 dx2), so xi(X^*) = 1 on S^3.
// q(a, b) = (2ab, |a|^2 - |b|^2) in S^2 in R^3, oriented by the outward normal.
// Sign convention: kappa_r = r Xi gives f-bar_r = -r F(Xi); integrality tests do not see the sign.
constexpr double kHopfCurvingSign = -1.0;

AnalyticAction hopf_action();
double hopf_xi(const Vec& x, const Vec& v);
double hopf_dxi(const Vec& x, const Vec& u, const Vec& v);
Vec3 hopf_q(const Vec& x);
Mat hopf_dq(const Vec& x);  // 3 x 4
// q^*(p3 dp1), invariant and horizontal, with its exterior derivative q^*(dp3 ^ dp1)
double hopf_basic(const Vec& x, const Vec& v);
double hopf_dbasic(const Vec& x, const Vec& u, const Vec& v);

// charts: a real positive for p3 >= 0, b real positive otherwise
Section hopf_section();
GForm1 hopf_connection(double eps = 0.0);  // xi + eps q^*(p3 dp1)

// Y = M (sheets = 1) or Y = M x {0, 1} with a_1 = 0.7 xi + 0.3 q^*(p3 dp1); f = 0.
AnalyticGerbe hopf_gerbe(int sheets = 1);
MomentField hopf_lambda(const AnalyticGerbe& eg, double r, const SampleSet& s);  // base lambda_r(z) = r z

SampleSet hopf_samples(int npoints, int ngroup, std::mt19937_64& rng);
SampleSet sphere_samples(int npoints, std::mt19937_64& rng);

// F(Xi)-bar as the coefficient of sqrt(-1), and the period of a base 2-form over S^2
BaseForm2 hopf_curvature_bar(double eps = 0.0);  // of hopf_connection(eps)
double sphere_period(const BaseForm2& w, int level = 5, bool parallel = true,
                     TriangleRule rule = TriangleRule::Dunavant7);
// int_(S^2) (-1/2 pi i) F(Xi); orientation = -1 reverses S^2
double euler_period(int level = 6, int orientation = 1, bool parallel = true,
                    TriangleRule rule = TriangleRule::Dunavant7);

struct HopfReduction {
  double r = 0;
  BaseForm2 fbar;
  double pointwise_residual = 0;  // max |f-bar - kHopfCurvingSign r F(Xi)-bar| on samples
  double period = 0;              // of (-1/2 pi i) f-bar
  double distance = 0;
  bool trivial = false;
  DescentResidual descent;
};
// Indeterminate if the period falls between the thresholds.
HopfReduction hopf_reduction(double r, int level = 5, int samples = 64, unsigned seed = 0, double xi_eps = 0.0);

}  // namespace eqg

#endif
