#include "eqg/su2.hpp"

#include <numbers>

namespace eqg {

namespace {
const double kPi2 = std::numbers::pi * std::numbers::pi;
}

double su2_chi(int k, const CMat& a, const CMat& b, const CMat& c) {
  const double tr = 3 * ((a * b * c).trace() - (a * c * b).trace()).real();
  return -k / (24 * kPi2) * tr;
}

Vec su2_e(int k, const CMat& g, const Vec& V) {
  const auto& T = su2_basis();
  CMat v = CMat::Zero(2, 2);
  for (int i = 0; i < 3; ++i) v += V[i] * T[i];
  const CMat s = g * v * g.adjoint() + v;
  Vec out(3);
  for (int a = 0; a < 3; ++a) out[a] = -k / (8 * kPi2) * (s * T[a]).trace().real();
  return out;
}

SU2FormPack su2_forms(int k) {
  SU2FormPack p;
  p.k = k;
  p.point.group = MatrixLieGroup::su2();
  p.point.n = 0;
  p.point.rep = [](const CMat&) { return Mat(Mat::Identity(1, 1)); };
  p.point.gen.assign(3, Mat::Zero(1, 1));
  const MatrixLieGroup G = p.point.group;
  p.chi = {1, 3, [G, k](const PointGM&, const std::vector<TangentGM>& v) {
             return su2_chi(k, G.algebra(v[0].X[0]), G.algebra(v[1].X[0]), G.algebra(v[2].X[0]));
           }};
  for (int a = 0; a < 3; ++a)
    p.e.push_back({1, 1, [k, a](const PointGM& pt, const std::vector<TangentGM>& v) {
                     return su2_e(k, pt.g[0], v[0].X[0])[a];
                   }});
  return p;
}

double su2_chi_period(int k, int n, bool parallel, EtaRule rule) {
  const SU2ThreeForm w = [k](const CMat&, const CMat& a, const CMat& b, const CMat& c) {
    return su2_chi(k, a, b, c);
  };
  return parallel ? integrate_su2_omp(w, n, rule) : integrate_su2_serial(w, n, rule);
}

SU2Residuals su2_form_residuals(int k, int npoints, std::mt19937_64& rng) {
  const SU2FormPack p = su2_forms(k);
  const MatrixLieGroup& G = p.point.group;
  std::normal_distribution<double> d(0.0, 1.0);
  auto rv = [&] {
    Vec v(3);
    for (int i = 0; i < 3; ++i) v[i] = d(rng);
    return v;
  };
  auto tangent = [](const Vec& X) { return TangentGM{{X}, Vec(0)}; };
  std::vector<ProductForm> de;
  for (const auto& e : p.e) de.push_back(exterior_derivative(p.point, e));
  SU2Residuals r;
  for (int s = 0; s < npoints; ++s) {
    const CMat g = su2_haar(rng);
    const PointGM pt{{g}, Vec(0)};
    const Vec u = rv(), v = rv();
    for (int a = 0; a < 3; ++a) {
      Vec X = Vec::Zero(3);
      X[a] = 1;
      const Vec Xs = G.Ad(g.adjoint()) * X - X;
      const double lhs = de[a](pt, {tangent(u), tangent(v)});
      const double rhs = p.chi(pt, {tangent(Xs), tangent(u), tangent(v)});
      r.de_vs_chi = std::max(r.de_vs_chi, std::abs(lhs - rhs));
    }
    const CMat h = su2_haar(rng);
    const Vec lhs = su2_e(k, h * g * h.adjoint(), G.Ad(h) * u);
    const Vec rhs = G.coAd(h) * su2_e(k, g, u);
    r.equivariance = std::max(r.equivariance, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  return r;
}

}  // namespace eqg
