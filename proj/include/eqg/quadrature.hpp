#ifndef EQG_QUADRATURE_HPP
#define EQG_QUADRATURE_HPP

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "eqg/lie.hpp"

namespace eqg {

using Vec3 = Eigen::Vector3d;

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

// Subdivided icosahedron; faces are oriented by the outward normal.
struct Icosphere {
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> faces;
};
Icosphere icosphere(int level);

// 2-form on S^2 evaluated at p on tangent vectors u, v.
using SphereTwoForm = std::function<double(const Vec3& p, const Vec3& u, const Vec3& v)>;
enum class TriangleRule { Centroid, Dunavant7 };

// Integral over the projected triangles, with per-block partial sums combined in fixed order.
double integrate_sphere_omp(const Icosphere& s, const SphereTwoForm& w, TriangleRule rule = TriangleRule::Dunavant7);
double integrate_sphere_serial(const Icosphere& s, const SphereTwoForm& w,
                               TriangleRule rule = TriangleRule::Dunavant7);

// Chart g(eta, x1, x2) = [[cos eta e^(i x1), -sin eta e^(-i x2)], [sin eta e^(i x2), cos eta e^(-i x1)]],
// eta in [0, pi/2], x1, x2 in [0, 2 pi). The form is evaluated on left-trivialized tangents
// g^-1 dg / d(eta), g^-1 dg / d(x1), g^-1 dg / d(x2), in that order (positive orientation).
struct SU2Chart {
  CMat g;
  std::array<CMat, 3> tangent;
};
SU2Chart su2_chart(double eta, double x1, double x2);

using SU2ThreeForm = std::function<double(const CMat& g, const CMat& a, const CMat& b, const CMat& c)>;
enum class EtaRule { Gauss, Midpoint };
double integrate_su2_omp(const SU2ThreeForm& w, int n, EtaRule rule = EtaRule::Gauss);
double integrate_su2_serial(const SU2ThreeForm& w, int n, EtaRule rule = EtaRule::Gauss);

}  // namespace eqg

#endif
