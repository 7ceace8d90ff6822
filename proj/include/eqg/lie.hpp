#ifndef EQG_LIE_HPP
#define EQG_LIE_HPP

#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eqg {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;

// Matrix Lie group given by a basis of its Lie algebra. Lie algebra elements
// and dual vectors are coordinate vectors in this basis and its dual basis.
struct MatrixLieGroup {
  std::string name;
  std::vector<CMat> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  int size() const { return static_cast<int>(basis.front().rows()); }
  CMat identity() const { return CMat::Identity(size(), size()); }
  CMat algebra(const Vec& x) const;
  Vec coords(const CMat& a) const;  // least squares in the Frobenius inner product
  CMat exp(const Vec& x) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  Mat Ad(const CMat& g) const;       // on g
  Mat coAd(const CMat& g) const;     // on g*: <X|Ad_g f> = <Ad_{g^-1} X|f>
  CMat random(std::mt19937_64& rng, double scale = 1.0) const;
  // dim [g, g], from the span of all brackets of basis elements
  int derived_dim() const;

  static MatrixLieGroup circle();
  static MatrixLieGroup torus(int n);
  static MatrixLieGroup su2();
  static MatrixLieGroup translations(int n);  // R^n as unipotent (n+1)x(n+1) matrices
};

// su(2) basis T_a = -(i/2) sigma_a, so [T_a, T_b] = eps_abc T_c and Tr(T_a T_b) = -delta_ab / 2.
std::vector<CMat> su2_basis();
CMat su2_haar(std::mt19937_64& rng);

// Affine action of G on an open subset of R^n: g.x = A(g) x + b(g), given by a
// homogeneous (n+1)x(n+1) representation and its infinitesimal generators.
struct AnalyticAction {
  MatrixLieGroup group;
  int n = 0;
  std::function<Mat(const CMat&)> rep;
  std::vector<Mat> gen;  // d/dt rep(exp(t B_a)) at t = 0

  Vec act(const CMat& g, const Vec& x) const;
  Vec push(const CMat& g, const Vec& v) const;              // differential of x -> g.x
  Vec fundamental(const Vec& x, const Vec& X) const;        // X^* at x

  // S^1 on C^m = R^2m, z_j -> e^(i w_j t) z_j
  static AnalyticAction circle_weights(const std::vector<int>& w);
  // G on g = R^dim by Ad
  static AnalyticAction adjoint(const MatrixLieGroup& g);
  // R^d on R^n by x -> x + T X
  static AnalyticAction translation(const Mat& T);
};

}  // namespace eqg

#endif
