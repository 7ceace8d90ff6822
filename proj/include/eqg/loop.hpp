#ifndef EQG_LOOP_HPP
#define EQG_LOOP_HPP

#include <functional>
#include <random>
#include <stdexcept>

#include "eqg/lie.hpp"

namespace eqg {

struct LevelMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ResolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// X(t) = a_0 + sum_(m=1..M) (a_m cos mt + b_m sin mt), coefficients in su(2) coordinates (basis T_a).
// coef columns: 0 -> a_0, 2m-1 -> a_m, 2m -> b_m.
struct LoopAlgebraElement {
  int k = 1;
  Eigen::Matrix<double, 3, Eigen::Dynamic> coef;

  int modes() const { return static_cast<int>((coef.cols() - 1) / 2); }
  Eigen::Vector3d value(double t) const;
  Eigen::Vector3d derivative(double t) const;
  CMat matrix(double t) const;
  CMat matrix_derivative(double t) const;

  static LoopAlgebraElement zero(int modes, int k);
  static LoopAlgebraElement random(int modes, int k, std::mt19937_64& rng);
};

LoopAlgebraElement operator+(const LoopAlgebraElement& a, const LoopAlgebraElement& b);
LoopAlgebraElement operator*(double s, const LoopAlgebraElement& a);
// pointwise bracket, computed in Fourier coefficients (modes add)
LoopAlgebraElement bracket(const LoopAlgebraElement& a, const LoopAlgebraElement& b);

// Imaginary part of c(X1, X2) = -(k sqrt(-1) / 2 pi) int Tr(X1 dX2), from Fourier coefficients.
double loop_cocycle_c(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2);
// Same integral by the trapezoid rule (oracle).
double loop_cocycle_c_quadrature(const LoopAlgebraElement& x1, const LoopAlgebraElement& x2, int grid);

// Smooth loop in SU(2) with its derivative.
struct Loop {
  std::function<void(double t, CMat& g, CMat& dg)> eval;
};
Loop identity_loop();
Loop one_parameter_loop(const Vec& xi);  // exp(t xi), xi with exp(2 pi xi) = 1
// product of h_j exp(t n_j T_3') h_j^-1 with even n_j, times a constant g_0
Loop random_loop(std::mt19937_64& rng, int factors = 3);

// Imaginary part of (Z(gamma)|X) = (k sqrt(-1) / 2 pi) int Tr(gamma^-1 dgamma X), trapezoid rule.
double loop_Z(const Loop& gamma, const LoopAlgebraElement& x, int grid = 2048);
// c(Ad_gamma X1, Ad_gamma X2) by the trapezoid rule
double loop_c_adjoint(const Loop& gamma, const LoopAlgebraElement& x1, const LoopAlgebraElement& x2, int grid = 2048);
// |c(Ad X1, Ad X2) - c(X1, X2) - (Z(gamma)|[X1, X2])|; ResolutionError above 1e-4
constexpr double kResolutionLimit = 1e-4;
double ad_relation_residual(const Loop& gamma, const LoopAlgebraElement& x1, const LoopAlgebraElement& x2,
                            int grid = 2048);

}  // namespace eqg

#endif
