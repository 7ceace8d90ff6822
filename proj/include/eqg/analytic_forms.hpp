#ifndef EQG_ANALYTIC_FORMS_HPP
#define EQG_ANALYTIC_FORMS_HPP

#include <functional>
#include <vector>

#include "eqg/lie.hpp"

namespace eqg {

constexpr double kFiniteDifferenceStep = 1e-5;

// Point (g_1, ..., g_i, x) of G^i x M and a tangent vector there, with the
// G-components left-trivialized (g_l X_l) and the M-component in R^n.
struct PointGM {
  std::vector<CMat> g;
  Vec x;
};
struct TangentGM {
  std::vector<Vec> X;
  Vec V;
};

// Real k-form on G^i x M. Forms in sqrt(-1) A are stored by their imaginary part.
struct ProductForm {
  int i = 0;
  int degree = 0;
  std::function<double(const PointGM&, const std::vector<TangentGM>&)> eval;

  double operator()(const PointGM& p, const std::vector<TangentGM>& v) const { return eval(p, v); }
};

ProductForm operator+(const ProductForm& a, const ProductForm& b);
ProductForm operator-(const ProductForm& a, const ProductForm& b);
ProductForm operator*(double s, const ProductForm& a);
ProductForm zero_form(int i, int degree);

// face maps of G^. x M: d_0 drops g_1, d_l multiplies g_l g_(l+1), d_(i+1) acts by g_(i+1) on x
PointGM face_point(const AnalyticAction& a, const PointGM& p, int l);
TangentGM face_tangent(const AnalyticAction& a, const PointGM& p, const TangentGM& v, int l);

// sum_l (-1)^l d_l^* : forms on G^i x M -> forms on G^(i+1) x M
ProductForm simplicial_boundary(const AnalyticAction& a, const ProductForm& w);
// exterior derivative by central differences along left-invariant and constant fields
ProductForm exterior_derivative(const AnalyticAction& a, const ProductForm& w, double h = kFiniteDifferenceStep);

TangentGM group_vector(int i, int slot, const Vec& X, int n);  // X in slot, zero elsewhere
TangentGM space_vector(int i, const Vec& V, int dim_g);        // V on M, zero on G

// g*-valued data on M
using DualFunction = std::function<Vec(const Vec& x)>;
using DualForm1 = std::function<Vec(const Vec& x, const Vec& V)>;
Vec directional(const DualFunction& f, const Vec& x, const Vec& V, double h = kFiniteDifferenceStep);
DualForm1 exterior_derivative(const DualFunction& f, double h = kFiniteDifferenceStep);

// g*-valued polynomial of degree <= 2 on R^n with exact derivative
struct PolyField {
  Vec c;                  // dim_g
  Mat L;                  // dim_g x n
  std::vector<Mat> Q;     // per component, symmetric n x n; value x^T Q x

  static PolyField random(int dim_g, int n, std::mt19937_64& rng, double scale = 1.0);
  Vec operator()(const Vec& x) const;
  Vec derivative(const Vec& x, const Vec& V) const;
};

}  // namespace eqg

#endif
