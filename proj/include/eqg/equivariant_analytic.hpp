#ifndef EQG_EQUIVARIANT_ANALYTIC_HPP
#define EQG_EQUIVARIANT_ANALYTIC_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/ez.hpp"
#include "eqg/gerbe_discrete.hpp"

namespace eqg {

struct NotEquivariant : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real forms on an open subset of R^n. Forms in sqrt(-1) A are stored by their imaginary part.
using Form1 = std::function<double(const Vec& x, const Vec& v)>;
using Form2 = std::function<double(const Vec& x, const Vec& u, const Vec& v)>;
double d_form1(const Form1& w, const Vec& x, const Vec& u, const Vec& v, double h = kFiniteDifferenceStep);
Form2 d_form1(const Form1& w, double h = kFiniteDifferenceStep);

// Strongly equivariant gerbe with Y = M x {0, ..., n-1} (G preserving sheets), P trivial with
// the trivial lift, s = 1, nabla_ij = a_j - a_i and curving f_i = f + d a_i, with a_i and f invariant.
struct AnalyticGerbe {
  std::string name;
  AnalyticAction action;
  std::vector<Form1> a;
  std::vector<Form2> da;  // optional exact d a_i; finite differences otherwise
  Form2 f;

  int sheets() const { return static_cast<int>(a.size()); }
  double nabla(int i, int j, const Vec& x, const Vec& v) const { return a[j](x, v) - a[i](x, v); }
  double curving(int i, const Vec& x, const Vec& u, const Vec& v) const;
};

// max |a_i(gx; gv) - a_i(x; v)|, |f(gx; gu, gv) - f(x; u, v)|
double invariance_residual(const AnalyticGerbe& eg, const SampleSet& s);

struct MomentField {
  int sheets = 1;
  int dim_g = 0;
  std::function<Vec(int i, int j, const Vec& x)> lambda_tilde;
  std::function<Vec(int i, const Vec& x)> lambda;
  std::string ambiguity;
};

// <X|lambda~(y1, y2)> = nabla(p; X^*); fails with NotEquivariant if nabla is not invariant.
MomentField moment(const AnalyticGerbe& eg, const SampleSet& s, double tol = 1e-9);
// lambda_i = lambda~_(0 i) + base, base defaulting to 0; NotClosed if delta lambda~ != 0.
MomentField solve_lambda(const MomentField& mf, const SampleSet& s, const DualFunction& base = nullptr,
                         double tol = 1e-9);
// max |lambda_j - lambda_i - lambda~_ij|
double lambda_residual(const MomentField& mf, const SampleSet& s);

// <X|E> = (1/2 pi)(<X|d lambda> + iota_(X^*) f), zeta(g) = (1/2 pi)(g^* lambda - Ad_g lambda), on sheet 0.
EZPair ez_pair(const AnalyticGerbe& eg, const MomentField& mf);

struct ObstructionClass {
  EZPair ez;
  ZBRep zb;
  BFit fit;
  bool vanishes = false;
  std::string verdict;
  DualFunction witness;       // base shift of lambda achieving (E, zeta) = 0
  double witness_residual = 0;
  int gauge_dim = 0;          // dim of {nu constant with Ad-invariance} = dim g - dim [g, g]
  bool witness_unique = false;
  std::string certificate;
};
ObstructionClass obstruction(const AnalyticGerbe& eg, const SampleSet& s, const GroupQuadrature* q = nullptr);

// Connections on R^(2M) (coefficients of A = sum a_m cos mt + b_m sin mt times H) under abelian loops
// X = sum (x_m cos mt + y_m sin mt) H acting by A -> A - dX, with constant curving
// f(b, a) = (k/2 pi) int Tr(a d^-1 b). Its class is the Lie-algebra cocycle c, so it does not vanish.
AnalyticGerbe toy_loop_gerbe(int modes, int k);

}  // namespace eqg

#endif
