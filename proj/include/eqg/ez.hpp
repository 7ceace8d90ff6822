#ifndef EQG_EZ_HPP
#define EQG_EZ_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/analytic_forms.hpp"
#include "eqg/quadrature.hpp"

namespace eqg {

struct NotCocycle : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInZ : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingMeasure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (E, zeta): E a g*-valued 1-form on M, zeta(g) a g*-valued function on M.
struct EZPair {
  DualForm1 E;
  std::function<Vec(const CMat& g, const Vec& x)> zeta;

  static EZPair zero(int dim_g);
};

EZPair operator+(const EZPair& a, const EZPair& b);
EZPair operator-(const EZPair& a, const EZPair& b);

// Samples for pointwise checks: points of M, tangent vectors, group elements.
struct SampleSet {
  std::vector<Vec> points;
  std::vector<Vec> vectors;
  std::vector<CMat> group;
  std::vector<Vec> second;  // optional second vector per point; else the next point's vector

  const Vec& vector(size_t p) const { return vectors[p % vectors.size()]; }
  const Vec& second_vector(size_t p) const { return second.empty() ? vectors[(p + 1) % vectors.size()] : second[p]; }

  static SampleSet random(const AnalyticAction& a, int npoints, int ngroup, std::mt19937_64& rng,
                          double spread = 1.0);
};

struct MaxResidual {
  double max = 0;
  int samples = 0;
  void add(double r) {
    max = std::max(max, std::abs(r));
    ++samples;
  }
  void add(const Vec& v) { add(v.size() ? v.cwiseAbs().maxCoeff() : 0.0); }
};

// g*E - Ad_g E - d zeta(g) and Ad_g zeta(h) - zeta(gh) + h* zeta(g)
struct ZResidual {
  MaxResidual equivariance;
  MaxResidual cocycle;
  double max() const { return std::max(equivariance.max, cocycle.max); }
};
ZResidual z_residual(const AnalyticAction& a, const EZPair& ez, const SampleSet& s);

// (d mu + E0, g* mu - Ad_g mu); E0 must satisfy g* E0 = Ad_g E0.
EZPair b_element(const AnalyticAction& a, const PolyField& mu, const DualForm1& E0 = nullptr);

struct DoubleForm {
  ProductForm alpha;  // 2-form on G x M
  ProductForm beta;   // 1-form on G^2 x M
};
DoubleForm psi_map(const AnalyticAction& a, const EZPair& ez);
DoubleForm psi_map_checked(const AnalyticAction& a, const EZPair& ez, const SampleSet& s, double tol = 1e-6);
EZPair phi_map(const AnalyticAction& a, const DoubleForm& ab);
EZPair phi_map_checked(const AnalyticAction& a, const DoubleForm& ab, const SampleSet& s, double tol = 1e-6);

// del alpha + d beta = 0, del beta = 0, and alpha, beta in F^1 (vanishing on pure M-vectors)
struct DoubleResidual {
  MaxResidual mixed;
  MaxResidual del_beta;
  MaxResidual filtration;
  double max() const { return std::max({mixed.max, del_beta.max, filtration.max}); }
};
DoubleResidual double_cocycle_residual(const AnalyticAction& a, const DoubleForm& ab, const SampleSet& s);

// gamma((g, x); X + V) = <X|mu(x)>, and the coboundary (-d gamma, del gamma)
ProductForm gamma_form(const PolyField& mu);
DoubleForm coboundary(const AnalyticAction& a, const ProductForm& gamma);

// max |E - E'|, |zeta - zeta'| on samples
double ez_distance(const AnalyticAction& a, const EZPair& x, const EZPair& y, const SampleSet& s);

// Invariant measure on G by a finite rule.
struct GroupQuadrature {
  std::vector<CMat> nodes;
  std::vector<double> weights;

  static GroupQuadrature circle(int n);            // trapezoid on S^1
  static GroupQuadrature cyclic(int n);            // Z/n inside S^1, exact average
  static GroupQuadrature torus(int dim, int n);
  static GroupQuadrature su2(int n);               // Euler-angle product rule
};

struct ZBRep {
  EZPair representative;
  std::function<Vec(const Vec&)> gauge;  // mu used: rep = ez + (d mu, g* mu - Ad mu)
  std::string gauge_note;
};
// mu = sum_j w_j Ad_(g_j^-1) zeta(g_j); zeta of the result vanishes for compact G.
ZBRep zb_normalize(const AnalyticAction& a, const EZPair& ez, bool compact, const GroupQuadrature* q = nullptr);

// Least-squares fit of (E, zeta) = (d mu, g* mu - Ad mu) over mu of degree <= 2.
struct BFit {
  enum class Verdict { InB, NotInB, Indeterminate };
  Verdict verdict = Verdict::Indeterminate;
  double residual = 0;  // RMS over all sampled equations, relative to the data scale
  double scale = 0;
  PolyField mu;
};
constexpr double kBFitAccept = 1e-8;
constexpr double kBFitReject = 1e-4;
BFit b_fit(const AnalyticAction& a, const EZPair& ez, const SampleSet& s);
const char* to_string(BFit::Verdict v);

}  // namespace eqg

#endif
