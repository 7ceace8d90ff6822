#ifndef EQG_REDUCTION_HPP
#define EQG_REDUCTION_HPP

#include <functional>
#include <stdexcept>
#include <string>

#include "eqg/equivariant_analytic.hpp"

namespace eqg {

struct ObstructionNonzero : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInvariantizable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Indeterminate : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MomentMismatch : std::runtime_error {
  MomentMismatch(const std::string& what, Vec mu) : std::runtime_error(what), mu(std::move(mu)) {}
  Vec mu;  // sampled value of the moment mismatch
};

// Principal connection Xi in A^1(M, g), coordinates in the basis of g.
using GForm1 = std::function<Vec(const Vec& x, const Vec& v)>;
struct ConnectionResidual {
  double vertical = 0;     // iota_(X^*) Xi - X
  double equivariance = 0; // Xi(gx; gv) - Ad_g Xi(x; v)
};
ConnectionResidual connection_residual(const AnalyticAction& a, const GForm1& Xi, const SampleSet& s);

// Local sections of q: M -> M/G, with M/G embedded in R^m; lift and its differential.
struct Section {
  std::function<Vec(const Vec& p)> lift;
  std::function<Vec(const Vec& p, const Vec& u)> push;
};
using BaseForm1 = std::function<double(const Vec& p, const Vec& u)>;
using BaseForm2 = std::function<double(const Vec& p, const Vec& u, const Vec& v)>;
BaseForm1 descend(const Form1& w, const Section& s);
BaseForm2 descend(const Form2& w, const Section& s);

// Integrality test of a period: |period - round| < 1e-3 integer, > 1e-2 not integer, else indeterminate.
enum class Integrality { Integer, NonInteger, Indeterminate };
constexpr double kIntegerTol = 1e-3;
constexpr double kNonIntegerTol = 1e-2;
Integrality integrality(double period, double* distance = nullptr);
const char* to_string(Integrality v);

// kappa_i = <Xi|lambda_i>; NotInvariantizable if zeta of (eg, lambda) does not vanish on samples.
Form1 kappa_form(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi, int sheet, const SampleSet& s,
                 double tol = 1e-9);

// iota_(X^*)(nabla - delta kappa) and iota_(X^*)(f - d kappa) over basis X and samples.
struct DescentResidual {
  MaxResidual nabla;
  MaxResidual curving;
  double max() const { return std::max(nabla.max, curving.max); }
};
DescentResidual descent_residuals(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                  const SampleSet& s);

// (nabla-bar, f-bar) on M/G by evaluation through the section.
struct ReducedGerbe {
  AnalyticGerbe upstairs;
  MomentField lambda;
  GForm1 Xi;
  Section section;
  std::vector<Form1> kappa;
  DescentResidual residual;

  double nabla_bar(int i, int j, const Vec& p, const Vec& u) const;
  double curving_bar(int i, const Vec& p, const Vec& u, const Vec& v) const;
  BaseForm2 curving_bar(int i) const;
};
// ObstructionNonzero if (E, zeta) of lambda does not vanish within tol on samples.
ReducedGerbe reduce_with_connection(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                    const Section& sec, const SampleSet& s, double tol = 1e-6);

// Period of a 2-form on the quotient over its fundamental class.
using BasePeriod = std::function<double(const BaseForm2&)>;

struct LambdaComparison {
  Vec mu;                   // lambda' - lambda at the first sample (constant up to mu_variation)
  double mu_variation = 0;
  BaseForm2 sigma_bar;      // q^* sigma-bar = d<Xi|mu>
  double period = 0;        // of (-1/2 pi i)(-sigma-bar)
  double distance = 0;
  Integrality test = Integrality::Indeterminate;
  bool stably_isomorphic = false;
};
LambdaComparison compare_lambda_choices(const AnalyticGerbe& eg, const MomentField& lambda,
                                        const MomentField& lambda_prime, const GForm1& Xi, const Section& sec,
                                        const BasePeriod& period, const SampleSet& s);

// Reductions along Xi and Xi' differ by the 1-forms alpha_i = <Xi' - Xi|lambda_i> on the sheets:
// nabla-bar' - nabla-bar = -delta alpha-bar and f-bar' - f-bar = -d alpha-bar.
struct XiIndependence {
  double nabla_difference = 0;   // residual of the first relation
  double curving_vs_dalpha = 0;  // residual of the second relation
  double alpha_scale = 0;
  bool stably_isomorphic = true;
  std::vector<BaseForm1> witness;  // -alpha-bar_i
};
XiIndependence check_xi_independence(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                     const GForm1& Xi_prime, const Section& sec, const SampleSet& base_samples,
                                     const SampleSet& s);

// Pseudo T-bundle (R trivial over each sheet) with connection eta_i = eta + a_i, so delta eta = nabla.
struct PseudoBundle {
  Form1 eta;
};
struct ReducedPseudoBundle {
  Vec mu;                 // rho - lambda, zero on acceptance
  BaseForm1 eta_bar;      // q^* eta-bar = eta_0 - kappa_0
  BaseForm2 F_eta_bar;
  BaseForm2 omega_bar;    // q^* omega-bar = F(eta) - f
};
// MomentMismatch if rho - lambda != 0 on samples, rho = <.|eta(X^*)> the moment of eta.
ReducedPseudoBundle reduce_pseudo_bundle(const AnalyticGerbe& eg, const PseudoBundle& pb, const MomentField& mf,
                                         const GForm1& Xi, const Section& sec, const SampleSet& s,
                                         double tol = 1e-9);

}  // namespace eqg

#endif
