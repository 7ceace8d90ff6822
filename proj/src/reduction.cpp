#include "eqg/reduction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace eqg {

namespace {

Vec basis_vec(int dim, int a) {
  Vec X = Vec::Zero(dim);
  X[a] = 1;
  return X;
}

}  // namespace

ConnectionResidual connection_residual(const AnalyticAction& a, const GForm1& Xi, const SampleSet& s) {
  ConnectionResidual r;
  const int dg = a.group.dim();
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const Vec& v = s.vector(p);
    for (int c = 0; c < dg; ++c) {
      const Vec X = basis_vec(dg, c);
      r.vertical = std::max(r.vertical, (Xi(x, a.fundamental(x, X)) - X).cwiseAbs().maxCoeff());
    }
    for (const CMat& g : s.group)
      r.equivariance = std::max(
          r.equivariance, (Xi(a.act(g, x), a.push(g, v)) - a.group.Ad(g) * Xi(x, v)).cwiseAbs().maxCoeff());
  }
  return r;
}

BaseForm1 descend(const Form1& w, const Section& s) {
  return [w, s](const Vec& p, const Vec& u) { return w(s.lift(p), s.push(p, u)); };
}

BaseForm2 descend(const Form2& w, const Section& s) {
  return [w, s](const Vec& p, const Vec& u, const Vec& v) { return w(s.lift(p), s.push(p, u), s.push(p, v)); };
}

Integrality integrality(double period, double* distance) {
  const double d = std::abs(period - std::round(period));
  if (distance) *distance = d;
  if (d < kIntegerTol) return Integrality::Integer;
  if (d > kNonIntegerTol) return Integrality::NonInteger;
  return Integrality::Indeterminate;
}

const char* to_string(Integrality v) {
  switch (v) {
    case Integrality::Integer:
      return "integer";
    case Integrality::NonInteger:
      return "non-integer";
    default:
      return "indeterminate";
  }
}

Form1 kappa_form(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi, int sheet, const SampleSet& s,
                 double tol) {
  const EZPair ez = ez_pair(eg, mf);
  double m = 0;
  for (const Vec& x : s.points)
    for (const CMat& g : s.group) m = std::max(m, ez.zeta(g, x).cwiseAbs().maxCoeff());
  if (m > tol) throw NotInvariantizable("zeta does not vanish: max " + std::to_string(m));
  const auto lam = mf.lambda;
  return [lam, Xi, sheet](const Vec& x, const Vec& v) { return lam(sheet, x).dot(Xi(x, v)); };
}

DescentResidual descent_residuals(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                  const SampleSet& s) {
  std::vector<Form1> kappa;
  for (int i = 0; i < eg.sheets(); ++i) kappa.push_back(kappa_form(eg, mf, Xi, i, s));
  DescentResidual r;
  const int dg = eg.action.group.dim();
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const Vec& v = s.vector(p);
    for (int c = 0; c < dg; ++c) {
      const Vec Xs = eg.action.fundamental(x, basis_vec(dg, c));
      for (int i = 0; i < eg.sheets(); ++i) {
        for (int j = i + 1; j < eg.sheets(); ++j)
          r.nabla.add(eg.nabla(i, j, x, Xs) - kappa[j](x, Xs) + kappa[i](x, Xs));
        r.curving.add(eg.curving(i, x, Xs, v) - d_form1(kappa[i], x, Xs, v));
      }
    }
  }
  return r;
}

double ReducedGerbe::nabla_bar(int i, int j, const Vec& p, const Vec& u) const {
  const Vec x = section.lift(p), v = section.push(p, u);
  return upstairs.nabla(i, j, x, v) - kappa[j](x, v) + kappa[i](x, v);
}

double ReducedGerbe::curving_bar(int i, const Vec& p, const Vec& u, const Vec& v) const {
  const Vec x = section.lift(p), a = section.push(p, u), b = section.push(p, v);
  return upstairs.curving(i, x, a, b) - d_form1(kappa[i], x, a, b);
}

BaseForm2 ReducedGerbe::curving_bar(int i) const {
  return [self = *this, i](const Vec& p, const Vec& u, const Vec& v) { return self.curving_bar(i, p, u, v); };
}

ReducedGerbe reduce_with_connection(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                    const Section& sec, const SampleSet& s, double tol) {
  const double d = ez_distance(eg.action, ez_pair(eg, mf), EZPair::zero(eg.action.group.dim()), s);
  if (d > tol) throw ObstructionNonzero("(E, zeta) of the supplied lambda does not vanish: " + std::to_string(d));
  ReducedGerbe r{eg, mf, Xi, sec, {}, {}};
  for (int i = 0; i < eg.sheets(); ++i) r.kappa.push_back(kappa_form(eg, mf, Xi, i, s));
  r.residual = descent_residuals(eg, mf, Xi, s);
  return r;
}

LambdaComparison compare_lambda_choices(const AnalyticGerbe& eg, const MomentField& lambda,
                                        const MomentField& lambda_prime, const GForm1& Xi, const Section& sec,
                                        const BasePeriod& period, const SampleSet& s) {
  if (lambda.sheets != eg.sheets() || lambda_prime.sheets != eg.sheets())
    throw std::invalid_argument("moment fields and gerbe have different sheet counts");
  LambdaComparison c;
  const auto l0 = lambda.lambda, l1 = lambda_prime.lambda;
  const DualFunction mu = [l0, l1](const Vec& x) { return Vec(l1(0, x) - l0(0, x)); };
  c.mu = mu(s.points.front());
  for (const Vec& x : s.points) c.mu_variation = std::max(c.mu_variation, (mu(x) - c.mu).cwiseAbs().maxCoeff());
  const Form1 pairing = [mu, Xi](const Vec& x, const Vec& v) { return mu(x).dot(Xi(x, v)); };
  c.sigma_bar = descend(d_form1(pairing), sec);
  c.period = period(c.sigma_bar) / (2 * std::numbers::pi);
  c.test = integrality(c.period, &c.distance);
  if (c.test == Integrality::Indeterminate)
    throw Indeterminate("period " + std::to_string(c.period) + " is within the indeterminate band");
  c.stably_isomorphic = c.test == Integrality::Integer;
  return c;
}

XiIndependence check_xi_independence(const AnalyticGerbe& eg, const MomentField& mf, const GForm1& Xi,
                                     const GForm1& Xi_prime, const Section& sec, const SampleSet& base_samples,
                                     const SampleSet& s) {
  const ReducedGerbe r0 = reduce_with_connection(eg, mf, Xi, sec, s);
  const ReducedGerbe r1 = reduce_with_connection(eg, mf, Xi_prime, sec, s);
  XiIndependence out;
  std::vector<Form1> alpha;
  const auto lam = mf.lambda;
  for (int i = 0; i < eg.sheets(); ++i) {
    alpha.push_back([lam, Xi, Xi_prime, i](const Vec& x, const Vec& v) { return lam(i, x).dot(Xi_prime(x, v) - Xi(x, v)); });
    const BaseForm1 ab = descend(alpha.back(), sec);
    out.witness.push_back([ab](const Vec& p, const Vec& u) { return -ab(p, u); });
  }
  for (size_t k = 0; k < base_samples.points.size(); ++k) {
    const Vec& p = base_samples.points[k];
    const Vec& u = base_samples.vector(k);
    const Vec& v = base_samples.second_vector(k);
    const Vec x = sec.lift(p), a = sec.push(p, u), b = sec.push(p, v);
    for (int i = 0; i < eg.sheets(); ++i) {
      out.alpha_scale = std::max(out.alpha_scale, std::abs(alpha[i](x, a)));
      for (int j = i + 1; j < eg.sheets(); ++j) {
        const double d = r1.nabla_bar(i, j, p, u) - r0.nabla_bar(i, j, p, u) + alpha[j](x, a) - alpha[i](x, a);
        out.nabla_difference = std::max(out.nabla_difference, std::abs(d));
      }
      const double d = r1.curving_bar(i, p, u, v) - r0.curving_bar(i, p, u, v) + d_form1(alpha[i], x, a, b);
      out.curving_vs_dalpha = std::max(out.curving_vs_dalpha, std::abs(d));
    }
  }
  return out;
}

ReducedPseudoBundle reduce_pseudo_bundle(const AnalyticGerbe& eg, const PseudoBundle& pb, const MomentField& mf,
                                         const GForm1& Xi, const Section& sec, const SampleSet& s, double tol) {
  const int dg = eg.action.group.dim();
  const Form1 eta0 = [pb, a0 = eg.a[0]](const Vec& x, const Vec& v) { return pb.eta(x, v) + a0(x, v); };
  Vec worst = Vec::Zero(dg);
  for (const Vec& x : s.points) {
    Vec rho(dg);
    for (int c = 0; c < dg; ++c) rho[c] = eta0(x, eg.action.fundamental(x, basis_vec(dg, c)));
    const Vec mu = rho - mf.lambda(0, x);
    if (mu.cwiseAbs().maxCoeff() > worst.cwiseAbs().maxCoeff()) worst = mu;
  }
  if (worst.cwiseAbs().maxCoeff() > tol)
    throw MomentMismatch("moment of eta differs from lambda: mu = " + std::to_string(worst[0]), worst);
  const Form1 kappa = kappa_form(eg, mf, Xi, 0, s);
  const Form1 diff = [eta0, kappa](const Vec& x, const Vec& v) { return eta0(x, v) - kappa(x, v); };
  const Form2 dd = d_form1(diff);
  const Form2 omega = [eta0, eg](const Vec& x, const Vec& u, const Vec& v) {
    return d_form1(eta0, x, u, v) - eg.curving(0, x, u, v);
  };
  ReducedPseudoBundle out;
  out.mu = worst;
  out.eta_bar = descend(diff, sec);
  out.F_eta_bar = descend(dd, sec);
  out.omega_bar = descend(omega, sec);
  return out;
}

}  // namespace eqg
