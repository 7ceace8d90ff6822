#include "eqg/equivariant_analytic.hpp"

#include <numbers>

namespace eqg {

double d_form1(const Form1& w, const Vec& x, const Vec& u, const Vec& v, double h) {
  return (w(x + h * u, v) - w(x - h * u, v) - w(x + h * v, u) + w(x - h * v, u)) / (2 * h);
}

Form2 d_form1(const Form1& w, double h) {
  return [w, h](const Vec& x, const Vec& u, const Vec& v) { return d_form1(w, x, u, v, h); };
}

double AnalyticGerbe::curving(int i, const Vec& x, const Vec& u, const Vec& v) const {
  return f(x, u, v) + (i < static_cast<int>(da.size()) && da[i] ? da[i](x, u, v) : d_form1(a[i], x, u, v));
}

double invariance_residual(const AnalyticGerbe& eg, const SampleSet& s) {
  const AnalyticAction& act = eg.action;
  double m = 0;
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const Vec& u = s.vector(p);
    const Vec& v = s.second_vector(p);
    for (const CMat& g : s.group) {
      const Vec gx = act.act(g, x), gu = act.push(g, u), gv = act.push(g, v);
      for (const auto& a : eg.a) m = std::max(m, std::abs(a(gx, gu) - a(x, u)));
      m = std::max(m, std::abs(eg.f(gx, gu, gv) - eg.f(x, u, v)));
    }
  }
  return m;
}

MomentField moment(const AnalyticGerbe& eg, const SampleSet& s, double tol) {
  const double r = invariance_residual(eg, s);
  if (r > tol) throw NotEquivariant("connection or curving is not G-invariant: residual " + std::to_string(r));
  MomentField mf;
  mf.sheets = eg.sheets();
  mf.dim_g = eg.action.group.dim();
  const AnalyticGerbe g = eg;
  mf.lambda_tilde = [g](int i, int j, const Vec& x) {
    const int dg = g.action.group.dim();
    Vec out(dg);
    for (int a = 0; a < dg; ++a) {
      Vec X = Vec::Zero(dg);
      X[a] = 1;
      out[a] = g.nabla(i, j, x, g.action.fundamental(x, X));
    }
    return out;
  };
  return mf;
}

MomentField solve_lambda(const MomentField& mf, const SampleSet& s, const DualFunction& base, double tol) {
  double m = 0;
  for (const Vec& x : s.points)
    for (int i = 0; i < mf.sheets; ++i)
      for (int j = 0; j < mf.sheets; ++j)
        for (int k = 0; k < mf.sheets; ++k)
          m = std::max(m, (mf.lambda_tilde(j, k, x) - mf.lambda_tilde(i, k, x) + mf.lambda_tilde(i, j, x))
                              .cwiseAbs()
                              .maxCoeff());
  if (m > tol) throw NotClosed("delta lambda~ != 0: residual " + std::to_string(m));
  MomentField out = mf;
  const auto lt = mf.lambda_tilde;
  const int dg = mf.dim_g;
  out.lambda = [lt, base, dg](int i, const Vec& x) {
    Vec v = lt(0, i, x);
    if (base) v += base(x);
    return v;
  };
  out.ambiguity = "affine over A^0(M, g^dagger): lambda + pi^* nu for any nu";
  (void)dg;
  return out;
}

double lambda_residual(const MomentField& mf, const SampleSet& s) {
  double m = 0;
  for (const Vec& x : s.points)
    for (int i = 0; i < mf.sheets; ++i)
      for (int j = 0; j < mf.sheets; ++j)
        m = std::max(m, (mf.lambda(j, x) - mf.lambda(i, x) - mf.lambda_tilde(i, j, x)).cwiseAbs().maxCoeff());
  return m;
}

EZPair ez_pair(const AnalyticGerbe& eg, const MomentField& mf) {
  if (!mf.lambda) throw NotClosed("moment field carries no lambda");
  const double c = 1 / (2 * std::numbers::pi);
  const AnalyticAction act = eg.action;
  const auto lam = mf.lambda;
  const AnalyticGerbe g = eg;
  EZPair ez;
  ez.E = [g, lam, c](const Vec& x, const Vec& v) {
    const int dg = g.action.group.dim();
    const DualFunction l0 = [&](const Vec& y) { return lam(0, y); };
    Vec out = directional(l0, x, v);
    for (int a = 0; a < dg; ++a) {
      Vec X = Vec::Zero(dg);
      X[a] = 1;
      out[a] += g.curving(0, x, g.action.fundamental(x, X), v);
    }
    return Vec(c * out);
  };
  ez.zeta = [act, lam, c](const CMat& h, const Vec& x) {
    return Vec(c * (lam(0, act.act(h, x)) - act.group.coAd(h) * lam(0, x)));
  };
  return ez;
}

ObstructionClass obstruction(const AnalyticGerbe& eg, const SampleSet& s, const GroupQuadrature* q) {
  ObstructionClass oc;
  const MomentField mf = solve_lambda(moment(eg, s), s);
  oc.ez = ez_pair(eg, mf);
  oc.zb = zb_normalize(eg.action, oc.ez, q != nullptr, q);
  oc.fit = b_fit(eg.action, oc.zb.representative, s);
  const int dg = eg.action.group.dim();
  oc.gauge_dim = dg - eg.action.group.derived_dim();
  oc.witness_unique = oc.gauge_dim == 0;
  oc.vanishes = oc.fit.verdict == BFit::Verdict::InB;
  if (oc.vanishes) {
    const PolyField muf = oc.fit.mu;
    const DualFunction gauge = oc.zb.gauge;
    oc.witness = [muf, gauge](const Vec& x) { return Vec(-2 * std::numbers::pi * (muf(x) - gauge(x))); };
    const MomentField w = solve_lambda(moment(eg, s), s, oc.witness);
    const EZPair ezw = ez_pair(eg, w);
    oc.witness_residual = ez_distance(eg.action, ezw, EZPair::zero(dg), s);
    oc.verdict = "vanishes";
    oc.certificate = "witness lambda found; (E, zeta) residual " + std::to_string(oc.witness_residual);
  } else {
    oc.verdict = oc.fit.verdict == BFit::Verdict::NotInB ? "nonvanishing" : "indeterminate";
    oc.certificate = "no mu of degree <= 2 solves the B-equations: relative least-squares residual " +
                     std::to_string(oc.fit.residual);
  }
  return oc;
}

AnalyticGerbe toy_loop_gerbe(int modes, int k) {
  const int n = 2 * modes;
  Mat T = Mat::Zero(n, n);
  Mat F = Mat::Zero(n, n);
  for (int m = 1; m <= modes; ++m) {
    const int p = 2 * (m - 1), q = p + 1;
    T(q, p) = m;
    T(p, q) = -m;
    F(q, p) = k / (4.0 * m);
    F(p, q) = -k / (4.0 * m);
  }
  AnalyticGerbe g;
  g.name = "loop-toy";
  g.action = AnalyticAction::translation(T);
  g.a = {[](const Vec&, const Vec&) { return 0.0; }};
  g.f = [F](const Vec&, const Vec& u, const Vec& v) { return u.dot(F * v); };
  return g;
}

}  // namespace eqg
