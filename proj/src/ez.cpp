#include "eqg/ez.hpp"

#include <numbers>

namespace eqg {

EZPair EZPair::zero(int dim_g) {
  return {[dim_g](const Vec&, const Vec&) { return Vec(Vec::Zero(dim_g)); },
          [dim_g](const CMat&, const Vec&) { return Vec(Vec::Zero(dim_g)); }};
}

EZPair operator+(const EZPair& a, const EZPair& b) {
  return {[a, b](const Vec& x, const Vec& v) { return Vec(a.E(x, v) + b.E(x, v)); },
          [a, b](const CMat& g, const Vec& x) { return Vec(a.zeta(g, x) + b.zeta(g, x)); }};
}

EZPair operator-(const EZPair& a, const EZPair& b) {
  return {[a, b](const Vec& x, const Vec& v) { return Vec(a.E(x, v) - b.E(x, v)); },
          [a, b](const CMat& g, const Vec& x) { return Vec(a.zeta(g, x) - b.zeta(g, x)); }};
}

SampleSet SampleSet::random(const AnalyticAction& a, int npoints, int ngroup, std::mt19937_64& rng, double spread) {
  std::normal_distribution<double> d(0.0, spread);
  SampleSet s;
  for (int i = 0; i < npoints; ++i) {
    Vec x(a.n), v(a.n);
    for (int j = 0; j < a.n; ++j) {
      x[j] = d(rng);
      v[j] = d(rng);
    }
    s.points.push_back(x);
    s.vectors.push_back(v);
  }
  for (int i = 0; i < ngroup; ++i) s.group.push_back(a.group.random(rng));
  return s;
}

ZResidual z_residual(const AnalyticAction& a, const EZPair& ez, const SampleSet& s) {
  ZResidual r;
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const Vec& v = s.vector(p);
    for (const CMat& g : s.group) {
      const DualFunction zg = [&](const Vec& y) { return ez.zeta(g, y); };
      r.equivariance.add(Vec(ez.E(a.act(g, x), a.push(g, v)) - a.group.coAd(g) * ez.E(x, v) - directional(zg, x, v)));
      for (const CMat& h : s.group)
        r.cocycle.add(Vec(a.group.coAd(g) * ez.zeta(h, x) - ez.zeta(g * h, x) + ez.zeta(g, a.act(h, x))));
    }
  }
  return r;
}

EZPair b_element(const AnalyticAction& a, const PolyField& mu, const DualForm1& E0) {
  EZPair ez;
  ez.E = [mu, E0](const Vec& x, const Vec& v) {
    Vec e = mu.derivative(x, v);
    if (E0) e += E0(x, v);
    return e;
  };
  ez.zeta = [a, mu](const CMat& g, const Vec& x) { return Vec(mu(a.act(g, x)) - a.group.coAd(g) * mu(x)); };
  return ez;
}

DoubleForm psi_map(const AnalyticAction& a, const EZPair& ez) {
  DoubleForm out;
  // the bracket pairing <[X, Y]|.> is <X|E(x; Y^*)> - <X|d zeta((e, x); Y + 0)>
  out.alpha = {1, 2, [a, ez](const PointGM& p, const std::vector<TangentGM>& v) {
                 const Vec& X = v[0].X[0];
                 const Vec& Y = v[1].X[0];
                 const double h = kFiniteDifferenceStep;
                 const Vec dz = (ez.zeta(a.group.exp(h * Y), p.x) - ez.zeta(a.group.exp(-h * Y), p.x)) / (2 * h);
                 return X.dot(ez.E(p.x, v[1].V)) - Y.dot(ez.E(p.x, v[0].V)) + X.dot(ez.E(p.x, a.fundamental(p.x, Y))) -
                        X.dot(dz);
               }};
  out.beta = {2, 1, [ez](const PointGM& p, const std::vector<TangentGM>& v) {
                return v[0].X[0].dot(ez.zeta(p.g[1], p.x));
              }};
  return out;
}

DoubleForm psi_map_checked(const AnalyticAction& a, const EZPair& ez, const SampleSet& s, double tol) {
  const ZResidual r = z_residual(a, ez, s);
  if (r.max() > tol) throw NotInZ("pair is not in Z: residual " + std::to_string(r.max()));
  return psi_map(a, ez);
}

EZPair phi_map(const AnalyticAction& a, const DoubleForm& ab) {
  const CMat e = a.group.identity();
  const int dg = a.group.dim();
  const ProductForm beta = ab.beta;
  const ProductForm hbeta{1, 1, [beta, e](const PointGM& p, const std::vector<TangentGM>& v) {
                            PointGM q{{p.g[0], e}, p.x};
                            TangentGM t{{Vec::Zero(v[0].X[0].size()), v[0].X[0]}, Vec::Zero(p.x.size())};
                            return beta(q, {t});
                          }};
  const ProductForm eform = ab.alpha - exterior_derivative(a, hbeta);
  const ProductForm zform = ab.beta + simplicial_boundary(a, hbeta);
  EZPair ez;
  ez.E = [eform, e, dg](const Vec& x, const Vec& v) {
    Vec out(dg);
    const PointGM p{{e}, x};
    for (int i = 0; i < dg; ++i) {
      Vec X = Vec::Zero(dg);
      X[i] = 1;
      out[i] = eform(p, {group_vector(1, 0, X, static_cast<int>(x.size())), space_vector(1, v, dg)});
    }
    return out;
  };
  ez.zeta = [zform, e, dg](const CMat& g, const Vec& x) {
    Vec out(dg);
    const PointGM p{{e, g}, x};
    for (int i = 0; i < dg; ++i) {
      Vec X = Vec::Zero(dg);
      X[i] = 1;
      out[i] = zform(p, {group_vector(2, 0, X, static_cast<int>(x.size()))});
    }
    return out;
  };
  return ez;
}

namespace {

Vec random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

TangentGM random_tangent(int i, int dg, int n, std::mt19937_64& rng) {
  TangentGM t;
  for (int l = 0; l < i; ++l) t.X.push_back(random_vec(dg, rng));
  t.V = random_vec(n, rng);
  return t;
}

}  // namespace

DoubleResidual double_cocycle_residual(const AnalyticAction& a, const DoubleForm& ab, const SampleSet& s) {
  DoubleResidual r;
  std::mt19937_64 rng(7);
  const int dg = a.group.dim(), n = a.n;
  const ProductForm mixed = simplicial_boundary(a, ab.alpha) + exterior_derivative(a, ab.beta);
  const ProductForm delb = simplicial_boundary(a, ab.beta);
  const size_t ng = s.group.size();
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const CMat& g1 = s.group[p % ng];
    const CMat& g2 = s.group[(p + 1) % ng];
    const CMat& g3 = s.group[(p + 2) % ng];
    r.mixed.add(mixed({{g1, g2}, x}, {random_tangent(2, dg, n, rng), random_tangent(2, dg, n, rng)}));
    r.del_beta.add(delb({{g1, g2, g3}, x}, {random_tangent(3, dg, n, rng)}));
    r.filtration.add(ab.alpha({{g1}, x}, {space_vector(1, random_vec(n, rng), dg), space_vector(1, random_vec(n, rng), dg)}));
    r.filtration.add(ab.beta({{g1, g2}, x}, {space_vector(2, random_vec(n, rng), dg)}));
  }
  return r;
}

EZPair phi_map_checked(const AnalyticAction& a, const DoubleForm& ab, const SampleSet& s, double tol) {
  const DoubleResidual r = double_cocycle_residual(a, ab, s);
  if (r.max() > tol) throw NotCocycle("(alpha, beta) is not a cocycle: residual " + std::to_string(r.max()));
  return phi_map(a, ab);
}

ProductForm gamma_form(const PolyField& mu) {
  return {1, 1, [mu](const PointGM& p, const std::vector<TangentGM>& v) { return v[0].X[0].dot(mu(p.x)); }};
}

DoubleForm coboundary(const AnalyticAction& a, const ProductForm& gamma) {
  return {-1.0 * exterior_derivative(a, gamma), simplicial_boundary(a, gamma)};
}

double ez_distance(const AnalyticAction& a, const EZPair& x, const EZPair& y, const SampleSet& s) {
  (void)a;
  double m = 0;
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& pt = s.points[p];
    const Vec& v = s.vector(p);
    m = std::max(m, (x.E(pt, v) - y.E(pt, v)).cwiseAbs().maxCoeff());
    for (const CMat& g : s.group) m = std::max(m, (x.zeta(g, pt) - y.zeta(g, pt)).cwiseAbs().maxCoeff());
  }
  return m;
}

GroupQuadrature GroupQuadrature::circle(int n) {
  GroupQuadrature q;
  for (int j = 0; j < n; ++j) {
    CMat g(1, 1);
    g(0, 0) = std::polar(1.0, 2 * std::numbers::pi * j / n);
    q.nodes.push_back(g);
    q.weights.push_back(1.0 / n);
  }
  return q;
}

GroupQuadrature GroupQuadrature::cyclic(int n) { return circle(n); }

GroupQuadrature GroupQuadrature::torus(int dim, int n) {
  GroupQuadrature q;
  long total = 1;
  for (int d = 0; d < dim; ++d) total *= n;
  for (long idx = 0; idx < total; ++idx) {
    CMat g = CMat::Zero(dim, dim);
    long r = idx;
    for (int d = 0; d < dim; ++d) {
      g(d, d) = std::polar(1.0, 2 * std::numbers::pi * (r % n) / n);
      r /= n;
    }
    q.nodes.push_back(g);
    q.weights.push_back(1.0 / total);
  }
  return q;
}

GroupQuadrature GroupQuadrature::su2(int n) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  GroupQuadrature q;
  const double h = std::numbers::pi / 2;
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const double eta = h * (x[i] + 1) / 2;
    const double we = h * w[i] / 2 * std::sin(eta) * std::cos(eta);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        q.nodes.push_back(su2_chart(eta, 2 * std::numbers::pi * j / n, 2 * std::numbers::pi * k / n).g);
        q.weights.push_back(we);
        total += we;
      }
  }
  for (double& v : q.weights) v /= total;
  return q;
}

ZBRep zb_normalize(const AnalyticAction& a, const EZPair& ez, bool compact, const GroupQuadrature* q) {
  ZBRep r;
  if (!compact) {
    r.representative = ez;
    r.gauge = [dg = a.group.dim()](const Vec&) { return Vec(Vec::Zero(dg)); };
    r.gauge_note = "noncompact group: raw pair, mu = 0";
    return r;
  }
  if (!q || q->nodes.empty()) throw MissingMeasure("compact normalization needs a quadrature on G");
  std::vector<Mat> co;
  for (const CMat& g : q->nodes) co.push_back(a.group.coAd(g.inverse()));
  const GroupQuadrature quad = *q;
  const DualFunction mu = [ez, quad, co](const Vec& x) {
    Vec acc = Vec::Zero(co.front().rows());
    for (size_t j = 0; j < quad.nodes.size(); ++j) acc += quad.weights[j] * (co[j] * ez.zeta(quad.nodes[j], x));
    return acc;
  };
  const EZPair shift{[mu](const Vec& x, const Vec& v) { return directional(mu, x, v); },
                     [a, mu](const CMat& g, const Vec& x) { return Vec(mu(a.act(g, x)) - a.group.coAd(g) * mu(x)); }};
  r.representative = ez + shift;
  r.gauge = mu;
  r.gauge_note = "mu = sum_j w_j Ad_(g_j^-1) zeta(g_j) over " + std::to_string(q->nodes.size()) + " nodes";
  return r;
}

BFit b_fit(const AnalyticAction& a, const EZPair& ez, const SampleSet& s) {
  const int n = a.n, dg = a.group.dim();
  const int K = 1 + n + n * (n + 1) / 2;
  auto basis = [n, K](const Vec& x) {
    Vec phi(K);
    int k = 0;
    phi[k++] = 1;
    for (int j = 0; j < n; ++j) phi[k++] = x[j];
    for (int j = 0; j < n; ++j)
      for (int l = j; l < n; ++l) phi[k++] = x[j] * x[l];
    return phi;
  };
  auto dbasis = [n, K](const Vec& x, const Vec& v) {
    Vec phi(K);
    int k = 0;
    phi[k++] = 0;
    for (int j = 0; j < n; ++j) phi[k++] = v[j];
    for (int j = 0; j < n; ++j)
      for (int l = j; l < n; ++l) phi[k++] = v[j] * x[l] + x[j] * v[l];
    return phi;
  };
  std::vector<Vec> rows;
  std::vector<double> rhs;
  for (size_t p = 0; p < s.points.size(); ++p) {
    const Vec& x = s.points[p];
    const Vec& v = s.vector(p);
    const Vec dphi = dbasis(x, v), e = ez.E(x, v);
    for (int c = 0; c < dg; ++c) {
      Vec row = Vec::Zero(dg * K);
      row.segment(c * K, K) = dphi;
      rows.push_back(row);
      rhs.push_back(e[c]);
    }
    const Vec phix = basis(x);
    for (const CMat& g : s.group) {
      const Vec phig = basis(a.act(g, x));
      const Mat co = a.group.coAd(g);
      const Vec z = ez.zeta(g, x);
      for (int c = 0; c < dg; ++c) {
        Vec row = Vec::Zero(dg * K);
        row.segment(c * K, K) += phig;
        for (int b = 0; b < dg; ++b) row.segment(b * K, K) -= co(c, b) * phix;
        rows.push_back(row);
        rhs.push_back(z[c]);
      }
    }
  }
  Mat A(rows.size(), dg * K);
  Vec b(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    A.row(r) = rows[r].transpose();
    b[r] = rhs[r];
  }
  const Vec theta = A.completeOrthogonalDecomposition().solve(b);
  const double m = static_cast<double>(rows.size());
  BFit fit;
  fit.scale = b.norm() / std::sqrt(m);
  fit.residual = (A * theta - b).norm() / std::sqrt(m) / std::max(fit.scale, 1.0);
  fit.verdict = fit.residual < kBFitAccept ? BFit::Verdict::InB
                : fit.residual > kBFitReject ? BFit::Verdict::NotInB
                                             : BFit::Verdict::Indeterminate;
  fit.mu.c = Vec(dg);
  fit.mu.L = Mat(dg, n);
  for (int c = 0; c < dg; ++c) {
    const Vec t = theta.segment(c * K, K);
    int k = 0;
    fit.mu.c[c] = t[k++];
    for (int j = 0; j < n; ++j) fit.mu.L(c, j) = t[k++];
    Mat Q = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j)
      for (int l = j; l < n; ++l) {
        const double q = t[k++];
        if (j == l) {
          Q(j, j) = q;
        } else {
          Q(j, l) = Q(l, j) = q / 2;
        }
      }
    fit.mu.Q.push_back(Q);
  }
  return fit;
}

const char* to_string(BFit::Verdict v) {
  switch (v) {
    case BFit::Verdict::InB:
      return "in B";
    case BFit::Verdict::NotInB:
      return "not in B";
    default:
      return "indeterminate";
  }
}

}  // namespace eqg
