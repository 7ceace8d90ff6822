#include "eqg/analytic_forms.hpp"

namespace eqg {

ProductForm operator+(const ProductForm& a, const ProductForm& b) {
  return {a.i, a.degree, [a, b](const PointGM& p, const std::vector<TangentGM>& v) { return a(p, v) + b(p, v); }};
}
ProductForm operator-(const ProductForm& a, const ProductForm& b) {
  return {a.i, a.degree, [a, b](const PointGM& p, const std::vector<TangentGM>& v) { return a(p, v) - b(p, v); }};
}
ProductForm operator*(double s, const ProductForm& a) {
  return {a.i, a.degree, [s, a](const PointGM& p, const std::vector<TangentGM>& v) { return s * a(p, v); }};
}
ProductForm zero_form(int i, int degree) {
  return {i, degree, [](const PointGM&, const std::vector<TangentGM>&) { return 0.0; }};
}

PointGM face_point(const AnalyticAction& a, const PointGM& p, int l) {
  const int i = static_cast<int>(p.g.size());
  PointGM q;
  if (l == 0) {
    q.g.assign(p.g.begin() + 1, p.g.end());
    q.x = p.x;
  } else if (l <= i - 1) {
    q.g = p.g;
    q.g[l - 1] = p.g[l - 1] * p.g[l];
    q.g.erase(q.g.begin() + l);
    q.x = p.x;
  } else {
    q.g.assign(p.g.begin(), p.g.end() - 1);
    q.x = a.act(p.g.back(), p.x);
  }
  return q;
}

TangentGM face_tangent(const AnalyticAction& a, const PointGM& p, const TangentGM& v, int l) {
  const int i = static_cast<int>(p.g.size());
  TangentGM w;
  if (l == 0) {
    w.X.assign(v.X.begin() + 1, v.X.end());
    w.V = v.V;
  } else if (l <= i - 1) {
    // d(g_l g_(l+1)) = g_l g_(l+1) (Ad_(g_(l+1)^-1) X_l + X_(l+1))
    w.X = v.X;
    w.X[l - 1] = a.group.Ad(p.g[l].inverse()) * v.X[l - 1] + v.X[l];
    w.X.erase(w.X.begin() + l);
    w.V = v.V;
  } else {
    w.X.assign(v.X.begin(), v.X.end() - 1);
    w.V = a.push(p.g.back(), a.fundamental(p.x, v.X.back()) + v.V);
  }
  return w;
}

ProductForm simplicial_boundary(const AnalyticAction& a, const ProductForm& w) {
  return {w.i + 1, w.degree, [a, w](const PointGM& p, const std::vector<TangentGM>& v) {
            double s = 0;
            const int top = static_cast<int>(p.g.size());
            for (int l = 0; l <= top; ++l) {
              std::vector<TangentGM> fv;
              for (const auto& t : v) fv.push_back(face_tangent(a, p, t, l));
              const double val = w(face_point(a, p, l), fv);
              s += (l % 2) ? -val : val;
            }
            return s;
          }};
}

namespace {

PointGM flow(const AnalyticAction& a, const PointGM& p, const TangentGM& v, double t) {
  PointGM q = p;
  for (size_t l = 0; l < p.g.size(); ++l) q.g[l] = p.g[l] * a.group.exp(t * v.X[l]);
  q.x = p.x + t * v.V;
  return q;
}

TangentGM bracket(const AnalyticAction& a, const TangentGM& u, const TangentGM& v) {
  TangentGM w;
  for (size_t l = 0; l < u.X.size(); ++l) w.X.push_back(a.group.bracket(u.X[l], v.X[l]));
  w.V = Vec::Zero(u.V.size());
  return w;
}

}  // namespace

ProductForm exterior_derivative(const AnalyticAction& a, const ProductForm& w, double h) {
  return {w.i, w.degree + 1, [a, w, h](const PointGM& p, const std::vector<TangentGM>& v) {
            const int k = static_cast<int>(v.size());
            double s = 0;
            for (int i = 0; i < k; ++i) {
              std::vector<TangentGM> rest;
              for (int j = 0; j < k; ++j)
                if (j != i) rest.push_back(v[j]);
              const double d = (w(flow(a, p, v[i], h), rest) - w(flow(a, p, v[i], -h), rest)) / (2 * h);
              s += (i % 2) ? -d : d;
            }
            for (int i = 0; i < k; ++i)
              for (int j = i + 1; j < k; ++j) {
                std::vector<TangentGM> rest{bracket(a, v[i], v[j])};
                for (int l = 0; l < k; ++l)
                  if (l != i && l != j) rest.push_back(v[l]);
                const double val = w(p, rest);
                s += ((i + j) % 2) ? -val : val;
              }
            return s;
          }};
}

TangentGM group_vector(int i, int slot, const Vec& X, int n) {
  TangentGM t;
  for (int l = 0; l < i; ++l) t.X.push_back(l == slot ? X : Vec::Zero(X.size()));
  t.V = Vec::Zero(n);
  return t;
}

TangentGM space_vector(int i, const Vec& V, int dim_g) {
  TangentGM t;
  for (int l = 0; l < i; ++l) t.X.push_back(Vec::Zero(dim_g));
  t.V = V;
  return t;
}

Vec directional(const DualFunction& f, const Vec& x, const Vec& V, double h) {
  return (f(x + h * V) - f(x - h * V)) / (2 * h);
}

DualForm1 exterior_derivative(const DualFunction& f, double h) {
  return [f, h](const Vec& x, const Vec& V) { return directional(f, x, V, h); };
}

PolyField PolyField::random(int dim_g, int n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> d(0.0, scale);
  PolyField p;
  p.c = Vec(dim_g);
  p.L = Mat(dim_g, n);
  for (int a = 0; a < dim_g; ++a) {
    p.c[a] = d(rng);
    for (int j = 0; j < n; ++j) p.L(a, j) = d(rng);
    Mat q(n, n);
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s) q(r, s) = d(rng);
    p.Q.push_back(0.5 * (q + q.transpose()));
  }
  return p;
}

Vec PolyField::operator()(const Vec& x) const {
  Vec v = c + L * x;
  for (size_t a = 0; a < Q.size(); ++a) v[a] += x.dot(Q[a] * x);
  return v;
}

Vec PolyField::derivative(const Vec& x, const Vec& V) const {
  Vec v = L * V;
  for (size_t a = 0; a < Q.size(); ++a) v[a] += 2 * x.dot(Q[a] * V);
  return v;
}

}  // namespace eqg
