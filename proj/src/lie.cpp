#include "eqg/lie.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace eqg {

CMat MatrixLieGroup::algebra(const Vec& x) const {
  CMat a = CMat::Zero(size(), size());
  for (int i = 0; i < dim(); ++i) a += x[i] * basis[i];
  return a;
}

Vec MatrixLieGroup::coords(const CMat& a) const {
  const int d = dim();
  Mat gram(d, d);
  Vec rhs(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) gram(i, j) = (basis[i].adjoint() * basis[j]).trace().real();
    rhs[i] = (basis[i].adjoint() * a).trace().real();
  }
  return gram.ldlt().solve(rhs);
}

CMat MatrixLieGroup::exp(const Vec& x) const { return algebra(x).exp(); }

Vec MatrixLieGroup::bracket(const Vec& x, const Vec& y) const {
  const CMat a = algebra(x), b = algebra(y);
  return coords(a * b - b * a);
}

Mat MatrixLieGroup::Ad(const CMat& g) const {
  const CMat gi = g.inverse();
  Mat m(dim(), dim());
  for (int a = 0; a < dim(); ++a) m.col(a) = coords(g * basis[a] * gi);
  return m;
}

Mat MatrixLieGroup::coAd(const CMat& g) const { return Ad(g.inverse()).transpose(); }

CMat MatrixLieGroup::random(std::mt19937_64& rng, double scale) const {
  std::normal_distribution<double> n(0.0, scale);
  Vec x(dim());
  for (int i = 0; i < dim(); ++i) x[i] = n(rng);
  return exp(x);
}

int MatrixLieGroup::derived_dim() const {
  const int d = dim();
  if (d == 0) return 0;
  Mat span(d, d * d);
  Vec e = Vec::Zero(d), f = Vec::Zero(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      e.setZero();
      f.setZero();
      e[i] = 1;
      f[j] = 1;
      span.col(i * d + j) = bracket(e, f);
    }
  Eigen::FullPivLU<Mat> lu(span);
  lu.setThreshold(1e-10);
  return static_cast<int>(lu.rank());
}

MatrixLieGroup MatrixLieGroup::circle() {
  CMat b(1, 1);
  b(0, 0) = std::complex<double>(0, 1);
  return {"S1", {b}};
}

MatrixLieGroup MatrixLieGroup::torus(int n) {
  MatrixLieGroup g{"T" + std::to_string(n), {}};
  for (int i = 0; i < n; ++i) {
    CMat b = CMat::Zero(n, n);
    b(i, i) = std::complex<double>(0, 1);
    g.basis.push_back(b);
  }
  return g;
}

std::vector<CMat> su2_basis() {
  using C = std::complex<double>;
  CMat t1(2, 2), t2(2, 2), t3(2, 2);
  t1 << C(0, 0), C(0, -0.5), C(0, -0.5), C(0, 0);
  t2 << C(0, 0), C(-0.5, 0), C(0.5, 0), C(0, 0);
  t3 << C(0, -0.5), C(0, 0), C(0, 0), C(0, 0.5);
  return {t1, t2, t3};
}

MatrixLieGroup MatrixLieGroup::su2() { return {"SU2", su2_basis()}; }

MatrixLieGroup MatrixLieGroup::translations(int n) {
  MatrixLieGroup g{"R" + std::to_string(n), {}};
  for (int i = 0; i < n; ++i) {
    CMat b = CMat::Zero(n + 1, n + 1);
    b(i, n) = 1.0;
    g.basis.push_back(b);
  }
  return g;
}

CMat su2_haar(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector4d q;
  for (int i = 0; i < 4; ++i) q[i] = n(rng);
  q.normalize();
  using C = std::complex<double>;
  CMat g(2, 2);
  g << C(q[0], q[1]), C(-q[2], q[3]), C(q[2], q[3]), C(q[0], -q[1]);
  return g;
}

Vec AnalyticAction::act(const CMat& g, const Vec& x) const {
  const Mat h = rep(g);
  return h.topLeftCorner(n, n) * x + h.topRightCorner(n, 1);
}

Vec AnalyticAction::push(const CMat& g, const Vec& v) const { return rep(g).topLeftCorner(n, n) * v; }

Vec AnalyticAction::fundamental(const Vec& x, const Vec& X) const {
  Vec out = Vec::Zero(n);
  for (int a = 0; a < group.dim(); ++a)
    out += X[a] * (gen[a].topLeftCorner(n, n) * x + gen[a].topRightCorner(n, 1));
  return out;
}

AnalyticAction AnalyticAction::circle_weights(const std::vector<int>& w) {
  AnalyticAction a;
  a.group = MatrixLieGroup::circle();
  a.n = 2 * static_cast<int>(w.size());
  const int n = a.n;
  a.rep = [w, n](const CMat& g) {
    const double t = std::arg(g(0, 0));
    Mat h = Mat::Identity(n + 1, n + 1);
    for (size_t j = 0; j < w.size(); ++j) {
      const double c = std::cos(w[j] * t), s = std::sin(w[j] * t);
      h.block(2 * j, 2 * j, 2, 2) << c, -s, s, c;
    }
    return h;
  };
  Mat gen = Mat::Zero(n + 1, n + 1);
  for (size_t j = 0; j < w.size(); ++j) gen.block(2 * j, 2 * j, 2, 2) << 0, -w[j], w[j], 0;
  a.gen = {gen};
  return a;
}

AnalyticAction AnalyticAction::adjoint(const MatrixLieGroup& g) {
  AnalyticAction a;
  a.group = g;
  a.n = g.dim();
  const int n = a.n;
  a.rep = [g, n](const CMat& x) {
    Mat h = Mat::Identity(n + 1, n + 1);
    h.topLeftCorner(n, n) = g.Ad(x);
    return h;
  };
  for (int i = 0; i < n; ++i) {
    Mat gen = Mat::Zero(n + 1, n + 1);
    Vec e = Vec::Zero(n), f = Vec::Zero(n);
    e[i] = 1;
    for (int j = 0; j < n; ++j) {
      f.setZero();
      f[j] = 1;
      gen.block(0, j, n, 1) = g.bracket(e, f);
    }
    a.gen.push_back(gen);
  }
  return a;
}

AnalyticAction AnalyticAction::translation(const Mat& T) {
  AnalyticAction a;
  const int d = static_cast<int>(T.cols());
  a.group = MatrixLieGroup::translations(d);
  a.n = static_cast<int>(T.rows());
  const int n = a.n;
  a.rep = [T, n, d](const CMat& g) {
    Mat h = Mat::Identity(n + 1, n + 1);
    h.topRightCorner(n, 1) = T * g.col(d).head(d).real();
    return h;
  };
  for (int i = 0; i < d; ++i) {
    Mat gen = Mat::Zero(n + 1, n + 1);
    gen.topRightCorner(n, 1) = T.col(i);
    a.gen.push_back(gen);
  }
  return a;
}

}  // namespace eqg
