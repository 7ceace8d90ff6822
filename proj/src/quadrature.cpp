#include "eqg/quadrature.hpp"

#include <cmath>
#include <map>
#include <numbers>

namespace eqg {

void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (z * p1 - p0) / (z * z - 1);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    double p0 = 1, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1;
    dp = n * (z * p1 - p0) / (z * z - 1);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = 2 / ((1 - z * z) * dp * dp);
  }
}

Icosphere icosphere(int level) {
  const double t = (1 + std::sqrt(5.0)) / 2;
  Icosphere s;
  const double raw[12][3] = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                             {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (const auto& r : raw) s.vertices.push_back(Vec3(r[0], r[1], r[2]).normalized());
  s.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
             {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
             {3, 8, 9},  {4, 9, 5},  {2, 4, 11}, {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int l = 0; l < level; ++l) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      s.vertices.push_back((s.vertices[a] + s.vertices[b]).normalized());
      const int id = static_cast<int>(s.vertices.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(s.faces.size() * 4);
    for (const auto& f : s.faces) {
      const int a = midpoint(f[0], f[1]), b = midpoint(f[1], f[2]), c = midpoint(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    s.faces = std::move(next);
  }
  for (auto& f : s.faces) {
    const Vec3& a = s.vertices[f[0]];
    if ((s.vertices[f[1]] - a).cross(s.vertices[f[2]] - a).dot(a) < 0) std::swap(f[1], f[2]);
  }
  return s;
}

namespace {

struct TriPoint {
  double s, t, w;
};

const std::vector<TriPoint>& triangle_rule(TriangleRule r) {
  static const std::vector<TriPoint> centroid{{1.0 / 3, 1.0 / 3, 0.5}};
  static const std::vector<TriPoint> dunavant = [] {
    const double a1 = 0.059715871789770, b1 = 0.470142064105115, w1 = 0.132394152788506;
    const double a2 = 0.797426985353087, b2 = 0.101286507323456, w2 = 0.125939180544827;
    std::vector<TriPoint> p{{1.0 / 3, 1.0 / 3, 0.225}, {b1, b1, w1}, {a1, b1, w1}, {b1, a1, w1},
                            {b2, b2, w2}, {a2, b2, w2}, {b2, a2, w2}};
    for (auto& q : p) q.w *= 0.5;
    return p;
  }();
  return r == TriangleRule::Centroid ? centroid : dunavant;
}

double face_integral(const Icosphere& s, const SphereTwoForm& w, const std::vector<TriPoint>& rule, size_t f) {
  const Vec3& a = s.vertices[s.faces[f][0]];
  const Vec3 e1 = s.vertices[s.faces[f][1]] - a, e2 = s.vertices[s.faces[f][2]] - a;
  double acc = 0;
  for (const auto& q : rule) {
    const Vec3 x = a + q.s * e1 + q.t * e2;
    const double r = x.norm();
    const Vec3 p = x / r;
    const Vec3 u = (e1 - p * p.dot(e1)) / r, v = (e2 - p * p.dot(e2)) / r;
    acc += q.w * w(p, u, v);
  }
  return acc;
}

constexpr int kBlocks = 256;

template <class F>
double blocked_sum_omp(long n, F&& term) {
  std::vector<double> part(kBlocks, 0.0);
#pragma omp parallel for schedule(static)
  for (int b = 0; b < kBlocks; ++b) {
    const long lo = n * b / kBlocks, hi = n * (b + 1) / kBlocks;
    double acc = 0;
    for (long i = lo; i < hi; ++i) acc += term(i);
    part[b] = acc;
  }
  double total = 0;
  for (double p : part) total += p;
  return total;
}

struct SU2Grid {
  std::vector<double> eta, weta;
  int n;
};

SU2Grid su2_grid(int n, EtaRule rule) {
  SU2Grid g;
  g.n = n;
  const double h = std::numbers::pi / 2;
  if (rule == EtaRule::Gauss) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    for (int i = 0; i < n; ++i) {
      g.eta.push_back(h * (x[i] + 1) / 2);
      g.weta.push_back(h * w[i] / 2);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      g.eta.push_back(h * (i + 0.5) / n);
      g.weta.push_back(h / n);
    }
  }
  return g;
}

double su2_cell(const SU2Grid& g, const SU2ThreeForm& w, long idx) {
  const int n = g.n;
  const int i = static_cast<int>(idx / (static_cast<long>(n) * n));
  const int j = static_cast<int>((idx / n) % n);
  const int k = static_cast<int>(idx % n);
  const double dx = 2 * std::numbers::pi / n;
  const SU2Chart c = su2_chart(g.eta[i], j * dx, k * dx);
  return g.weta[i] * dx * dx * w(c.g, c.tangent[0], c.tangent[1], c.tangent[2]);
}

}  // namespace

double integrate_sphere_omp(const Icosphere& s, const SphereTwoForm& w, TriangleRule rule) {
  const auto& r = triangle_rule(rule);
  return blocked_sum_omp(static_cast<long>(s.faces.size()), [&](long f) { return face_integral(s, w, r, f); });
}

double integrate_sphere_serial(const Icosphere& s, const SphereTwoForm& w, TriangleRule rule) {
  const auto& r = triangle_rule(rule);
  double total = 0;
  for (size_t f = 0; f < s.faces.size(); ++f) total += face_integral(s, w, r, f);
  return total;
}

SU2Chart su2_chart(double eta, double x1, double x2) {
  using C = std::complex<double>;
  const C e1 = std::polar(1.0, x1), e2 = std::polar(1.0, x2);
  const double c = std::cos(eta), s = std::sin(eta);
  const C i(0, 1);
  SU2Chart ch;
  ch.g = CMat(2, 2);
  ch.g << c * e1, -s * std::conj(e2), s * e2, c * std::conj(e1);
  CMat de(2, 2), d1(2, 2), d2(2, 2);
  de << -s * e1, -c * std::conj(e2), c * e2, -s * std::conj(e1);
  d1 << i * c * e1, 0.0, 0.0, -i * c * std::conj(e1);
  d2 << 0.0, i * s * std::conj(e2), i * s * e2, 0.0;
  const CMat gi = ch.g.adjoint();
  ch.tangent = {gi * de, gi * d1, gi * d2};
  return ch;
}

double integrate_su2_omp(const SU2ThreeForm& w, int n, EtaRule rule) {
  const SU2Grid g = su2_grid(n, rule);
  return blocked_sum_omp(static_cast<long>(n) * n * n, [&](long idx) { return su2_cell(g, w, idx); });
}

double integrate_su2_serial(const SU2ThreeForm& w, int n, EtaRule rule) {
  const SU2Grid g = su2_grid(n, rule);
  double total = 0;
  const long cells = static_cast<long>(n) * n * n;
  for (long idx = 0; idx < cells; ++idx) total += su2_cell(g, w, idx);
  return total;
}

}  // namespace eqg
