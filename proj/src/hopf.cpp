#include "eqg/hopf.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace eqg {

AnalyticAction hopf_action() { return AnalyticAction::circle_weights({1, -1}); }

double hopf_xi(const Vec& x, const Vec& v) { return x[0] * v[1] - x[1] * v[0] - (x[2] * v[3] - x[3] * v[2]); }

double hopf_dxi(const Vec&, const Vec& u, const Vec& v) {
  return 2 * (u[0] * v[1] - u[1] * v[0]) - 2 * (u[2] * v[3] - u[3] * v[2]);
}

Vec3 hopf_q(const Vec& x) {
  return Vec3(2 * (x[0] * x[2] - x[1] * x[3]), 2 * (x[0] * x[3] + x[1] * x[2]),
              x[0] * x[0] + x[1] * x[1] - x[2] * x[2] - x[3] * x[3]);
}

Mat hopf_dq(const Vec& x) {
  Mat d(3, 4);
  d << 2 * x[2], -2 * x[3], 2 * x[0], -2 * x[1],
       2 * x[3], 2 * x[2], 2 * x[1], 2 * x[0],
       2 * x[0], 2 * x[1], -2 * x[2], -2 * x[3];
  return d;
}

double hopf_basic(const Vec& x, const Vec& v) { return hopf_q(x)[2] * hopf_dq(x).row(0).dot(v); }

double hopf_dbasic(const Vec& x, const Vec& u, const Vec& v) {
  const Mat d = hopf_dq(x);
  return d.row(2).dot(u) * d.row(0).dot(v) - d.row(2).dot(v) * d.row(0).dot(u);
}

Section hopf_section() {
  using C = std::complex<double>;
  Section s;
  s.lift = [](const Vec& p0) {
    const Vec3 p = Vec3(p0[0], p0[1], p0[2]).normalized();
    const C w(p[0], p[1]);
    C a, b;
    if (p[2] >= 0) {
      a = std::sqrt((1 + p[2]) / 2);
      b = w / (2.0 * a);
    } else {
      b = std::sqrt((1 - p[2]) / 2);
      a = w / (2.0 * b);
    }
    Vec x(4);
    x << a.real(), a.imag(), b.real(), b.imag();
    return x;
  };
  s.push = [](const Vec& p0, const Vec& u) {
    const Vec3 p = Vec3(p0[0], p0[1], p0[2]).normalized();
    const C w(p[0], p[1]), dw(u[0], u[1]);
    const double dt = u[2];
    C da, db;
    if (p[2] >= 0) {
      const double a = std::sqrt((1 + p[2]) / 2);
      da = dt / (4 * a);
      db = dw / (2 * a) - w * da / (2 * a * a);
    } else {
      const double b = std::sqrt((1 - p[2]) / 2);
      db = -dt / (4 * b);
      da = dw / (2 * b) - w * db / (2 * b * b);
    }
    Vec v(4);
    v << da.real(), da.imag(), db.real(), db.imag();
    return v;
  };
  return s;
}

GForm1 hopf_connection(double eps) {
  return [eps](const Vec& x, const Vec& v) {
    Vec out(1);
    out[0] = hopf_xi(x, v) + eps * hopf_basic(x, v);
    return out;
  };
}

AnalyticGerbe hopf_gerbe(int sheets) {
  AnalyticGerbe g;
  g.name = sheets == 1 ? "hopf" : "hopf-2";
  g.action = hopf_action();
  g.a = {[](const Vec&, const Vec&) { return 0.0; }};
  g.da = {[](const Vec&, const Vec&, const Vec&) { return 0.0; }};
  if (sheets > 1) {
    g.a.push_back([](const Vec& x, const Vec& v) { return 0.7 * hopf_xi(x, v) + 0.3 * hopf_basic(x, v); });
    g.da.push_back(
        [](const Vec& x, const Vec& u, const Vec& v) { return 0.7 * hopf_dxi(x, u, v) + 0.3 * hopf_dbasic(x, u, v); });
  }
  g.f = [](const Vec&, const Vec&, const Vec&) { return 0.0; };
  return g;
}

MomentField hopf_lambda(const AnalyticGerbe& eg, double r, const SampleSet& s) {
  return solve_lambda(moment(eg, s), s, [r](const Vec&) { return Vec(Vec::Constant(1, r)); });
}

SampleSet hopf_samples(int npoints, int ngroup, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::uniform_real_distribution<double> t(0.0, 2 * std::numbers::pi);
  SampleSet s;
  for (int i = 0; i < npoints; ++i) {
    Vec x(4), v(4);
    for (int j = 0; j < 4; ++j) {
      x[j] = d(rng);
      v[j] = d(rng);
    }
    x.normalize();
    v -= v.dot(x) * x;
    s.points.push_back(x);
    s.vectors.push_back(v);
  }
  for (int i = 0; i < ngroup; ++i) {
    CMat g(1, 1);
    g(0, 0) = std::polar(1.0, t(rng));
    s.group.push_back(g);
  }
  return s;
}

SampleSet sphere_samples(int npoints, std::mt19937_64& rng) {
  std::normal_distribution<double> d(0.0, 1.0);
  SampleSet s;
  for (int i = 0; i < npoints; ++i) {
    Vec p(3), v(3);
    for (int j = 0; j < 3; ++j) {
      p[j] = d(rng);
      v[j] = d(rng);
    }
    p.normalize();
    v -= v.dot(p) * p;
    s.points.push_back(p);
    s.vectors.push_back(v);
    s.second.push_back(Vec(Vec3(p[0], p[1], p[2]).cross(Vec3(v[0], v[1], v[2]))));
  }
  return s;
}

BaseForm2 hopf_curvature_bar(double eps) {
  if (eps == 0) return descend(Form2(hopf_dxi), hopf_section());
  return descend(Form2([eps](const Vec& x, const Vec& u, const Vec& v) {
                   return hopf_dxi(x, u, v) + eps * hopf_dbasic(x, u, v);
                 }),
                 hopf_section());
}

double sphere_period(const BaseForm2& w, int level, bool parallel, TriangleRule rule) {
  const Icosphere s = icosphere(level);
  const SphereTwoForm f = [&w](const Vec3& p, const Vec3& u, const Vec3& v) {
    return w(Vec(p), Vec(u), Vec(v));
  };
  return parallel ? integrate_sphere_omp(s, f, rule) : integrate_sphere_serial(s, f, rule);
}

double euler_period(int level, int orientation, bool parallel, TriangleRule rule) {
  return orientation * -sphere_period(hopf_curvature_bar(), level, parallel, rule) / (2 * std::numbers::pi);
}

HopfReduction hopf_reduction(double r, int level, int samples, unsigned seed, double xi_eps) {
  std::mt19937_64 rng(seed);
  const SampleSet s = hopf_samples(samples, 4, rng);
  const AnalyticGerbe eg = hopf_gerbe(1);
  const ReducedGerbe red = reduce_with_connection(eg, hopf_lambda(eg, r, s), hopf_connection(xi_eps), hopf_section(), s);
  HopfReduction h;
  h.r = r;
  h.fbar = red.curving_bar(0);
  h.descent = red.residual;
  const BaseForm2 F = hopf_curvature_bar(xi_eps);
  const SampleSet b = sphere_samples(samples, rng);
  for (size_t k = 0; k < b.points.size(); ++k) {
    const Vec& p = b.points[k];
    const Vec& u = b.vectors[k];
    const Vec& v = b.second_vector(k);
    h.pointwise_residual = std::max(h.pointwise_residual, std::abs(h.fbar(p, u, v) - kHopfCurvingSign * r * F(p, u, v)));
  }
  h.period = -sphere_period(h.fbar, level) / (2 * std::numbers::pi);
  const Integrality t = integrality(h.period, &h.distance);
  if (t == Integrality::Indeterminate)
    throw Indeterminate("Hopf period " + std::to_string(h.period) + " is within the indeterminate band");
  h.trivial = t == Integrality::Integer;
  return h;
}

}  // namespace eqg
