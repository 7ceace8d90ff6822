#include "eqg/complex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace eqg {

size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int v : s) {
    h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SimplicialComplex SimplicialComplex::from_simplices(int num_vertices, std::vector<Simplex> simplices) {
  SimplicialComplex c;
  c.nv_ = num_vertices;
  std::vector<std::set<Simplex>> levels;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw ExactError("simplex with repeated vertex");
    for (int v : s)
      if (v < 0 || v >= num_vertices) throw ExactError("vertex out of range");
    const int n = static_cast<int>(s.size());
    if (n == 0) continue;
    if (static_cast<int>(levels.size()) < n) levels.resize(n);
    // all nonempty faces
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) f.push_back(s[i]);
      levels[f.size() - 1].insert(f);
    }
  }
  if (levels.empty()) levels.resize(1);
  for (int v = 0; v < num_vertices; ++v) levels[0].insert(Simplex{v});
  c.simp_.resize(levels.size());
  c.index_.resize(levels.size());
  for (size_t k = 0; k < levels.size(); ++k) {
    c.simp_[k].assign(levels[k].begin(), levels[k].end());
    for (size_t i = 0; i < c.simp_[k].size(); ++i) c.index_[k].emplace(c.simp_[k][i], static_cast<int>(i));
  }
  c.adj_.assign(num_vertices, {});
  if (c.simp_.size() > 1)
    for (const auto& e : c.simp_[1]) {
      c.adj_[e[0]].push_back(e[1]);
      c.adj_[e[1]].push_back(e[0]);
    }
  for (auto& a : c.adj_) std::sort(a.begin(), a.end());
  return c;
}

int SimplicialComplex::count(int k) const {
  if (k < 0 || k >= static_cast<int>(simp_.size())) return 0;
  return static_cast<int>(simp_[k].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(simp_.size())) return empty;
  return simp_[k];
}

int SimplicialComplex::index_of(const Simplex& s) const {
  const int k = static_cast<int>(s.size()) - 1;
  if (k < 0 || k >= static_cast<int>(index_.size())) return -1;
  auto it = index_[k].find(s);
  return it == index_[k].end() ? -1 : it->second;
}

SparseIntMatrix SimplicialComplex::boundary(int k) const {
  SparseIntMatrix m(count(k - 1), count(k));
  if (k <= 0) return m;
  for (int j = 0; j < count(k); ++j) {
    const Simplex& s = simp_[k][j];
    for (int i = 0; i <= k; ++i) {
      Simplex f = s;
      f.erase(f.begin() + i);
      m.add(index_of(f), j, (i % 2) ? -1 : 1);
    }
  }
  return m;
}

SparseIntMatrix SimplicialComplex::coboundary(int k) const { return boundary(k + 1).transpose(); }

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (size_t k = 0; k < simp_.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(simp_[k].size());
  return chi;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int k = dimension(); k >= 0; --k)
    for (const auto& s : simp_[k]) {
      bool maximal = true;
      if (k + 1 <= dimension()) {
        for (int v : adj_[s[0]]) {
          if (std::binary_search(s.begin(), s.end(), v)) continue;
          Simplex t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), v), v);
          if (contains(t)) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  return out;
}

std::vector<int> SimplicialComplex::components(const std::vector<char>& mask, int* count) const {
  std::vector<int> comp(nv_, -1);
  int n = 0;
  for (int s = 0; s < nv_; ++s) {
    if (!mask[s] || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = n;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj_[v])
        if (mask[w] && comp[w] < 0) {
          comp[w] = n;
          stack.push_back(w);
        }
    }
    ++n;
  }
  if (count) *count = n;
  return comp;
}

bool SimplicialComplex::same_as(const SimplicialComplex& o) const {
  return nv_ == o.nv_ && simp_ == o.simp_;
}

Subdivision barycentric_subdivision(const SimplicialComplex& k) {
  Subdivision sd;
  std::vector<std::vector<int>> id(k.dimension() + 1);
  int n = 0;
  for (int d = 0; d <= k.dimension(); ++d) {
    id[d].resize(k.count(d));
    for (int i = 0; i < k.count(d); ++i) {
      id[d][i] = n++;
      sd.carrier.emplace_back(d, i);
    }
  }
  std::vector<Simplex> chains;
  // maximal chains ending in each facet: recursive face removal
  for (const auto& f : k.facets()) {
    std::vector<std::pair<Simplex, Simplex>> stack{{f, {}}};
    while (!stack.empty()) {
      auto [s, chain] = stack.back();
      stack.pop_back();
      const int d = static_cast<int>(s.size()) - 1;
      chain.push_back(id[d][k.index_of(s)]);
      if (d == 0) {
        chains.push_back(chain);
        continue;
      }
      for (int i = 0; i <= d; ++i) {
        Simplex t = s;
        t.erase(t.begin() + i);
        stack.emplace_back(t, chain);
      }
    }
  }
  sd.complex = SimplicialComplex::from_simplices(n, std::move(chains));
  return sd;
}

SimplicialComplex simplex_boundary(int n) {
  std::vector<Simplex> faces;
  for (int i = 0; i <= n; ++i) {
    Simplex s;
    for (int j = 0; j <= n; ++j)
      if (j != i) s.push_back(j);
    faces.push_back(s);
  }
  return SimplicialComplex::from_simplices(n + 1, faces);
}

SimplicialComplex cycle_complex(int n) {
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_simplices(n, edges);
}

SimplicialComplex icosahedron() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> x;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      x.push_back({0.0, double(a), b * p});
      x.push_back({double(a), b * p, 0.0});
      x.push_back({b * p, 0.0, double(a)});
    }
  auto close = [&](int i, int j) {
    double d = 0;
    for (int c = 0; c < 3; ++c) d += (x[i][c] - x[j][c]) * (x[i][c] - x[j][c]);
    return std::abs(d - 4.0) < 1e-9;
  };
  std::vector<Simplex> tri;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int l = j + 1; l < 12; ++l)
        if (close(i, j) && close(j, l) && close(i, l)) tri.push_back({i, j, l});
  return SimplicialComplex::from_simplices(12, tri);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  const int na = a.num_vertices();
  std::vector<Simplex> out;
  for (const auto& s : a.facets())
    for (const auto& t : b.facets()) {
      Simplex u = s;
      for (int v : t) u.push_back(v + na);
      out.push_back(u);
    }
  return SimplicialComplex::from_simplices(na + b.num_vertices(), out);
}

int permutation_sign(const std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

}  // namespace eqg
