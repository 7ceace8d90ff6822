#include "eqg/group_action.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace eqg {

FiniteGroup FiniteGroup::cyclic(int n) {
  FiniteGroup g;
  g.order = n;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

int FiniteGroup::inverse(int g) const {
  for (int h = 0; h < order; ++h)
    if (table[g][h] == 0) return h;
  throw ExactError("group element without inverse");
}

bool FiniteGroup::valid() const {
  for (int a = 0; a < order; ++a) {
    if (table[0][a] != a || table[a][0] != a) return false;
    bool has_inv = false;
    for (int b = 0; b < order; ++b) {
      if (table[a][b] == 0) has_inv = true;
      for (int c = 0; c < order; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) return false;
    }
    if (!has_inv) return false;
  }
  return true;
}

SimplicialGroupAction SimplicialGroupAction::cyclic(int n, const std::vector<int>& generator) {
  SimplicialGroupAction a;
  a.group = FiniteGroup::cyclic(n);
  const int nv = static_cast<int>(generator.size());
  a.perm.assign(n, std::vector<int>(nv));
  for (int v = 0; v < nv; ++v) a.perm[0][v] = v;
  for (int g = 1; g < n; ++g)
    for (int v = 0; v < nv; ++v) a.perm[g][v] = generator[a.perm[g - 1][v]];
  return a;
}

SimplicialGroupAction SimplicialGroupAction::trivial(int num_vertices) {
  SimplicialGroupAction a;
  a.perm.assign(1, std::vector<int>(num_vertices));
  for (int v = 0; v < num_vertices; ++v) a.perm[0][v] = v;
  return a;
}

Simplex SimplicialGroupAction::act(int g, const Simplex& s) const {
  Simplex t;
  t.reserve(s.size());
  for (int v : s) t.push_back(perm[g][v]);
  std::sort(t.begin(), t.end());
  return t;
}

bool SimplicialGroupAction::is_valid_on(const SimplicialComplex& k) const {
  if (!group.valid() || static_cast<int>(perm.size()) != group.order) return false;
  const int nv = k.num_vertices();
  for (const auto& p : perm) {
    if (static_cast<int>(p.size()) != nv) return false;
    std::vector<int> q = p;
    std::sort(q.begin(), q.end());
    for (int v = 0; v < nv; ++v)
      if (q[v] != v) return false;
  }
  for (int g = 0; g < group.order; ++g)
    for (int h = 0; h < group.order; ++h)
      for (int v = 0; v < nv; ++v)
        if (perm[group.mul(g, h)][v] != perm[g][perm[h][v]]) return false;
  for (int g = 0; g < group.order; ++g)
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d))
        if (!k.contains(act(g, s))) return false;
  return true;
}

bool SimplicialGroupAction::is_free_on(const SimplicialComplex& k) const {
  for (int g = 1; g < group.order; ++g)
    for (int d = 0; d <= k.dimension(); ++d)
      for (const auto& s : k.simplices(d))
        if (act(g, s) == s) return false;
  return true;
}

bool SimplicialGroupAction::is_regular_on(const SimplicialComplex& k) const {
  const auto& adj = k.neighbors();
  for (int g = 1; g < group.order; ++g)
    for (int v = 0; v < k.num_vertices(); ++v) {
      const int w = perm[g][v];
      if (w == v || std::binary_search(adj[v].begin(), adj[v].end(), w)) return false;
      for (int u : adj[v])
        if (std::binary_search(adj[w].begin(), adj[w].end(), u)) return false;
    }
  return true;
}

SimplicialGroupAction SimplicialGroupAction::on_subdivision(const SimplicialComplex& k,
                                                            const Subdivision& sd) const {
  SimplicialGroupAction a;
  a.group = group;
  const int n = sd.complex.num_vertices();
  std::vector<std::vector<int>> id(k.dimension() + 1);
  for (int v = 0; v < n; ++v) {
    auto [d, i] = sd.carrier[v];
    if (static_cast<int>(id[d].size()) <= i) id[d].resize(i + 1);
    id[d][i] = v;
  }
  a.perm.assign(group.order, std::vector<int>(n));
  for (int g = 0; g < group.order; ++g)
    for (int v = 0; v < n; ++v) {
      auto [d, i] = sd.carrier[v];
      a.perm[g][v] = id[d][k.index_of(act(g, k.simplex(d, i)))];
    }
  return a;
}

QuotientResult quotient_complex(const SimplicialComplex& k, const SimplicialGroupAction& action) {
  if (!action.is_valid_on(k)) throw ExactError("group data is not a simplicial action");
  if (!action.is_free_on(k)) throw NotFreeAction("some nonidentity element fixes a simplex");
  QuotientResult res{k, action, {}, {}, 0};
  while (!res.action.is_regular_on(res.cover)) {
    if (res.subdivisions >= 3) throw NotFreeAction("action did not become regular after subdivision");
    Subdivision sd = barycentric_subdivision(res.cover);
    res.action = res.action.on_subdivision(res.cover, sd);
    res.cover = sd.complex;
    ++res.subdivisions;
  }
  const int nv = res.cover.num_vertices();
  res.projection.assign(nv, -1);
  int n = 0;
  for (int v = 0; v < nv; ++v) {
    if (res.projection[v] >= 0) continue;
    for (int g = 0; g < res.action.group.order; ++g) res.projection[res.action.act(g, v)] = n;
    ++n;
  }
  std::vector<Simplex> images;
  for (const auto& f : res.cover.facets()) {
    Simplex s;
    for (int v : f) s.push_back(res.projection[v]);
    images.push_back(s);
  }
  res.quotient = SimplicialComplex::from_simplices(n, images);
  const int order = res.action.group.order;
  for (int d = 0; d <= res.cover.dimension(); ++d)
    if (res.quotient.count(d) * order != res.cover.count(d))
      throw NotFreeAction("orbit count mismatch in quotient");
  return res;
}

std::vector<int> icosahedron_antipode() {
  const double p = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<std::array<double, 3>> x;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      x.push_back({0.0, double(a), b * p});
      x.push_back({double(a), b * p, 0.0});
      x.push_back({b * p, 0.0, double(a)});
    }
  std::vector<int> perm(12, -1);
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (std::abs(x[i][0] + x[j][0]) + std::abs(x[i][1] + x[j][1]) + std::abs(x[i][2] + x[j][2]) < 1e-9)
        perm[i] = j;
  return perm;
}

}  // namespace eqg
