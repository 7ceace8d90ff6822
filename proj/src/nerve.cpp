#include "eqg/nerve.hpp"

#include <algorithm>

namespace eqg {

SimplicialComplex nerve(const Cover& cover, int max_dim) {
  const int n = static_cast<int>(cover.size());
  std::vector<std::vector<int>> sets = cover;
  for (auto& s : sets) {
    if (s.empty()) throw InvalidCover("empty cover set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<Simplex> found;
  // depth-first over increasing index tuples carrying the running intersection
  std::vector<std::pair<Simplex, std::vector<int>>> stack;
  for (int i = n - 1; i >= 0; --i) stack.push_back({{i}, sets[i]});
  while (!stack.empty()) {
    auto [idx, inter] = std::move(stack.back());
    stack.pop_back();
    found.push_back(idx);
    if (max_dim >= 0 && static_cast<int>(idx.size()) > max_dim) continue;
    for (int j = n - 1; j > idx.back(); --j) {
      std::vector<int> next;
      std::set_intersection(inter.begin(), inter.end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(next));
      if (next.empty()) continue;
      Simplex t = idx;
      t.push_back(j);
      stack.push_back({t, std::move(next)});
    }
  }
  return SimplicialComplex::from_simplices(n, found);
}

std::vector<char> intersection_mask(int num_vertices, const Cover& cover, const std::vector<int>& idx) {
  std::vector<int> cnt(num_vertices, 0);
  for (int a : idx)
    for (int v : cover[a]) ++cnt[v];
  std::vector<char> mask(num_vertices, 0);
  for (int v = 0; v < num_vertices; ++v) mask[v] = cnt[v] == static_cast<int>(idx.size());
  return mask;
}

DualBlockCover dual_block_cover(const SimplicialComplex& k) {
  DualBlockCover d;
  d.sd = barycentric_subdivision(k);
  d.base = d.sd.complex;
  d.cover.assign(k.num_vertices(), {});
  for (int w = 0; w < d.base.num_vertices(); ++w) {
    auto [dim, i] = d.sd.carrier[w];
    for (int v : k.simplex(dim, i)) d.cover[v].push_back(w);
  }
  return d;
}

int ComponentNerve::locate(const std::vector<int>& tuple, int v) const {
  auto it = lookup_.find(tuple);
  if (it == lookup_.end()) return -1;
  const int c = it->second.second[v];
  return c < 0 ? -1 : it->second.first + c;
}

ComponentNerve component_nerve(const SimplicialComplex& k, const Cover& cover, int max_dim) {
  ComponentNerve cn;
  SimplicialComplex nv = nerve(cover, max_dim);
  const int top = std::min(nv.dimension(), max_dim);
  cn.pieces.resize(top + 1);
  for (int d = 0; d <= top; ++d)
    for (const auto& t : nv.simplices(d)) {
      std::vector<char> mask = intersection_mask(k.num_vertices(), cover, t);
      int ncomp = 0;
      std::vector<int> comp = k.components(mask, &ncomp);
      cn.lookup_[t] = {static_cast<int>(cn.pieces[d].size()), comp};
      std::vector<std::vector<int>> verts(ncomp);
      for (int v = 0; v < k.num_vertices(); ++v)
        if (comp[v] >= 0) verts[comp[v]].push_back(v);
      for (int c = 0; c < ncomp; ++c) cn.pieces[d].push_back({t, verts[c]});
    }
  for (int d = 0; d <= top; ++d) cn.complex.dims.push_back(static_cast<int>(cn.pieces[d].size()));
  for (int d = 0; d < top; ++d) {
    SparseIntMatrix m(cn.complex.dims[d + 1], cn.complex.dims[d]);
    for (int p = 0; p < cn.complex.dims[d + 1]; ++p) {
      const auto& piece = cn.pieces[d + 1][p];
      for (int i = 0; i <= d + 1; ++i) {
        std::vector<int> face = piece.tuple;
        face.erase(face.begin() + i);
        m.add(p, cn.locate(face, piece.vertices.front()), (i % 2) ? -1 : 1);
      }
    }
    cn.complex.delta.push_back(m);
  }
  return cn;
}

}  // namespace eqg
