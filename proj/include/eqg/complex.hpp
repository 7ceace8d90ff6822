#ifndef EQG_COMPLEX_HPP
#define EQG_COMPLEX_HPP

#include <unordered_map>
#include <utility>
#include <vector>

#include "eqg/exact.hpp"

namespace eqg {

using Simplex = std::vector<int>;  // ascending vertex ids

struct SimplexHash {
  size_t operator()(const Simplex& s) const noexcept;
};

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Closes the given simplices under faces. Vertices are 0..num_vertices-1.
  static SimplicialComplex from_simplices(int num_vertices, std::vector<Simplex> simplices);

  int num_vertices() const { return nv_; }
  int dimension() const { return static_cast<int>(simp_.size()) - 1; }
  int count(int k) const;
  const std::vector<Simplex>& simplices(int k) const;
  const Simplex& simplex(int k, int i) const { return simp_[k][i]; }
  int index_of(const Simplex& s) const;  // -1 if absent
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }

  // d_k: C_k -> C_{k-1}; rows are (k-1)-simplices. Face i gets sign (-1)^i.
  SparseIntMatrix boundary(int k) const;
  // delta^k: C^k -> C^{k+1}, the transpose of boundary(k+1).
  SparseIntMatrix coboundary(int k) const;
  long euler_characteristic() const;
  std::vector<Simplex> facets() const;

  // Connected components of the full subcomplex on the masked vertices (-1 outside).
  std::vector<int> components(const std::vector<char>& mask, int* count = nullptr) const;
  const std::vector<std::vector<int>>& neighbors() const { return adj_; }

  bool same_as(const SimplicialComplex& o) const;

 private:
  int nv_ = 0;
  std::vector<std::vector<Simplex>> simp_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
  std::vector<std::vector<int>> adj_;
};

struct Subdivision {
  SimplicialComplex complex;
  std::vector<std::pair<int, int>> carrier;  // new vertex -> (dim, index) of the old simplex
};

Subdivision barycentric_subdivision(const SimplicialComplex& k);

SimplicialComplex simplex_boundary(int n);  // boundary of the n-simplex
SimplicialComplex cycle_complex(int n);     // n-gon
SimplicialComplex icosahedron();
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

// Sign of the permutation that sorts v; 0 if v has a repeated entry.
int permutation_sign(const std::vector<int>& v);

}  // namespace eqg

#endif
