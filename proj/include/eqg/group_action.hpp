#ifndef EQG_GROUP_ACTION_HPP
#define EQG_GROUP_ACTION_HPP

#include <vector>

#include "eqg/complex.hpp"

namespace eqg {

// Finite group given by its multiplication table; element 0 is the identity.
struct FiniteGroup {
  int order = 1;
  std::vector<std::vector<int>> table{{0}};

  static FiniteGroup cyclic(int n);
  int mul(int g, int h) const { return table[g][h]; }
  int inverse(int g) const;
  bool valid() const;  // associativity, identity, inverses
};

struct NotFreeAction : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Left action on vertices by permutations; perm[g][v] = g.v
struct SimplicialGroupAction {
  FiniteGroup group;
  std::vector<std::vector<int>> perm;

  // Cyclic group generated by one vertex permutation of order n.
  static SimplicialGroupAction cyclic(int n, const std::vector<int>& generator);
  static SimplicialGroupAction trivial(int num_vertices);

  int act(int g, int v) const { return perm[g][v]; }
  Simplex act(int g, const Simplex& s) const;  // sorted image
  // Homomorphism and simplicial-automorphism check.
  bool is_valid_on(const SimplicialComplex& k) const;
  bool is_free_on(const SimplicialComplex& k) const;
  // d(v, g v) >= 3 for every vertex v and g != e.
  bool is_regular_on(const SimplicialComplex& k) const;
  SimplicialGroupAction on_subdivision(const SimplicialComplex& k, const Subdivision& sd) const;
};

struct QuotientResult {
  SimplicialComplex cover;       // the complex actually used (maybe subdivided)
  SimplicialGroupAction action;  // action on `cover`
  SimplicialComplex quotient;
  std::vector<int> projection;   // cover vertex -> quotient vertex
  int subdivisions = 0;
};

QuotientResult quotient_complex(const SimplicialComplex& k, const SimplicialGroupAction& action);

// Antipodal map on the standard icosahedron (vertex permutation).
std::vector<int> icosahedron_antipode();

}  // namespace eqg

#endif
