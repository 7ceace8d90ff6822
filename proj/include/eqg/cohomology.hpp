#ifndef EQG_COHOMOLOGY_HPP
#define EQG_COHOMOLOGY_HPP

#include <string>
#include <vector>

#include "eqg/complex.hpp"

namespace eqg {

struct AbelianGroupPresentation {
  int free_rank = 0;
  std::vector<Int> torsion;  // invariant factors > 1, each divides the next

  std::string to_string() const;  // "0", "Z", "Z^2 + Z/3", ...
  bool operator==(const AbelianGroupPresentation& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
};

// Cochain complex of free abelian groups: delta[q] maps C^q -> C^{q+1}.
struct IntegerCochainComplex {
  std::vector<int> dims;
  std::vector<SparseIntMatrix> delta;

  AbelianGroupPresentation cohomology(int q) const;
  std::vector<Int> apply(int q, const std::vector<Int>& c) const;
  bool is_cocycle(int q, const std::vector<Int>& c) const;
  bool is_coboundary(int q, const std::vector<Int>& c, std::vector<Int>* witness = nullptr) const;
};

IntegerCochainComplex cochain_complex(const SimplicialComplex& k);
AbelianGroupPresentation integer_cohomology(const SimplicialComplex& k, int degree);

// Orientation cycle of a closed pseudomanifold (+-1 per top simplex); empty if none.
std::vector<int> fundamental_cycle(const SimplicialComplex& k);
// Same for a top boundary matrix (rows: codimension-one cells, columns: top cells).
std::vector<int> orientation_cycle(const SparseIntMatrix& top_boundary);
Int pair_with_cycle(const std::vector<int>& cycle, const std::vector<Int>& cochain);

}  // namespace eqg

#endif
