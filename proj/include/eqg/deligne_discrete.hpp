#ifndef EQG_DELIGNE_DISCRETE_HPP
#define EQG_DELIGNE_DISCRETE_HPP

#include <string>
#include <vector>

#include "eqg/cohomology.hpp"
#include "eqg/trigraded.hpp"

namespace eqg {

struct BackendMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Real-lift coordinates of all components of one total degree: circle
// components contribute their vertex values, form components every entry.
struct LiftLayout {
  struct Block {
    Degree3 ijk;
    int point;
    int p;
    int k;
    int base;
    int size;
  };
  std::vector<Block> blocks;
  int size = 0;
  static LiftLayout of_degree(const DeligneContext& ctx, int m);
  int find(const Degree3& d, int point) const;  // block index or -1
};

// D on real lifts from degree m to m + 1, one row per target coordinate.
std::vector<SparseRow<Rat>> lifted_total_matrix(const DeligneContext& ctx, const LiftLayout& from,
                                                const LiftLayout& to);

struct WitnessResult {
  bool found = false;
  TriGradedCochain witness;  // D(witness) = target exactly when found
  int rational_unknowns = 0;
  int integer_unknowns = 0;
  int constraint_rows = 0;
  std::string reason;
};

// Solves D w = target over real lifts and integer jumps per connected piece of
// every tuple region. Assumes pieces are contractible (good covers).
WitnessResult find_primitive(const DeligneContext& ctx, const TriGradedCochain& target);

struct DeligneGroup {
  int degree = 0;
  int N = 0;
  AbelianGroupPresentation integral;  // discrete part (Z^r + torsion)
  int circle_rank = 0;                // copies of R/Z
  int vector_rank = 0;                // copies of R (exact forms modulo closed)
  std::vector<int> betti;             // real Betti numbers from the Cech total complex
  bool betti_consistent = true;       // agreement with the integer Smith normal forms
  std::string to_string() const;
};

// H^m(M, F(N)) of a closed simplicial complex via the exact sequences relating it to
// H^*(M; Z) and H^*(M; R), with the Betti numbers cross-checked on the Cech total complex
// of the dual-block cover of sd(K).
DeligneGroup deligne_cohomology_discrete(const SimplicialComplex& k, int N, int degree);

}  // namespace eqg

#endif
