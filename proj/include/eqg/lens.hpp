#ifndef EQG_LENS_HPP
#define EQG_LENS_HPP

#include <memory>
#include <vector>

#include "eqg/sheets.hpp"

namespace eqg {

// S^3 as the join of two n-gons with Z/n rotating both (the L(n,1) action).
struct LensSpace {
  int n = 0;
  SimplicialComplex cover;
  SimplicialGroupAction action;
};
LensSpace lens_join(int n);

// Dual-block sheet model on sd(K) with `copies` sheets per block; labels are
// vertex * copies + copy, and G acts on labels through its action on K.
struct BlockModel {
  std::shared_ptr<const SimplicialComplex> nerve;  // K
  std::shared_ptr<const SimplicialComplex> base;   // sd(K)
  SimplicialGroupAction base_action;
  std::shared_ptr<const EquivariantSheetModel> em;
  std::vector<int> label_vertex;
  int copies = 1;
};
BlockModel block_model(const SimplicialComplex& k, const SimplicialGroupAction& action, int copies = 1);

// Top cochain supported on one simplex, pairing to 1 with the fundamental cycle.
std::vector<Int> unit_top_cocycle(const SimplicialComplex& k);
// sum_g g^* c on top cochains
std::vector<Int> orbit_sum(const SimplicialComplex& k, const SimplicialGroupAction& a, const std::vector<Int>& c);

}  // namespace eqg

#endif
