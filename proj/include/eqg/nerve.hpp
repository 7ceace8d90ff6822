#ifndef EQG_NERVE_HPP
#define EQG_NERVE_HPP

#include <map>
#include <vector>

#include "eqg/cohomology.hpp"
#include "eqg/group_action.hpp"

namespace eqg {

struct InvalidCover : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Cover = std::vector<std::vector<int>>;  // vertex sets; a set spans its full subcomplex

SimplicialComplex nerve(const Cover& cover, int max_dim = -1);

// Intersection of the cover sets with the given indices, as a vertex mask.
std::vector<char> intersection_mask(int num_vertices, const Cover& cover, const std::vector<int>& idx);

// sd(K) covered by the dual blocks of the vertices of K; the nerve is K itself.
struct DualBlockCover {
  SimplicialComplex base;  // sd(K)
  Cover cover;             // cover[v] = barycenters of simplices of K containing v
  Subdivision sd;
};
DualBlockCover dual_block_cover(const SimplicialComplex& k);

// Nerve whose k-cells are connected components of (k+1)-fold intersections
// (strictly increasing index tuples). Agrees with the nerve for good covers.
struct ComponentNerve {
  struct Piece {
    std::vector<int> tuple;
    std::vector<int> vertices;
  };
  std::vector<std::vector<Piece>> pieces;
  IntegerCochainComplex complex;
  // piece index (in degree tuple.size()-1) of the component containing vertex v
  int locate(const std::vector<int>& tuple, int v) const;

  std::map<std::vector<int>, std::pair<int, std::vector<int>>> lookup_;
};
ComponentNerve component_nerve(const SimplicialComplex& k, const Cover& cover, int max_dim);

}  // namespace eqg

#endif
