#ifndef EQG_REDUCTION_DISCRETE_HPP
#define EQG_REDUCTION_DISCRETE_HPP

#include <memory>
#include <vector>

#include "eqg/gerbe_discrete.hpp"

namespace eqg {

// Quotient of an equivariant sheet model by a regular free action: the base
// M/G and Y/G, whose labels are label orbits. Every quotient simplex keeps a
// representative upstairs and the orientation sign relating the two.
struct QuotientSheets {
  std::shared_ptr<const SimplicialComplex> base;
  std::shared_ptr<const EquivariantSheetModel> em;  // trivial group
  std::vector<int> projection;                      // upstairs vertex -> quotient vertex
  std::vector<int> label_orbit;                     // upstairs label -> quotient label
  std::vector<std::vector<int>> rep;                // [k][quotient simplex] -> upstairs simplex
  std::vector<std::vector<int>> image;              // [k][upstairs simplex] -> quotient simplex
  std::vector<std::vector<int>> sign;               // [k][upstairs simplex] -> orientation sign
  int order = 1;

  SheetForm descend(const EquivariantSheetModel& up, const SheetForm& x) const;
  CircleFunction descend(const EquivariantSheetModel& up, const CircleFunction& x) const;
  SheetForm pull_back(const EquivariantSheetModel& up, const SheetForm& x) const;
  CircleFunction pull_back(const EquivariantSheetModel& up, const CircleFunction& x) const;
};

// Throws NotFreeAction if the action on the base is not regular or a simplex
// carries two sheets of one orbit.
QuotientSheets quotient_sheets(const EquivariantSheetModel& em);

struct ReducedDiscrete {
  QuotientSheets q;
  GerbeData gerbe;  // over M/G
};

// (Y/G, P/G, s/G) with the descended connection and curving; g must be G-invariant.
ReducedDiscrete reduce_topological(const GerbeData& g);
// pi^* of the reduced gerbe, back on the upstairs sheet model
GerbeData pull_back_reduced(const ReducedDiscrete& r, std::shared_ptr<const EquivariantSheetModel> up);

// integral of the 3-curvature over the fundamental cycle of the base
Rat three_curvature_period(const GerbeData& g);

struct DescentReport {
  bool pullback_matches = false;  // pi^* of the reduction equals the input exactly
  bool same_dd_class = false;     // DD cocycles of input and pull-back are cohomologous
  bool deligne_witness = false;   // Deligne cocycles differ by an exact coboundary
  Rat period_up;                  // period of Omega over M
  Rat period_down;                // period of Omega-bar over M/G
  int order = 1;
  bool degree_relation() const;  // |period_up| = |G| |period_down|
};
DescentReport descent_report(const GerbeData& g, const ReducedDiscrete& r);

}  // namespace eqg

#endif
