#ifndef EQG_GERBE_DISCRETE_HPP
#define EQG_GERBE_DISCRETE_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "eqg/cohomology.hpp"
#include "eqg/nerve.hpp"
#include "eqg/trigraded.hpp"

namespace eqg {

struct NotClosed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotBasic : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSection : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bundle gerbe over the base of a sheet model Y -> M. P over Y^[2] is trivialized on
// every (contractible) piece, so s is a circle function on Y^[3], the connection is
// d + 2 pi i A with A a 1-cochain on Y^[2], and the curving is 2 pi i B with B a 2-cochain on Y.
// Conditions: delta s = 1, delta A = -dlog s, delta B = dA.
struct GerbeData {
  std::shared_ptr<const EquivariantSheetModel> em;
  CircleFunction s;
  SheetForm A;
  SheetForm B;

  const SheetModel& model() const { return em->model(); }
  static GerbeData trivial(std::shared_ptr<const EquivariantSheetModel> em);
};

struct GerbeCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
// Gerbe axioms, plus G-invariance of s, A, B when `equivariant`.
GerbeCheck validate(const GerbeData& g, bool equivariant = true);

// Label per k-simplex with b(g s) = g b(s); needs a free action on simplices.
std::vector<int> equivariant_section(const EquivariantSheetModel& em, int k);

// eta with delta(eta) = xi for closed xi on Y^[p], p >= 2, built from the section
// eta(s; a_1..a_{p-1}) = xi(s; b(s), a_1..a_{p-1}). G-invariant inputs give invariant outputs.
SheetForm solve_delta(const SheetForm& xi, const EquivariantSheetModel* em = nullptr);

// Omega on the base with pi^* Omega = dB, one value per 3-simplex.
std::vector<Rat> three_curvature(const GerbeData& g);

// Gerbe whose Dixmier-Douady class is the integer 3-cocycle n on `nerve`
// (a complex whose vertices index the labels via label_vertex).
GerbeData gerbe_from_cocycle(std::shared_ptr<const EquivariantSheetModel> em, const SimplicialComplex& nerve,
                             const std::vector<int>& label_vertex, const std::vector<Int>& n);

// Stably isomorphic gerbe: s + delta(t), A - dlog t for an invariant circle function t on Y^[2].
GerbeData twist(const GerbeData& g, const CircleFunction& t);
// Tensor product over a common Y.
GerbeData product(const GerbeData& a, const GerbeData& b);
GerbeData inverse(const GerbeData& a);

// Random data summed over the group orbit, hence G-invariant.
SheetForm random_invariant_form(const EquivariantSheetModel& em, int p, int k, std::mt19937_64& rng, int den = 7);
CircleFunction random_invariant_circle(const EquivariantSheetModel& em, int p, std::mt19937_64& rng, int den = 7);

// Component nerve of the cover of the base by label regions.
ComponentNerve sheet_component_nerve(const SheetModel& m, int max_dim);

// Integer Cech 3-cocycle of a gerbe on the component nerve of the label regions.
struct DDCocycle {
  ComponentNerve nerve;
  std::vector<Int> n;  // one value per 3-cell
  AbelianGroupPresentation h3() const { return nerve.complex.cohomology(3); }
  bool is_cocycle() const { return nerve.complex.is_cocycle(3, n); }
};
DDCocycle dd_cocycle(const GerbeData& g);
bool same_dd_class(const DDCocycle& a, const DDCocycle& b);  // same nerve required
// Pairing with an orientation cycle of the nerve (closed 3-manifolds); sign up to orientation.
Int dd_pairing(const DDCocycle& c);

// (s, A, B) as a Deligne cocycle in K^{0,2,0} + K^{0,1,1} + K^{0,0,2}.
TriGradedCochain deligne_class_cocycle(const GerbeData& g, const DeligneContext& ctx);

}  // namespace eqg

#endif
