#ifndef EQG_LOCAL_DATA_HPP
#define EQG_LOCAL_DATA_HPP

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "eqg/gerbe_discrete.hpp"

namespace eqg {

// Choices entering the local data of a strongly equivariant gerbe over a cover
// {V_a} of M (itself a sheet model over the same base, with the G action on indices).
// The induced structure is Q = G x Y x T with t = 1, u = 1 and trivial D_rel.
struct LocalDataChoice {
  std::vector<int> psi;                // psi[a]: sheet of Y over all of V_a
  std::vector<int> psi1;               // sheet of Y over V_a used for the cover {g} x V_a of G x M
  CircleFunction sigma;                // sigma_ab on V_ab (cover model, p = 2)
  std::vector<CircleFunction> tau;     // tau_(g,a) on V_a (cover model, p = 1), one per g
};

struct LocalData {
  std::shared_ptr<const EquivariantSheetModel> cover;
  GerbeData gerbe;
  LocalDataChoice choice;
};

// First sheet over each block, sigma = 1, tau = 1.
LocalDataChoice default_local_choice(const GerbeData& g, const EquivariantSheetModel& cover);
// Random admissible sheets, random sigma and tau.
LocalDataChoice random_local_choice(const GerbeData& g, const EquivariantSheetModel& cover, std::mt19937_64& rng);

// R_a = psi_a^* P^-1, v_a = (i_12, psi_a)^* s, eta_a = (i_1, psi_a)^* nabla, w_ab, r_a.
LocalData build_local_data(const GerbeData& g, std::shared_ptr<const EquivariantSheetModel> cover,
                           LocalDataChoice choice);

struct LocalDataCheck {
  bool ok = true;
  std::vector<std::string> failures;
};
// delta v_a = s, delta w_ab = -v_a + v_b, delta r_(g,a) = -d_G v_a + t, exactly.
LocalDataCheck check_local_data(const LocalData& ld);

// The degree-2 cocycle (f, theta1, g, theta2, omega1, h) in the context over the cover model.
TriGradedCochain equivariant_class_cocycle(const LocalData& ld, const DeligneContext& ctx);

}  // namespace eqg

#endif
