#ifndef EQG_SU2_HPP
#define EQG_SU2_HPP

#include <random>

#include "eqg/analytic_forms.hpp"
#include "eqg/quadrature.hpp"

namespace eqg {

// chi = -(k / 24 pi^2) Tr(theta ^ theta ^ theta) on left-trivialized tangents (matrices in su(2)).
double su2_chi(int k, const CMat& a, const CMat& b, const CMat& c);
// <X|e(g; gV)> = -(k / 8 pi^2) Tr((theta-bar + theta)(gV) X), theta-bar = dg g^-1; su(2)^* coordinates.
Vec su2_e(int k, const CMat& g, const Vec& V);

// chi as a 3-form and <T_a|e> as 1-forms on G^1 x point, for the finite-difference engine
struct SU2FormPack {
  int k = 1;
  AnalyticAction point;  // SU(2) acting on R^0
  ProductForm chi;
  std::vector<ProductForm> e;
};
SU2FormPack su2_forms(int k);

// int_(SU(2)) chi over the Euler-angle chart
double su2_chi_period(int k, int n = 16, bool parallel = true, EtaRule rule = EtaRule::Gauss);

struct SU2Residuals {
  double de_vs_chi = 0;     // <X|de> - iota_(X^*) chi for the conjugation action
  double equivariance = 0;  // h^* e - Ad_h e
};
SU2Residuals su2_form_residuals(int k, int npoints, std::mt19937_64& rng);

}  // namespace eqg

#endif
