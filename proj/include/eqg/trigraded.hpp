#ifndef EQG_TRIGRADED_HPP
#define EQG_TRIGRADED_HPP

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "eqg/sheets.hpp"

namespace eqg {

struct GradingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Degree3 = std::array<int, 3>;  // (i, j, k)

// The simplicial manifold G^. x M with cover {g} x V_a, truncated at N in the
// form degree and at max_i in the group direction. Caches the index stencils of
// delta, d and the pull-backs g^*, each an integer matrix acting on flat SheetForm data.
class DeligneContext {
 public:
  DeligneContext(std::shared_ptr<const EquivariantSheetModel> em, int N, int max_i);

  const EquivariantSheetModel& equivariant() const { return *em_; }
  const SheetModel& model() const { return em_->model(); }
  int N() const { return n_; }
  int max_i() const { return max_i_; }
  int order() const { return em_->group().order; }
  int num_points(int i) const;  // |G|^i
  std::vector<int> point(int i, int code) const;  // g_1 most significant
  int code(const std::vector<int>& g) const;

  size_t block_size(int p, int k) const;
  const SheetForm& shape(int p, int k) const;
  const SparseIntMatrix& delta_stencil(int p, int k) const;  // Y^[p] -> Y^[p+1]
  const SparseIntMatrix& d_stencil(int p, int k) const;      // k -> k+1
  const SparseIntMatrix& pullback_stencil(int g, int p, int k) const;

 private:
  std::shared_ptr<const EquivariantSheetModel> em_;
  int n_;
  int max_i_;
  mutable std::mutex mu_;
  mutable std::map<std::array<int, 2>, std::unique_ptr<SheetForm>> shapes_;
  mutable std::map<std::array<int, 2>, std::unique_ptr<SparseIntMatrix>> delta_;
  mutable std::map<std::array<int, 2>, std::unique_ptr<SparseIntMatrix>> d_;
  mutable std::map<std::array<int, 3>, std::unique_ptr<SparseIntMatrix>> pull_;
};

// One K^{i,j,k}: per point of G^i either a circle-valued function (k = 0) or
// a rational cochain of degree k on Y^[j+1].
struct TriComponent {
  std::vector<CircleFunction> circle;
  std::vector<SheetForm> form;
  bool is_zero() const;
  bool operator==(const TriComponent& o) const { return circle == o.circle && form == o.form; }
};

struct TriGradedCochain {
  std::map<Degree3, TriComponent> parts;

  // All components of total degree m allowed by the context, set to zero.
  static TriGradedCochain zero(const DeligneContext& ctx, int m);
  static TriComponent zero_component(const DeligneContext& ctx, const Degree3& d);
  TriComponent& at(const DeligneContext& ctx, const Degree3& d);  // creates a zero component
  const TriComponent* find(const Degree3& d) const;
  int degree() const;  // -1 when empty; throws GradingError when mixed
  bool is_zero() const;
  void validate(const DeligneContext& ctx) const;

  TriGradedCochain& add(const DeligneContext& ctx, const TriGradedCochain& o, int sign = 1);
  bool operator==(const TriGradedCochain& o) const;
};

// D = d_G + (-1)^i delta_Cech + (-1)^(i+j) d on K^{i,j,k}; output components
// with i > max_i or k > N are dropped.
TriGradedCochain total_coboundary(const DeligneContext& ctx, const TriGradedCochain& c);

struct DeligneNCocycle {
  int degree = 0;
  int N = 0;
  TriGradedCochain data;
};

struct Residual {
  Degree3 ijk{};
  std::vector<int> point;  // in G^i
  int simplex_dim = 0;
  int simplex = 0;
  std::vector<int> tuple;
  Rat value;
  bool circle = false;
  std::string to_string() const;
};

struct CocycleReport {
  bool closed = true;
  std::vector<Residual> residuals;
};

CocycleReport is_cocycle(const DeligneContext& ctx, const DeligneNCocycle& c);
std::vector<Residual> nonzero_entries(const DeligneContext& ctx, const TriGradedCochain& c);

}  // namespace eqg

#endif
