#ifndef EQG_SHEETS_HPP
#define EQG_SHEETS_HPP

#include <memory>
#include <vector>

#include "eqg/group_action.hpp"
#include "eqg/nerve.hpp"

namespace eqg {

// Etale space Y -> M over a simplicial complex: over each simplex a sorted set
// of sheet labels, shrinking (weakly) when passing to cofaces. A cover U_a gives
// the model whose sheet a lies over the full subcomplex on U_a. Fiber products
// Y^[p] over a simplex are the p-tuples of its labels.
class SheetModel {
 public:
  static SheetModel from_cover(std::shared_ptr<const SimplicialComplex> base, const Cover& cover);
  static SheetModel from_labels(std::shared_ptr<const SimplicialComplex> base, int num_labels,
                                std::vector<std::vector<std::vector<int>>> labels);

  const SimplicialComplex& base() const { return *base_; }
  std::shared_ptr<const SimplicialComplex> base_ptr() const { return base_; }
  int num_labels() const { return nl_; }
  const std::vector<int>& labels(int k, int idx) const { return labels_[k][idx]; }
  int position(int k, int idx, int label) const;
  bool covers(int k, int idx, const std::vector<int>& tuple) const;
  // every simplex carries at least one sheet
  bool surjective() const;
  // Connected components of the region over which all labels of `tuple` live.
  std::vector<int> tuple_components(const std::vector<int>& tuple, int* count = nullptr) const;
  const std::vector<int>& incident_edges(int v) const { return vedges_[v]; }

 private:
  void finish();

  std::shared_ptr<const SimplicialComplex> base_;
  int nl_ = 0;
  std::vector<std::vector<std::vector<int>>> labels_;
  std::vector<std::vector<int>> vedges_;
};

// Rational data on Y^[p]: for each k-simplex s, one value per p-tuple of labels over s.
// Values on k-simplices are integrals (cochain values); k = 0 data are functions.
class SheetForm {
 public:
  SheetForm() = default;
  SheetForm(const SheetModel& m, int p, int k);

  const SheetModel& model() const { return *m_; }
  int p() const { return p_; }
  int k() const { return k_; }
  int num_simplices() const { return static_cast<int>(offset_.size()) - 1; }
  size_t tuples(int idx) const { return offset_[idx + 1] - offset_[idx]; }
  Rat& at(int idx, size_t code) { return data_[offset_[idx] + code]; }
  const Rat& at(int idx, size_t code) const { return data_[offset_[idx] + code]; }
  size_t encode(int idx, const std::vector<int>& tuple) const;  // throws if tuple not over simplex
  void decode(int idx, size_t code, std::vector<int>& tuple) const;
  const Rat& value(int idx, const std::vector<int>& tuple) const { return at(idx, encode(idx, tuple)); }
  Rat& value(int idx, const std::vector<int>& tuple) { return at(idx, encode(idx, tuple)); }

  std::vector<Rat>& raw() { return data_; }
  const std::vector<Rat>& raw() const { return data_; }
  size_t offset(int idx) const { return offset_[idx]; }
  bool is_zero() const;
  bool same_shape(const SheetForm& o) const { return m_ == o.m_ && p_ == o.p_ && k_ == o.k_; }

  SheetForm& operator+=(const SheetForm& o);
  SheetForm& operator-=(const SheetForm& o);
  SheetForm& operator*=(const Rat& s);
  friend SheetForm operator+(SheetForm a, const SheetForm& b) { return a += b; }
  friend SheetForm operator-(SheetForm a, const SheetForm& b) { return a -= b; }
  friend SheetForm operator*(const Rat& s, SheetForm a) { return a *= s; }
  SheetForm operator-() const;
  bool operator==(const SheetForm& o) const { return same_shape(o) && data_ == o.data_; }

 private:
  const SheetModel* m_ = nullptr;
  int p_ = 0;
  int k_ = 0;
  std::vector<size_t> offset_;
  std::vector<Rat> data_;
};

struct LevelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// delta = sum_i (-1)^(i-1) pi_i^* : Y^[p] -> Y^[p+1] (pi_i omits the i-th factor)
SheetForm delta(const SheetForm& x);
// simplicial coboundary along M, fiberwise
SheetForm exterior_d(const SheetForm& x);

// Circle-valued function on Y^[p]: values mod 1 on vertices plus real
// increments on edges (its (1/2 pi i) dlog), with inc = delta(val) mod 1 and d(inc) = 0.
struct CircleFunction {
  SheetForm val;  // k = 0, representatives in [0,1)
  SheetForm inc;  // k = 1

  CircleFunction() = default;
  CircleFunction(const SheetModel& m, int p) : val(m, p, 0), inc(m, p, 1) {}
  // the function exp(2 pi i x) for a real lift x on vertices
  static CircleFunction from_lift(const SheetForm& lift);
  void normalize();
  bool is_consistent() const;  // inc matches val mod 1 and is closed
  bool is_one() const;         // constant 1
  CircleFunction& operator+=(const CircleFunction& o);  // pointwise product
  CircleFunction& operator-=(const CircleFunction& o);
  CircleFunction operator-() const;
  friend CircleFunction operator+(CircleFunction a, const CircleFunction& b) { return a += b; }
  friend CircleFunction operator-(CircleFunction a, const CircleFunction& b) { return a -= b; }
  bool operator==(const CircleFunction& o) const { return val == o.val && inc == o.inc; }
  // Real lift on each connected piece of each tuple region, anchored at the first vertex.
  // Throws if the increments wind around a loop of a piece.
  SheetForm lift() const;
};

CircleFunction delta(const CircleFunction& x);

// G acting on M and on the labels, compatibly: labels(g s) = g labels(s).
class EquivariantSheetModel {
 public:
  EquivariantSheetModel(SheetModel model, SimplicialGroupAction action,
                        std::vector<std::vector<int>> label_perm);
  static EquivariantSheetModel trivial(SheetModel model);

  const SheetModel& model() const { return *model_; }
  std::shared_ptr<const SheetModel> model_ptr() const { return model_; }
  const SimplicialGroupAction& action() const { return action_; }
  const FiniteGroup& group() const { return action_.group; }
  int label(int g, int a) const { return label_perm_[g][a]; }
  int image(int g, int k, int idx) const { return image_[g][k][idx]; }
  int sign(int g, int k, int idx) const { return sign_[g][k][idx]; }

  // (g^* x)(s, a) = x(g s, g a), with the orientation sign of g on s for k > 0
  SheetForm pullback(int g, const SheetForm& x) const;
  CircleFunction pullback(int g, const CircleFunction& x) const;
  bool is_invariant(const SheetForm& x) const;
  bool is_invariant(const CircleFunction& x) const;

 private:
  std::shared_ptr<const SheetModel> model_;
  SimplicialGroupAction action_;
  std::vector<std::vector<int>> label_perm_;
  std::vector<std::vector<std::vector<int>>> image_;
  std::vector<std::vector<std::vector<int>>> sign_;
};

}  // namespace eqg

#endif
