#include "eqg/cohomology.hpp"

#include <sstream>

namespace eqg {

std::string AbelianGroupPresentation::to_string() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "Z";
    first = false;
  } else if (free_rank > 1) {
    os << "Z^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroupPresentation IntegerCochainComplex::cohomology(int q) const {
  AbelianGroupPresentation g;
  const int n = (q >= 0 && q < static_cast<int>(dims.size())) ? dims[q] : 0;
  if (n == 0) return g;
  int rank_out = 0;
  if (q < static_cast<int>(delta.size())) rank_out = static_cast<int>(invariant_factors(delta[q]).size());
  std::vector<Int> in;
  if (q >= 1) in = invariant_factors(delta[q - 1]);
  g.free_rank = n - rank_out - static_cast<int>(in.size());
  for (const auto& d : in)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::vector<Int> IntegerCochainComplex::apply(int q, const std::vector<Int>& c) const {
  const auto& m = delta.at(q);
  std::vector<Int> out(m.rows, Int(0));
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [col, v] : m.data[r]) out[r] += v * c[col];
  return out;
}

bool IntegerCochainComplex::is_cocycle(int q, const std::vector<Int>& c) const {
  if (q >= static_cast<int>(delta.size())) return true;
  for (const auto& v : apply(q, c))
    if (v != 0) return false;
  return true;
}

bool IntegerCochainComplex::is_coboundary(int q, const std::vector<Int>& c, std::vector<Int>* witness) const {
  if (q == 0) {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }
  const auto& m = delta.at(q - 1);
  std::vector<SparseRow<Int>> rows(m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (const auto& [col, v] : m.data[r]) rows[r].emplace_back(col, Int(v));
  std::vector<Int> x;
  bool ok = solve_integer(rows, m.cols, c, x);
  if (ok && witness) *witness = x;
  return ok;
}

IntegerCochainComplex cochain_complex(const SimplicialComplex& k) {
  IntegerCochainComplex c;
  for (int d = 0; d <= k.dimension(); ++d) c.dims.push_back(k.count(d));
  for (int d = 0; d < k.dimension(); ++d) c.delta.push_back(k.coboundary(d));
  return c;
}

AbelianGroupPresentation integer_cohomology(const SimplicialComplex& k, int degree) {
  if (degree < 0) throw ExactError("negative degree");
  if (degree > k.dimension()) return {};
  return cochain_complex(k).cohomology(degree);
}

std::vector<int> orientation_cycle(const SparseIntMatrix& b) {
  SparseIntMatrix bt = b.transpose();  // row per facet
  const int nf = b.cols;
  if (nf == 0) return {};
  std::vector<int> c(nf, 0);
  for (int start = 0; start < nf; ++start) {
    if (c[start] != 0) continue;
    c[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      for (const auto& [face, s] : bt.data[f]) {
        const auto& row = b.data[face];
        if (row.size() != 2) return {};
        for (const auto& [g, t] : row) {
          if (g == f) continue;
          int want = static_cast<int>(-c[f] * s * t);
          if (c[g] == 0) {
            c[g] = want;
            stack.push_back(g);
          } else if (c[g] != want) {
            return {};
          }
        }
      }
    }
  }
  return c;
}

std::vector<int> fundamental_cycle(const SimplicialComplex& k) {
  if (k.dimension() < 1) return {};
  return orientation_cycle(k.boundary(k.dimension()));
}

Int pair_with_cycle(const std::vector<int>& cycle, const std::vector<Int>& cochain) {
  Int s = 0;
  for (size_t i = 0; i < cycle.size(); ++i) s += cycle[i] * cochain[i];
  return s;
}

}  // namespace eqg
