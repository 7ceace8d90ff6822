#ifndef EQG_EXACT_HPP
#define EQG_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eqg {

using Int = mpz_class;
using Rat = mpq_class;

// Representative of q mod 1 in [0, 1).
Rat frac(const Rat& q);
Int floor_rat(const Rat& q);
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

// Sorted by column, no explicit zeros.
template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

template <class T>
void add_scaled(SparseRow<T>& dst, const SparseRow<T>& src, const T& scale);

struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseRow<long>> data;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c), data(r) {}
  void add(int r, int c, long v);  // accumulates, keeps rows sorted
  SparseIntMatrix transpose() const;
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const;
  long nnz() const;
};

// Nonzero invariant factors (positive, each divides the next).
std::vector<Int> invariant_factors(const SparseIntMatrix& a);
std::vector<Int> invariant_factors(const std::vector<SparseRow<Int>>& rows, int cols);

// Smallest-effort integer solution of A x = b, or nothing if none exists.
// Free variables are set to zero.
bool solve_integer(const std::vector<SparseRow<Int>>& rows, int cols,
                   const std::vector<Int>& rhs, std::vector<Int>& x);

// Linear system over unknowns y (rational) and z (integer).
struct MixedSystem {
  int num_rational = 0;
  int num_integer = 0;
  std::vector<SparseRow<Rat>> rows;  // integer columns are offset by num_rational
  std::vector<Rat> rhs;

  void add_row(SparseRow<Rat> row, Rat b);
};

struct MixedSolution {
  bool solvable = false;
  std::vector<Rat> y;
  std::vector<Int> z;
  int constraint_rows = 0;  // rows left on integer unknowns after elimination
  std::string reason;
};

MixedSolution solve_mixed(const MixedSystem& sys);

int rational_rank(const std::vector<SparseRow<Rat>>& rows, int cols);

struct ExactError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace eqg

#endif
