#include <doctest.h>

#include <random>

#include "eqg/exact.hpp"

using namespace eqg;

namespace {

// Fraction-free Bareiss elimination, independent of the library.
Int bareiss_det(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SparseIntMatrix to_sparse(const std::vector<std::vector<Int>>& a) {
  SparseIntMatrix m(static_cast<int>(a.size()), static_cast<int>(a[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (a[i][j] != 0) m.add(i, j, a[i][j].get_si());
  return m;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(frac(Rat(-1, 3)) == Rat(2, 3));
  CHECK(frac(Rat(7, 2)) == Rat(1, 2));
  CHECK(floor_rat(Rat(-7, 2)) == -4);
  CHECK(rat_from_string("6/4") == Rat(3, 2));
  CHECK(rat_to_string(Rat(-3, 9)) == "-1/3");
  CHECK(rat_from_string(rat_to_string(Rat(22, 7))) == Rat(22, 7));
  CHECK_THROWS_AS(rat_from_string("x/2"), ExactError);
}

TEST_CASE("invariant factors of small matrices") {
  CHECK(invariant_factors(to_sparse({{2, 4}, {6, 8}})) == std::vector<Int>{2, 4});
  CHECK(invariant_factors(to_sparse({{3, 0}, {0, 0}})) == std::vector<Int>{3});
  CHECK(invariant_factors(to_sparse({{1, 1, 1}, {1, -1, 0}})) == std::vector<Int>{1, 1});
  CHECK(invariant_factors(to_sparse({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}})) == std::vector<Int>{1, 30, 30});
}

TEST_CASE("invariant factors against determinant and gcd oracles") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int t = 0; t < 40; ++t) {
    const int n = 2 + t % 4;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int g = 0;
    for (auto& r : a)
      for (auto& x : r) {
        x = d(rng);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      }
    const Int det = bareiss_det(a);
    const auto f = invariant_factors(to_sparse(a));
    if (det != 0) {
      Int prod = 1;
      for (const auto& x : f) prod *= x;
      CHECK(prod == abs(det));
      CHECK(static_cast<int>(f.size()) == n);
    } else {
      CHECK(static_cast<int>(f.size()) < n);
    }
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    if (!f.empty()) CHECK(f[0] == g);
  }
}

TEST_CASE("integer solve") {
  std::vector<SparseRow<Int>> rows = {{{0, Int(2)}, {1, Int(3)}}, {{1, Int(4)}}};
  std::vector<Int> x;
  REQUIRE(solve_integer(rows, 2, {Int(7), Int(4)}, x));
  CHECK(2 * x[0] + 3 * x[1] == 7);
  CHECK(4 * x[1] == 4);
  CHECK_FALSE(solve_integer(rows, 2, {Int(7), Int(2)}, x));
}

TEST_CASE("mixed rational and integer systems") {
  // y + z = 1/2 with z integer is solvable; 2 z = 1 is not
  MixedSystem a;
  a.num_rational = 1;
  a.num_integer = 1;
  a.add_row({{0, Rat(1)}, {1, Rat(1)}}, Rat(1, 2));
  MixedSolution s = solve_mixed(a);
  REQUIRE(s.solvable);
  CHECK(s.y[0] + Rat(s.z[0]) == Rat(1, 2));
  MixedSystem b;
  b.num_integer = 1;
  b.add_row({{0, Rat(2)}}, Rat(1));
  CHECK_FALSE(solve_mixed(b).solvable);
  MixedSystem c;
  c.num_integer = 2;
  c.add_row({{0, Rat(2)}, {1, Rat(3)}}, Rat(1));
  MixedSolution sc = solve_mixed(c);
  REQUIRE(sc.solvable);
  CHECK(2 * sc.z[0] + 3 * sc.z[1] == 1);
}

TEST_CASE("rational rank") {
  std::vector<SparseRow<Rat>> rows = {{{0, Rat(1)}, {1, Rat(2)}}, {{0, Rat(2)}, {1, Rat(4)}}, {{2, Rat(1, 3)}}};
  CHECK(rational_rank(rows, 3) == 2);
}
