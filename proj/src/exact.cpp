#include "eqg/exact.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace eqg {

Rat frac(const Rat& q) {
  Rat r = q - Rat(floor_rat(q));
  r.canonicalize();
  return r;
}

Int floor_rat(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

std::string rat_to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw ExactError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

template <class T>
void add_scaled(SparseRow<T>& dst, const SparseRow<T>& src, const T& scale) {
  if (scale == 0 || src.empty()) return;
  SparseRow<T> out;
  out.reserve(dst.size() + src.size());
  size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(std::move(dst[i]));
      ++i;
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, scale * src[j].second);
      ++j;
    } else {
      T v = dst[i].second + scale * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  dst.swap(out);
}

template void add_scaled<Int>(SparseRow<Int>&, const SparseRow<Int>&, const Int&);
template void add_scaled<Rat>(SparseRow<Rat>&, const SparseRow<Rat>&, const Rat&);
template void add_scaled<long>(SparseRow<long>&, const SparseRow<long>&, const long&);

void SparseIntMatrix::add(int r, int c, long v) {
  if (v == 0) return;
  auto& row = data[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, long>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r]) t.data[c].emplace_back(r, v);
  return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols != other.rows) throw ExactError("dimension mismatch in multiply");
  SparseIntMatrix out(rows, other.cols);
  for (int r = 0; r < rows; ++r)
    for (const auto& [k, v] : data[r]) add_scaled(out.data[r], other.data[k], v);
  return out;
}

bool SparseIntMatrix::is_zero() const {
  for (const auto& row : data)
    if (!row.empty()) return false;
  return true;
}

long SparseIntMatrix::nnz() const {
  long n = 0;
  for (const auto& row : data) n += static_cast<long>(row.size());
  return n;
}

namespace {

// Sparse Gaussian elimination with a cheap Markowitz-style pivot choice.
// Only entries accepted by `eligible` become pivots.
template <class T>
struct Eliminator {
  int cols;
  std::vector<SparseRow<T>> rows;
  std::vector<T> rhs;
  std::vector<std::set<int>> col_rows;
  std::vector<char> alive;
  std::vector<std::pair<int, int>> pivots;  // (row, col) in elimination order

  Eliminator(std::vector<SparseRow<T>> r, int c, std::vector<T> b)
      : cols(c), rows(std::move(r)), rhs(std::move(b)), col_rows(c), alive(rows.size(), 1) {
    if (rhs.empty()) rhs.assign(rows.size(), T(0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (const auto& e : rows[i]) col_rows[e.first].insert(static_cast<int>(i));
  }

  void run(const std::function<bool(int, const T&)>& eligible,
           const std::function<T(const T&, const T&)>& ratio) {
    using Item = std::pair<size_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (size_t i = 0; i < rows.size(); ++i) pq.emplace(rows[i].size(), static_cast<int>(i));
    while (!pq.empty()) {
      auto [len, r] = pq.top();
      pq.pop();
      if (!alive[r] || rows[r].size() != len || len == 0) continue;
      int best = -1;
      size_t best_count = 0;
      T best_val;
      for (const auto& [c, v] : rows[r]) {
        if (!eligible(c, v)) continue;
        size_t cnt = col_rows[c].size();
        if (best < 0 || cnt < best_count) {
          best = c;
          best_count = cnt;
          best_val = v;
        }
      }
      if (best < 0) continue;
      std::vector<int> touched(col_rows[best].begin(), col_rows[best].end());
      for (int i : touched) {
        if (i == r) continue;
        T a_ic;
        for (const auto& e : rows[i])
          if (e.first == best) {
            a_ic = e.second;
            break;
          }
        T factor = -ratio(a_ic, best_val);
        std::vector<int> before;
        before.reserve(rows[i].size());
        for (const auto& e : rows[i]) before.push_back(e.first);
        add_scaled(rows[i], rows[r], factor);
        rhs[i] += factor * rhs[r];
        size_t p = 0, q = 0;
        while (p < before.size() || q < rows[i].size()) {
          if (q == rows[i].size() || (p < before.size() && before[p] < rows[i][q].first)) {
            col_rows[before[p]].erase(i);
            ++p;
          } else if (p == before.size() || rows[i][q].first < before[p]) {
            col_rows[rows[i][q].first].insert(i);
            ++q;
          } else {
            ++p;
            ++q;
          }
        }
        pq.emplace(rows[i].size(), i);
      }
      alive[r] = 0;
      for (const auto& e : rows[r]) col_rows[e.first].erase(r);
      pivots.emplace_back(r, best);
    }
  }
};

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Diagonalizes m in place by unimodular row and column operations.
// Row operations are mirrored on b (if given), column operations on q (if given).
// Returns the number of nonzero diagonal entries; they sit at m[t][t].
int dense_diagonalize(std::vector<std::vector<Int>>& m, std::vector<Int>* b,
                      std::vector<std::vector<Int>>* q) {
  const int nr = static_cast<int>(m.size());
  const int nc = nr ? static_cast<int>(m[0].size()) : 0;
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    if (b) std::swap((*b)[i], (*b)[j]);
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (auto& row : m) std::swap(row[i], row[j]);
    if (q)
      for (auto& row : *q) std::swap(row[i], row[j]);
  };
  int t = 0;
  for (; t < std::min(nr, nc); ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j)
        if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < nr; ++i) {
        if (m[i][t] == 0) continue;
        Int f = fdiv(m[i][t], m[t][t]);
        for (int j = t; j < nc; ++j) m[i][j] -= f * m[t][j];
        if (b) (*b)[i] -= f * (*b)[t];
        if (m[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < nc; ++j) {
        if (m[t][j] == 0) continue;
        Int f = fdiv(m[t][j], m[t][t]);
        for (int i = t; i < nr; ++i) m[i][j] -= f * m[i][t];
        if (q)
          for (auto& row : *q) row[j] -= f * row[t];
        if (m[t][j] != 0) clean = false;
      }
      if (clean) break;
      int bi = t, bj = t;
      for (int i = t + 1; i < nr; ++i)
        if (m[i][t] != 0 && abs(m[i][t]) < abs(m[bi][bj])) {
          bi = i;
          bj = t;
        }
      for (int j = t + 1; j < nc; ++j)
        if (m[t][j] != 0 && abs(m[t][j]) < abs(m[bi][bj])) {
          bi = t;
          bj = j;
        }
      swap_rows(t, bi);
      swap_cols(t, bj);
    }
  }
  return t;
}

std::vector<Int> normalize_chain(std::vector<Int> d) {
  for (auto& x : d) x = abs(x);
  for (size_t i = 0; i < d.size(); ++i)
    for (size_t j = i + 1; j < d.size(); ++j) {
      Int g = gcd(d[i], d[j]);
      Int l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  return d;
}

}  // namespace

std::vector<Int> invariant_factors(const std::vector<SparseRow<Int>>& rows, int cols) {
  Eliminator<Int> el(rows, cols, {});
  el.run([](int, const Int& v) { return v == 1 || v == -1; },
         [](const Int& a, const Int& p) { return Int(a * p); });
  std::vector<Int> diag(el.pivots.size(), Int(1));
  std::vector<int> live_rows;
  std::set<int> live_cols;
  for (size_t i = 0; i < el.rows.size(); ++i)
    if (el.alive[i] && !el.rows[i].empty()) {
      live_rows.push_back(static_cast<int>(i));
      for (const auto& e : el.rows[i]) live_cols.insert(e.first);
    }
  if (!live_rows.empty()) {
    std::vector<int> cmap(cols, -1);
    int k = 0;
    for (int c : live_cols) cmap[c] = k++;
    std::vector<std::vector<Int>> m(live_rows.size(), std::vector<Int>(k, Int(0)));
    for (size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& e : el.rows[live_rows[i]]) m[i][cmap[e.first]] = e.second;
    int rank = dense_diagonalize(m, nullptr, nullptr);
    for (int t = 0; t < rank; ++t) diag.push_back(m[t][t]);
  }
  return normalize_chain(diag);
}

std::vector<Int> invariant_factors(const SparseIntMatrix& a) {
  std::vector<SparseRow<Int>> rows(a.rows);
  for (int r = 0; r < a.rows; ++r)
    for (const auto& [c, v] : a.data[r]) rows[r].emplace_back(c, Int(v));
  return invariant_factors(rows, a.cols);
}

bool solve_integer(const std::vector<SparseRow<Int>>& rows, int cols, const std::vector<Int>& rhs,
                   std::vector<Int>& x) {
  Eliminator<Int> el(rows, cols, rhs);
  el.run([](int, const Int& v) { return v == 1 || v == -1; },
         [](const Int& a, const Int& p) { return Int(a * p); });
  x.assign(cols, Int(0));
  std::vector<char> solved(cols, 0);
  for (const auto& [r, c] : el.pivots) solved[c] = 1;
  std::vector<int> live_rows;
  std::set<int> live_cols;
  for (size_t i = 0; i < el.rows.size(); ++i) {
    if (!el.alive[i]) continue;
    if (el.rows[i].empty()) {
      if (el.rhs[i] != 0) return false;
      continue;
    }
    live_rows.push_back(static_cast<int>(i));
    for (const auto& e : el.rows[i]) live_cols.insert(e.first);
  }
  if (!live_rows.empty()) {
    std::vector<int> cvec(live_cols.begin(), live_cols.end());
    const int k = static_cast<int>(cvec.size());
    std::vector<int> cmap(cols, -1);
    for (int j = 0; j < k; ++j) cmap[cvec[j]] = j;
    std::vector<std::vector<Int>> m(live_rows.size(), std::vector<Int>(k, Int(0)));
    std::vector<Int> b(live_rows.size());
    for (size_t i = 0; i < live_rows.size(); ++i) {
      for (const auto& e : el.rows[live_rows[i]]) m[i][cmap[e.first]] = e.second;
      b[i] = el.rhs[live_rows[i]];
    }
    std::vector<std::vector<Int>> q(k, std::vector<Int>(k, Int(0)));
    for (int j = 0; j < k; ++j) q[j][j] = 1;
    int rank = dense_diagonalize(m, &b, &q);
    std::vector<Int> y(k, Int(0));
    for (int t = 0; t < rank; ++t) {
      if (!mpz_divisible_p(b[t].get_mpz_t(), m[t][t].get_mpz_t())) return false;
      y[t] = b[t] / m[t][t];
    }
    for (size_t t = rank; t < b.size(); ++t)
      if (b[t] != 0) return false;
    for (int j = 0; j < k; ++j) {
      Int v = 0;
      for (int t = 0; t < rank; ++t) v += q[j][t] * y[t];
      x[cvec[j]] = v;
    }
  }
  for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
    const auto [r, c] = *it;
    Int acc = el.rhs[r];
    Int p = 0;
    for (const auto& e : el.rows[r]) {
      if (e.first == c)
        p = e.second;
      else
        acc -= e.second * x[e.first];
    }
    x[c] = acc * p;
  }
  return true;
}

void MixedSystem::add_row(SparseRow<Rat> row, Rat b) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
  SparseRow<Rat> merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  rows.push_back(std::move(merged));
  rhs.push_back(std::move(b));
}

MixedSolution solve_mixed(const MixedSystem& sys) {
  MixedSolution out;
  const int ny = sys.num_rational;
  const int nz = sys.num_integer;
  Eliminator<Rat> el(sys.rows, ny + nz, sys.rhs);
  el.run([ny](int c, const Rat&) { return c < ny; },
         [](const Rat& a, const Rat& p) { return Rat(a / p); });

  std::vector<SparseRow<Int>> zrows;
  std::vector<Int> zrhs;
  for (size_t i = 0; i < el.rows.size(); ++i) {
    if (!el.alive[i]) continue;
    if (el.rows[i].empty()) {
      if (el.rhs[i] != 0) {
        out.reason = "inconsistent rational equations";
        return out;
      }
      continue;
    }
    Int den = el.rhs[i].get_den();
    for (const auto& e : el.rows[i]) den = lcm(den, Int(e.second.get_den()));
    SparseRow<Int> zr;
    for (const auto& e : el.rows[i]) {
      Rat v = e.second * den;
      zr.emplace_back(e.first - ny, v.get_num());
    }
    Rat bv = el.rhs[i] * den;
    zrows.push_back(std::move(zr));
    zrhs.push_back(bv.get_num());
  }
  out.constraint_rows = static_cast<int>(zrows.size());
  std::vector<Int> z;
  if (!solve_integer(zrows, nz, zrhs, z)) {
    out.reason = "no integer solution for the lattice constraints";
    return out;
  }
  std::vector<Rat> val(ny + nz, Rat(0));
  for (int j = 0; j < nz; ++j) val[ny + j] = Rat(z[j]);
  for (auto it = el.pivots.rbegin(); it != el.pivots.rend(); ++it) {
    const auto [r, c] = *it;
    Rat acc = el.rhs[r];
    Rat p = 0;
    for (const auto& e : el.rows[r]) {
      if (e.first == c)
        p = e.second;
      else
        acc -= e.second * val[e.first];
    }
    val[c] = acc / p;
  }
  out.solvable = true;
  out.y.assign(val.begin(), val.begin() + ny);
  out.z = std::move(z);
  return out;
}

int rational_rank(const std::vector<SparseRow<Rat>>& rows, int cols) {
  Eliminator<Rat> el(rows, cols, {});
  el.run([](int, const Rat&) { return true; },
         [](const Rat& a, const Rat& p) { return Rat(a / p); });
  return static_cast<int>(el.pivots.size());
}

}  // namespace eqg
