#include "eqg/deligne_discrete.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eqg/nerve.hpp"

namespace eqg {

LiftLayout LiftLayout::of_degree(const DeligneContext& ctx, int m) {
  LiftLayout l;
  if (m < 0) return l;
  for (const auto& [d, c] : TriGradedCochain::zero(ctx, m).parts)
    for (int q = 0; q < ctx.num_points(d[0]); ++q) {
      const int p = d[1] + 1;
      const int size = static_cast<int>(ctx.block_size(p, d[2]));
      l.blocks.push_back({d, q, p, d[2], l.size, size});
      l.size += size;
    }
  return l;
}

int LiftLayout::find(const Degree3& d, int point) const {
  for (size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].ijk == d && blocks[b].point == point) return static_cast<int>(b);
  return -1;
}

std::vector<SparseRow<Rat>> lifted_total_matrix(const DeligneContext& ctx, const LiftLayout& from,
                                                const LiftLayout& to) {
  std::vector<std::vector<std::pair<int, long>>> tmp(to.size);
  auto add_block = [&](int tb, int sb, const SparseIntMatrix* s, int sign) {
    if (tb < 0 || sb < 0) return;
    const auto& t = to.blocks[tb];
    const auto& f = from.blocks[sb];
    if (!s) {
      for (int r = 0; r < t.size; ++r) tmp[t.base + r].emplace_back(f.base + r, sign);
      return;
    }
    for (int r = 0; r < s->rows; ++r)
      for (const auto& [c, v] : s->data[r]) tmp[t.base + r].emplace_back(f.base + c, sign * v);
  };

  std::vector<Degree3> degs;
  for (const auto& b : from.blocks)
    if (degs.empty() || degs.back() != b.ijk) degs.push_back(b.ijk);

  for (const auto& d : degs) {
    const auto [i, j, k] = d;
    const int p = j + 1;
    if (i + 1 <= ctx.max_i()) {
      for (int code = 0; code < ctx.num_points(i + 1); ++code) {
        const int tb = to.find({i + 1, j, k}, code);
        const std::vector<int> g = ctx.point(i + 1, code);
        for (int l = 0; l <= i + 1; ++l) {
          const int sign = (l % 2) ? -1 : 1;
          std::vector<int> h;
          const SparseIntMatrix* s = nullptr;
          if (l == 0) {
            h.assign(g.begin() + 1, g.end());
          } else if (l <= i) {
            h = g;
            h[l - 1] = ctx.equivariant().group().mul(g[l - 1], g[l]);
            h.erase(h.begin() + l);
          } else {
            h.assign(g.begin(), g.end() - 1);
            s = &ctx.pullback_stencil(g.back(), p, k);
          }
          add_block(tb, from.find(d, ctx.code(h)), s, sign);
        }
      }
    }
    for (int q = 0; q < ctx.num_points(i); ++q) {
      const int sb = from.find(d, q);
      add_block(to.find({i, j + 1, k}, q), sb, &ctx.delta_stencil(p, k), (i % 2) ? -1 : 1);
      if (k + 1 <= ctx.N()) add_block(to.find({i, j, k + 1}, q), sb, &ctx.d_stencil(p, k), ((i + j) % 2) ? -1 : 1);
    }
  }

  std::vector<SparseRow<Rat>> rows(to.size);
  for (int r = 0; r < to.size; ++r) {
    auto& e = tmp[r];
    std::sort(e.begin(), e.end());
    for (size_t a = 0; a < e.size();) {
      long v = 0;
      size_t b = a;
      for (; b < e.size() && e[b].first == e[a].first; ++b) v += e[b].second;
      if (v != 0) rows[r].emplace_back(e[a].first, Rat(v));
      a = b;
    }
  }
  return rows;
}

WitnessResult find_primitive(const DeligneContext& ctx, const TriGradedCochain& target) {
  target.validate(ctx);
  WitnessResult res;
  const int m = target.degree();
  if (m < 0 || target.is_zero()) {
    res.found = true;
    if (m > 0) res.witness = TriGradedCochain::zero(ctx, m - 1);
    return res;
  }
  if (m == 0) {
    res.reason = "nonzero cochain in degree 0";
    return res;
  }
  const LiftLayout from = LiftLayout::of_degree(ctx, m - 1);
  const LiftLayout to = LiftLayout::of_degree(ctx, m);
  std::vector<SparseRow<Rat>> rows = lifted_total_matrix(ctx, from, to);

  std::vector<Rat> rhs(to.size, Rat(0));
  std::vector<int> zcol(to.size, -1);
  int nz = 0;
  std::vector<int> t;
  for (const auto& b : to.blocks) {
    const TriComponent* comp = target.find(b.ijk);
    if (b.k > 0) {
      if (comp)
        for (int r = 0; r < b.size; ++r) rhs[b.base + r] = comp->form[b.point].raw()[r];
      continue;
    }
    const SheetForm& shape = ctx.shape(b.p, 0);
    SheetForm lift = comp ? comp->circle[b.point].lift() : shape;
    std::map<std::vector<int>, std::pair<int, std::vector<int>>> pieces;  // tuple -> (first id, components)
    for (int v = 0; v < shape.num_simplices(); ++v)
      for (size_t c = 0; c < shape.tuples(v); ++c) {
        shape.decode(v, c, t);
        auto it = pieces.find(t);
        if (it == pieces.end()) {
          int cnt = 0;
          std::vector<int> comps = ctx.model().tuple_components(t, &cnt);
          it = pieces.emplace(t, std::make_pair(nz, std::move(comps))).first;
          nz += cnt;
        }
        const int row = b.base + static_cast<int>(shape.offset(v) + c);
        rhs[row] = lift.at(v, c);
        zcol[row] = it->second.first + it->second.second[v];
      }
  }

  MixedSystem sys;
  sys.num_rational = from.size;
  sys.num_integer = nz;
  for (int r = 0; r < to.size; ++r) {
    SparseRow<Rat> row = std::move(rows[r]);
    if (zcol[r] >= 0) row.emplace_back(from.size + zcol[r], Rat(-1));
    if (row.empty() && rhs[r] == 0) continue;
    sys.add_row(std::move(row), rhs[r]);
  }
  res.rational_unknowns = from.size;
  res.integer_unknowns = nz;
  MixedSolution sol = solve_mixed(sys);
  res.constraint_rows = sol.constraint_rows;
  if (!sol.solvable) {
    res.reason = sol.reason;
    return res;
  }

  TriGradedCochain w = TriGradedCochain::zero(ctx, m - 1);
  for (const auto& b : from.blocks) {
    TriComponent& comp = w.parts.at(b.ijk);
    SheetForm f = ctx.shape(b.p, b.k);
    std::copy(sol.y.begin() + b.base, sol.y.begin() + b.base + b.size, f.raw().begin());
    if (b.k == 0)
      comp.circle[b.point] = CircleFunction::from_lift(f);
    else
      comp.form[b.point] = std::move(f);
  }
  if (!(total_coboundary(ctx, w) == target)) throw ExactError("primitive failed its exact check");
  res.found = true;
  res.witness = std::move(w);
  return res;
}

std::string DeligneGroup::to_string() const {
  std::vector<std::string> parts;
  if (circle_rank == 1) parts.push_back("T");
  if (circle_rank > 1) parts.push_back("T^" + std::to_string(circle_rank));
  if (vector_rank == 1) parts.push_back("R");
  if (vector_rank > 1) parts.push_back("R^" + std::to_string(vector_rank));
  if (integral.free_rank > 0 || !integral.torsion.empty()) parts.push_back(integral.to_string());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
  return s;
}

namespace {

constexpr int kCrossCheckLimit = 4000;

std::vector<int> cech_betti(const SimplicialComplex& k) {
  DualBlockCover dbc = dual_block_cover(k);
  if (dbc.base.num_vertices() > kCrossCheckLimit) return {};
  auto base = std::make_shared<const SimplicialComplex>(dbc.base);
  auto em = std::make_shared<const EquivariantSheetModel>(
      EquivariantSheetModel::trivial(SheetModel::from_cover(base, dbc.cover)));
  const int n = k.dimension();
  DeligneContext ctx(em, n, 0);
  std::vector<int> dims, ranks;
  for (int m = 0; m <= n; ++m) {
    LiftLayout a = LiftLayout::of_degree(ctx, m);
    LiftLayout b = LiftLayout::of_degree(ctx, m + 1);
    dims.push_back(a.size);
    ranks.push_back(rational_rank(lifted_total_matrix(ctx, a, b), a.size));
  }
  std::vector<int> betti;
  for (int m = 0; m <= n; ++m) betti.push_back(dims[m] - ranks[m] - (m > 0 ? ranks[m - 1] : 0));
  return betti;
}

}  // namespace

DeligneGroup deligne_cohomology_discrete(const SimplicialComplex& k, int N, int degree) {
  if (degree < 0 || N < 0) throw ExactError("negative degree or level");
  DeligneGroup g;
  g.degree = degree;
  g.N = N;
  const IntegerCochainComplex cc = cochain_complex(k);
  auto h = [&](int q) { return q <= k.dimension() ? cc.cohomology(q) : AbelianGroupPresentation{}; };
  if (degree < N) {
    g.circle_rank = h(degree).free_rank;
    g.integral.torsion = h(degree + 1).torsion;
  } else if (degree == N) {
    g.circle_rank = h(N).free_rank;
    g.integral = h(N + 1);
    const Subdivision sd = barycentric_subdivision(k);
    if (N < sd.complex.dimension()) g.vector_rank = static_cast<int>(invariant_factors(sd.complex.coboundary(N)).size());
  } else {
    g.integral = h(degree + 1);
  }
  g.betti = cech_betti(k);
  for (size_t q = 0; q < g.betti.size(); ++q)
    if (g.betti[q] != h(static_cast<int>(q)).free_rank) g.betti_consistent = false;
  return g;
}

}  // namespace eqg
