#include "eqg/lens.hpp"

#include "eqg/cohomology.hpp"
#include "eqg/nerve.hpp"

namespace eqg {

LensSpace lens_join(int n) {
  if (n < 3) throw ExactError("lens join needs n >= 3");
  LensSpace l;
  l.n = n;
  l.cover = join(cycle_complex(n), cycle_complex(n));
  std::vector<int> gen(2 * n);
  for (int v = 0; v < n; ++v) {
    gen[v] = (v + 1) % n;
    gen[n + v] = n + (v + 1) % n;
  }
  l.action = SimplicialGroupAction::cyclic(n, gen);
  return l;
}

BlockModel block_model(const SimplicialComplex& k, const SimplicialGroupAction& action, int copies) {
  BlockModel b;
  b.copies = copies;
  b.nerve = std::make_shared<const SimplicialComplex>(k);
  DualBlockCover dbc = dual_block_cover(k);
  b.base = std::make_shared<const SimplicialComplex>(dbc.base);
  b.base_action = action.on_subdivision(k, dbc.sd);
  Cover cover;
  for (int v = 0; v < k.num_vertices(); ++v)
    for (int c = 0; c < copies; ++c) {
      cover.push_back(dbc.cover[v]);
      b.label_vertex.push_back(v);
    }
  std::vector<std::vector<int>> lp(action.group.order, std::vector<int>(cover.size()));
  for (int g = 0; g < action.group.order; ++g)
    for (int v = 0; v < k.num_vertices(); ++v)
      for (int c = 0; c < copies; ++c) lp[g][v * copies + c] = action.act(g, v) * copies + c;
  b.em = std::make_shared<const EquivariantSheetModel>(SheetModel::from_cover(b.base, cover), b.base_action, lp);
  return b;
}

std::vector<Int> unit_top_cocycle(const SimplicialComplex& k) {
  const std::vector<int> fc = fundamental_cycle(k);
  if (fc.empty()) throw ExactError("complex is not an orientable closed pseudomanifold");
  std::vector<Int> c(k.count(k.dimension()), Int(0));
  c[0] = fc[0];
  return c;
}

std::vector<Int> orbit_sum(const SimplicialComplex& k, const SimplicialGroupAction& a, const std::vector<Int>& c) {
  const int top = k.dimension();
  std::vector<Int> out(c.size(), Int(0));
  for (int i = 0; i < k.count(top); ++i)
    for (int g = 0; g < a.group.order; ++g) {
      std::vector<int> img;
      for (int v : k.simplex(top, i)) img.push_back(a.act(g, v));
      const int sg = permutation_sign(img);
      std::sort(img.begin(), img.end());
      out[i] += sg * c[k.index_of(img)];
    }
  return out;
}

}  // namespace eqg
