#include <doctest.h>

#include <random>

#include "eqg/gerbe_discrete.hpp"
#include "eqg/lens.hpp"

using namespace eqg;

namespace {

Rat period(const GerbeData& g, const SimplicialComplex& base) {
  const auto om = three_curvature(g);
  const auto fc = fundamental_cycle(base);
  Rat tot = 0;
  for (size_t i = 0; i < om.size(); ++i) tot += fc[i] * om[i];
  return tot;
}

struct S3 {
  LensSpace L = lens_join(3);
  BlockModel bm = block_model(L.cover, SimplicialGroupAction::trivial(6));
  GerbeData generator() const { return gerbe_from_cocycle(bm.em, *bm.nerve, bm.label_vertex, unit_top_cocycle(L.cover)); }
};

}  // namespace

TEST_CASE("gerbe from the generator of H3(S3)") {
  S3 s;
  GerbeData g = s.generator();
  GerbeCheck c = validate(g);
  CHECK(c.ok);
  DDCocycle dd = dd_cocycle(g);
  CHECK(dd.is_cocycle());
  CHECK(abs(dd_pairing(dd)) == 1);
  CHECK(abs(period(g, *s.bm.base)) == 1);
}

TEST_CASE("products, inverses and twists") {
  S3 s;
  std::mt19937_64 rng(7);
  GerbeData g = s.generator();
  GerbeData gg = product(g, g);
  CHECK(validate(gg).ok);
  CHECK(dd_pairing(dd_cocycle(gg)) == 2 * dd_pairing(dd_cocycle(g)));
  CHECK(dd_pairing(dd_cocycle(inverse(g))) == -dd_pairing(dd_cocycle(g)));
  CHECK(period(gg, *s.bm.base) == 2 * period(g, *s.bm.base));
  GerbeData triv = product(g, inverse(g));
  CHECK(same_dd_class(dd_cocycle(triv), dd_cocycle(GerbeData::trivial(s.bm.em))));
  GerbeData tw = twist(g, random_invariant_circle(*s.bm.em, 2, rng));
  CHECK(validate(tw).ok);
  CHECK(same_dd_class(dd_cocycle(tw), dd_cocycle(g)));
  CHECK_FALSE(same_dd_class(dd_cocycle(gg), dd_cocycle(g)));
}

TEST_CASE("validation reports broken axioms") {
  S3 s;
  GerbeData g = s.generator();
  GerbeData bad = g;
  bad.A.raw().front() += Rat(1, 2);
  CHECK_FALSE(validate(bad).ok);
  const auto dB = delta(g.B);
  int broken = 0;
  for (size_t i = 0; i < g.B.raw().size(); i += 7) {
    GerbeData bad2 = g;
    bad2.B.raw()[i] += Rat(1, 3);
    const bool moved = !(delta(bad2.B) - dB).is_zero();
    CHECK(validate(bad2).ok == !moved);
    broken += moved;
  }
  CHECK(broken > 0);
}

TEST_CASE("solving the Cech equation") {
  S3 s;
  std::mt19937_64 rng(8);
  for (int p = 1; p <= 2; ++p)
    for (int k = 0; k <= 2; ++k) {
      SheetForm x = random_invariant_form(*s.bm.em, p, k, rng);
      SheetForm xi = delta(x);
      CHECK(delta(solve_delta(xi, s.bm.em.get())) == xi);
    }
  SheetForm open = random_invariant_form(*s.bm.em, 2, 1, rng);
  if (!delta(open).is_zero()) CHECK_THROWS_AS(solve_delta(open), NotClosed);
}

TEST_CASE("equivariant gerbe on the lens cover") {
  LensSpace L = lens_join(3);
  BlockModel be = block_model(L.cover, L.action, 2);
  GerbeData g = gerbe_from_cocycle(be.em, *be.nerve, be.label_vertex,
                                   orbit_sum(L.cover, L.action, unit_top_cocycle(L.cover)));
  GerbeCheck c = validate(g, true);
  CHECK(c.ok);
  CHECK(abs(period(g, *be.base)) == 3);
}

TEST_CASE("gerbes over different sheet models do not multiply") {
  S3 a, b;
  CHECK_THROWS_AS(product(a.generator(), b.generator()), LevelError);
}
