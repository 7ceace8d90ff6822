#include <doctest.h>

#include <random>

#include "eqg/deligne_discrete.hpp"
#include "eqg/gerbe_discrete.hpp"
#include "eqg/lens.hpp"
#include "eqg/suites.hpp"

using namespace eqg;

namespace {

struct Fixture {
  BlockModel bm;
  std::unique_ptr<DeligneContext> ctx;
  Fixture() : bm(block_model(icosahedron(), SimplicialGroupAction::cyclic(2, icosahedron_antipode()), 1)) {
    ctx = std::make_unique<DeligneContext>(bm.em, 2, 2);
  }
};

}  // namespace

TEST_CASE("D o D = 0 on random cochains") {
  Fixture f;
  std::mt19937_64 rng(1);
  for (int t = 0; t < 12; ++t) {
    TriGradedCochain c = random_cochain(*f.ctx, t % 4, rng);
    CHECK(total_coboundary(*f.ctx, total_coboundary(*f.ctx, c)).is_zero());
  }
}

TEST_CASE("group-direction coboundary squares to zero") {
  Fixture f;
  std::mt19937_64 rng(2);
  for (int t = 0; t < 6; ++t) {
    TriGradedCochain c = random_cochain(*f.ctx, 1 + t % 3, rng);
    for (const auto& [d, comp] : c.parts) {
      if (d[2] < 1 || d[0] + 2 > f.ctx->max_i()) continue;
      TriComponent once = group_coboundary(*f.ctx, d, comp);
      CHECK(group_coboundary(*f.ctx, {d[0] + 1, d[1], d[2]}, once).is_zero());
    }
  }
}

TEST_CASE("Cech delta and exterior d square to zero") {
  Fixture f;
  std::mt19937_64 rng(3);
  for (int p = 1; p <= 3; ++p)
    for (int k = 0; k <= 2; ++k) {
      SheetForm x = random_invariant_form(*f.bm.em, p, k, rng);
      CHECK(delta(delta(x)).is_zero());
      if (k == 0) CHECK(exterior_d(exterior_d(x)).is_zero());
    }
}

TEST_CASE("coboundaries have exact primitives") {
  Fixture f;
  std::mt19937_64 rng(4);
  for (int m = 1; m <= 2; ++m) {
    TriGradedCochain w = random_cochain(*f.ctx, m - 1, rng);
    TriGradedCochain target = total_coboundary(*f.ctx, w);
    WitnessResult r = find_primitive(*f.ctx, target);
    REQUIRE(r.found);
    CHECK(total_coboundary(*f.ctx, r.witness) == target);
  }
}

TEST_CASE("random cochains are generally not cocycles") {
  Fixture f;
  std::mt19937_64 rng(5);
  TriGradedCochain c = random_cochain(*f.ctx, 2, rng);
  CocycleReport rep = is_cocycle(*f.ctx, {2, 2, c});
  CHECK_FALSE(rep.closed);
  CHECK_FALSE(rep.residuals.empty());
}

TEST_CASE("gerbe data define a Deligne cocycle") {
  LensSpace L = lens_join(3);
  BlockModel bm = block_model(L.cover, SimplicialGroupAction::trivial(6));
  GerbeData g = gerbe_from_cocycle(bm.em, *bm.nerve, bm.label_vertex, unit_top_cocycle(L.cover));
  DeligneContext ctx(bm.em, 2, 0);
  TriGradedCochain c = deligne_class_cocycle(g, ctx);
  CHECK(is_cocycle(ctx, {2, 2, c}).closed);
  Json j = to_json(c);
  CHECK(j.contains("0,2,0"));
  CHECK(j.contains("0,1,1"));
  CHECK(j.contains("0,0,2"));
}

TEST_CASE("Deligne cohomology of small spaces") {
  DeligneGroup s1 = deligne_cohomology_discrete(cycle_complex(5), 1, 1);
  CHECK(s1.to_string() == "T");
  CHECK(s1.betti_consistent);
  DeligneGroup s2 = deligne_cohomology_discrete(icosahedron(), 2, 2);
  CHECK(s2.circle_rank == 1);
  CHECK(s2.integral.to_string() == "0");
  CHECK(s2.betti_consistent);
  QuotientResult rp = quotient_complex(icosahedron(), SimplicialGroupAction::cyclic(2, icosahedron_antipode()));
  DeligneGroup r1 = deligne_cohomology_discrete(rp.quotient, 1, 1);
  CHECK(r1.circle_rank == 0);
  CHECK(r1.integral.to_string() == "Z/2");
  DeligneGroup r0 = deligne_cohomology_discrete(rp.quotient, 1, 0);
  CHECK(r0.circle_rank == 1);
}
