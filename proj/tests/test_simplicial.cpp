#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "eqg/cohomology.hpp"
#include "eqg/json_io.hpp"
#include "eqg/lens.hpp"

using namespace eqg;

namespace {

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& p) {
  std::vector<Simplex> out;
  for (const auto& s : k.facets()) {
    Simplex t;
    for (int v : s) t.push_back(p[v]);
    out.push_back(t);
  }
  return SimplicialComplex::from_simplices(k.num_vertices(), out);
}

}  // namespace

TEST_CASE("boundary of boundary vanishes") {
  for (const auto& k : {icosahedron(), simplex_boundary(4), join(cycle_complex(4), cycle_complex(5))})
    for (int d = 2; d <= k.dimension(); ++d) CHECK(k.boundary(d - 1).multiply(k.boundary(d)).is_zero());
}

TEST_CASE("Euler characteristics") {
  CHECK(icosahedron().euler_characteristic() == 2);
  CHECK(cycle_complex(7).euler_characteristic() == 0);
  CHECK(simplex_boundary(4).euler_characteristic() == 0);
  CHECK(barycentric_subdivision(icosahedron()).complex.euler_characteristic() == 2);
  CHECK(lens_join(3).cover.euler_characteristic() == 0);
}

TEST_CASE("sphere and torus-free cohomology") {
  CHECK(integer_cohomology(icosahedron(), 0).to_string() == "Z");
  CHECK(integer_cohomology(icosahedron(), 1).to_string() == "0");
  CHECK(integer_cohomology(icosahedron(), 2).to_string() == "Z");
  CHECK(integer_cohomology(cycle_complex(6), 1).to_string() == "Z");
  CHECK(integer_cohomology(simplex_boundary(4), 3).to_string() == "Z");
}

TEST_CASE("projective plane as a quotient") {
  QuotientResult q = quotient_complex(icosahedron(), SimplicialGroupAction::cyclic(2, icosahedron_antipode()));
  CHECK(q.quotient.euler_characteristic() == 1);
  CHECK(integer_cohomology(q.quotient, 1).to_string() == "0");
  CHECK(integer_cohomology(q.quotient, 2).to_string() == "Z/2");
}

TEST_CASE("lens spaces L(n,1)") {
  for (int n : {3, 4, 5}) {
    LensSpace L = lens_join(n);
    CHECK(L.action.is_valid_on(L.cover));
    CHECK(L.action.is_free_on(L.cover));
    QuotientResult q = quotient_complex(L.cover, L.action);
    CHECK(q.subdivisions >= 1);
    CHECK(integer_cohomology(q.quotient, 1).to_string() == "0");
    CHECK(integer_cohomology(q.quotient, 2).to_string() == "Z/" + std::to_string(n));
    CHECK(integer_cohomology(q.quotient, 3).to_string() == "Z");
  }
}

TEST_CASE("cohomology is invariant under vertex relabelling") {
  std::mt19937_64 rng(5);
  const SimplicialComplex k = join(cycle_complex(3), cycle_complex(4));
  for (int t = 0; t < 5; ++t) {
    std::vector<int> p(k.num_vertices());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const SimplicialComplex r = relabel(k, p);
    for (int d = 0; d <= 3; ++d) CHECK(integer_cohomology(r, d) == integer_cohomology(k, d));
  }
}

TEST_CASE("subdivision regularizes a free action") {
  LensSpace L = lens_join(3);
  CHECK_FALSE(L.action.is_regular_on(L.cover));
  Subdivision sd = barycentric_subdivision(L.cover);
  Subdivision sd2 = barycentric_subdivision(sd.complex);
  auto a2 = L.action.on_subdivision(L.cover, sd).on_subdivision(sd.complex, sd2);
  CHECK(a2.is_regular_on(sd2.complex));
}

TEST_CASE("complex JSON round trip") {
  LensSpace L = lens_join(3);
  Json j = complex_to_json(L.cover, &L.action);
  ComplexInput in = complex_from_json(j);
  CHECK(in.complex.same_as(L.cover));
  REQUIRE(in.action.has_value());
  CHECK(in.action->group.order == 3);
  CHECK(in.action->perm[1] == L.action.perm[1]);
  CHECK(dump(complex_to_json(in.complex, &*in.action)) == dump(j));
}

TEST_CASE("data file lens3.json") {
  ComplexInput in = read_complex(std::string(EQG_DATA_DIR) + "/lens3.json");
  REQUIRE(in.action.has_value());
  QuotientResult q = quotient_complex(in.complex, *in.action);
  CHECK(integer_cohomology(q.quotient, 2).to_string() == "Z/3");
}

TEST_CASE("complex schema errors") {
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": 3, "simplices": [[0,1,2]], "extra": 1})")), SchemaError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": 3, "simplices": [[0,1,5]]})")), SchemaError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": 3, "simplices": [[0,1,2]],
      "action": {"order": 3, "generator": [0, 0, 1]}})")),
                  SchemaError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices": 3, "simplices": [[0,1,2]],
      "action": {"order": 2, "generator": [1, 2, 0]}})")),
                  SchemaError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"simplices": [[0,1]]})")), SchemaError);
}
