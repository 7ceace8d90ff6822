#ifndef EQG_JSON_IO_HPP
#define EQG_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "eqg/cohomology.hpp"
#include "eqg/group_action.hpp"
#include "eqg/trigraded.hpp"

namespace eqg {

using Json = nlohmann::ordered_json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"vertices": n, "simplices": [[v0, ...], ...], "action": {"order": k, "generator": [perm]}}
struct ComplexInput {
  SimplicialComplex complex;
  std::optional<SimplicialGroupAction> action;
};
ComplexInput complex_from_json(const Json& j);
ComplexInput read_complex(const std::string& path);
// facets only, sorted; the action is written through its generator
Json complex_to_json(const SimplicialComplex& k, const SimplicialGroupAction* action = nullptr, int generator = 1);

Json to_json(const AbelianGroupPresentation& g);
// keys "i,j,k"; one entry per point of G^i; circles as {"val", "inc"}, rationals as "p/q"
Json to_json(const TriGradedCochain& c);
Json to_json(const SheetForm& f);
Json to_json(const std::vector<Residual>& r);

// Fixed-precision decimal text for reports, so they are byte-stable.
std::string fixed(double v, int digits = 12);
Json number(double v, int digits = 12);

// Writes to path.tmp and renames over path.
void write_atomic(const std::string& path, const std::string& text);
std::string dump(const Json& j);

}  // namespace eqg

#endif
