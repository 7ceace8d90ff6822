#include "eqg/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace eqg {

namespace {

void require_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw SchemaError(where + ": unknown key \"" + k + "\"");
}

int get_int(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw SchemaError(where + ": \"" + key + "\" must be an integer");
  return j.at(key).get<int>();
}

}  // namespace

ComplexInput complex_from_json(const Json& j) {
  require_keys(j, {"vertices", "simplices", "action"}, "complex");
  const int n = get_int(j, "vertices", "complex");
  if (n <= 0) throw SchemaError("complex: \"vertices\" must be positive");
  if (!j.contains("simplices") || !j.at("simplices").is_array()) throw SchemaError("complex: \"simplices\" must be an array");
  std::vector<Simplex> simp;
  for (const auto& s : j.at("simplices")) {
    if (!s.is_array() || s.empty()) throw SchemaError("complex: each simplex must be a nonempty array");
    Simplex t;
    for (const auto& v : s) {
      if (!v.is_number_integer()) throw SchemaError("complex: vertex ids must be integers");
      t.push_back(v.get<int>());
    }
    simp.push_back(std::move(t));
  }
  ComplexInput in;
  try {
    in.complex = SimplicialComplex::from_simplices(n, std::move(simp));
  } catch (const ExactError& e) {
    throw SchemaError(std::string("complex: ") + e.what());
  }
  if (j.contains("action")) {
    const Json& a = j.at("action");
    require_keys(a, {"order", "generator"}, "action");
    const int order = get_int(a, "order", "action");
    if (!a.contains("generator") || !a.at("generator").is_array() || static_cast<int>(a.at("generator").size()) != n)
      throw SchemaError("action: \"generator\" must list one image per vertex");
    std::vector<int> gen;
    for (const auto& v : a.at("generator")) {
      if (!v.is_number_integer()) throw SchemaError("action: generator entries must be integers");
      gen.push_back(v.get<int>());
    }
    std::vector<int> sorted = gen;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v)
      if (sorted[v] != v) throw SchemaError("action: generator is not a permutation of the vertices");
    if (order < 1) throw SchemaError("action: order must be positive");
    in.action = SimplicialGroupAction::cyclic(order, gen);
    if (!in.action->is_valid_on(in.complex)) throw SchemaError("action: generator is not an automorphism of the given order");
  }
  return in;
}

ComplexInput read_complex(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw SchemaError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  return complex_from_json(j);
}

Json complex_to_json(const SimplicialComplex& k, const SimplicialGroupAction* action, int generator) {
  Json j;
  j["vertices"] = k.num_vertices();
  std::vector<Simplex> f = k.facets();
  std::sort(f.begin(), f.end());
  j["simplices"] = f;
  if (action) {
    Json a;
    a["order"] = action->group.order;
    a["generator"] = action->perm[generator];
    j["action"] = a;
  }
  return j;
}

Json to_json(const AbelianGroupPresentation& g) {
  Json j;
  j["group"] = g.to_string();
  j["free_rank"] = g.free_rank;
  Json t = Json::array();
  for (const auto& x : g.torsion) t.push_back(x.get_str());
  j["torsion"] = t;
  return j;
}

Json to_json(const SheetForm& f) {
  Json out = Json::array();
  std::vector<int> t;
  for (int i = 0; i < f.num_simplices(); ++i)
    for (size_t c = 0; c < f.tuples(i); ++c) {
      const Rat& v = f.at(i, c);
      if (v == 0) continue;
      f.decode(i, c, t);
      out.push_back(Json{{"simplex", i}, {"tuple", t}, {"value", rat_to_string(v)}});
    }
  return out;
}

Json to_json(const TriGradedCochain& c) {
  Json out = Json::object();
  for (const auto& [d, comp] : c.parts) {
    const std::string key = std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]);
    Json pts = Json::array();
    if (d[2] == 0)
      for (const auto& f : comp.circle) pts.push_back(Json{{"val", to_json(f.val)}, {"inc", to_json(f.inc)}});
    else
      for (const auto& f : comp.form) pts.push_back(to_json(f));
    out[key] = pts;
  }
  return out;
}

Json to_json(const std::vector<Residual>& r) {
  Json out = Json::array();
  for (const auto& x : r)
    out.push_back(Json{{"ijk", x.ijk},
                       {"point", x.point},
                       {"simplex_dim", x.simplex_dim},
                       {"simplex", x.simplex},
                       {"tuple", x.tuple},
                       {"value", rat_to_string(x.value)},
                       {"circle", x.circle}});
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v == 0 ? 0.0 : v);
  return buf;
}

Json number(double v, int digits) {
  if (!std::isfinite(v)) return Json(fixed(v, digits));
  return Json(std::stod(fixed(v, digits)));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << text;
    if (!f.flush()) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace eqg
