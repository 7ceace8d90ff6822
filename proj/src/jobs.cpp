#include "eqg/jobs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "eqg/deligne_discrete.hpp"
#include "eqg/ez.hpp"
#include "eqg/hopf.hpp"
#include "eqg/lens.hpp"
#include "eqg/loop.hpp"
#include "eqg/reduction.hpp"
#include "eqg/reduction_discrete.hpp"
#include "eqg/su2.hpp"
#include "eqg/suites.hpp"

namespace eqg {

namespace {

struct ModelId {
  std::string kind;  // hopf, lens, su2, loop, sphere
  int a = 0;
  int b = 0;
};

int parse_int(const std::string& s, const std::string& what) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) throw UsageError("bad " + what + " \"" + s + "\"");
  return v;
}

double parse_double(const std::string& s, const std::string& what) {
  size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || !std::isfinite(v)) throw UsageError("bad " + what + " \"" + s + "\"");
  return v;
}

ModelId parse_model(const std::string& id) {
  ModelId m;
  const auto colon = id.find(':');
  m.kind = id.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : id.substr(colon + 1);
  if (m.kind == "hopf") {
    m.a = rest.empty() ? 1 : parse_int(rest, "sheet count");
    if (m.a < 1 || m.a > 2) throw UsageError("hopf model has 1 or 2 sheets");
  } else if (m.kind == "lens") {
    m.a = parse_int(rest, "lens order");
    if (m.a < 3) throw UsageError("lens:n needs n >= 3");
  } else if (m.kind == "su2") {
    m.a = parse_int(rest, "level");
  } else if (m.kind == "loop") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw UsageError("loop model id is loop:M,k");
    m.a = parse_int(rest.substr(0, comma), "mode count");
    m.b = parse_int(rest.substr(comma + 1), "level");
    if (m.a < 1) throw UsageError("loop:M,k needs M >= 1");
  } else if (m.kind == "sphere") {
    if (!rest.empty()) throw UsageError("sphere takes no parameter");
  } else {
    throw UsageError("unknown model \"" + id + "\"");
  }
  return m;
}

double parse_lambda(const std::string& s) {
  const std::string v = s.rfind("r=", 0) == 0 ? s.substr(2) : s;
  return parse_double(v, "lambda parameter");
}

double parse_xi(const std::string& xi) {
  if (xi.empty() || xi == "standard") return 0.0;
  if (xi == "perturbed") return 0.2;
  if (xi.rfind("perturbed:", 0) == 0) return parse_double(xi.substr(10), "xi perturbation");
  throw UsageError("unknown connection \"" + xi + "\" (standard, perturbed, perturbed:eps)");
}

std::string vec_text(const Vec& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fixed(v[i], 9);
  return s + ")";
}

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(number(v[i]));
  return a;
}

struct Builder {
  Json report;
  Json verdicts = Json::array();
  std::ostringstream text;

  explicit Builder(const Job& job) {
    report["tool"] = "eqg";
    report["version"] = kToolVersion;
    report["command"] = job.command;
    Json p;
    p["model"] = job.model.empty() ? Json(job.input) : Json(job.model);
    p["lambda"] = job.lambda;
    p["xi"] = job.xi;
    p["seed"] = job.seed;
    report["provenance"] = p;
  }
  void tolerances(Json t) { report["provenance"]["tolerances"] = std::move(t); }
  void verdict(const std::string& name, const std::string& value, const std::string& op, double tol) {
    verdicts.push_back(Json{{"name", name}, {"verdict", value}, {"operation", op}, {"tolerance", number(tol, 6)}});
    text << name << ": " << value << "  [" << op << ", tol " << fixed(tol, 3) << "]\n";
  }
  JobResult finish(int code) {
    report["verdicts"] = verdicts;
    report["exit_code"] = code;
    return {code, report, text.str()};
  }
};

// ---- cohomology ----

JobResult run_cohomology(const Job& job) {
  if (job.degree < 0) throw UsageError("cohomology needs --degree >= 0");
  ComplexInput in;
  if (!job.input.empty()) {
    in = read_complex(job.input);
  } else {
    const ModelId m = parse_model(job.model);
    if (m.kind == "lens") {
      LensSpace L = lens_join(m.a);
      in.complex = L.cover;
      in.action = L.action;
    } else if (m.kind == "sphere") {
      in.complex = icosahedron();
    } else {
      throw UsageError("cohomology takes --input or a lens:n / sphere model");
    }
  }
  const std::string space = job.space.empty() ? (in.action ? "quotient" : "cover") : job.space;
  if (space != "cover" && space != "quotient") throw UsageError("--space is cover or quotient");
  if (space == "quotient" && !in.action) throw UsageError("quotient requested but the complex carries no action");
  SimplicialComplex k = space == "quotient" ? quotient_complex(in.complex, *in.action).quotient : in.complex;

  Builder b(job);
  b.tolerances(Json{{"exact", true}});
  std::string group;
  Json values;
  values["space"] = space;
  values["vertices"] = k.num_vertices();
  values["dimension"] = k.dimension();
  values["degree"] = job.degree;
  values["coeff"] = job.coeff;
  if (job.coeff == "Z") {
    AbelianGroupPresentation g = job.degree <= k.dimension() ? integer_cohomology(k, job.degree) : AbelianGroupPresentation{};
    group = g.to_string();
    values["result"] = to_json(g);
  } else if (job.coeff == "Q") {
    const int r = job.degree <= k.dimension() ? integer_cohomology(k, job.degree).free_rank : 0;
    group = r == 0 ? "0" : (r == 1 ? "Q" : "Q^" + std::to_string(r));
    values["result"] = Json{{"group", group}, {"rank", r}};
  } else if (job.coeff == "D") {
    if (job.level < 0) throw UsageError("Deligne cohomology needs --level N >= 0");
    DeligneGroup g = deligne_cohomology_discrete(k, job.level, job.degree);
    group = g.to_string();
    values["result"] = Json{{"group", group},
                            {"level", job.level},
                            {"circle_rank", g.circle_rank},
                            {"vector_rank", g.vector_rank},
                            {"integral", to_json(g.integral)},
                            {"betti_cross_check", g.betti_consistent}};
  } else {
    throw UsageError("--coeff is Z, Q or D");
  }
  b.report["values"] = values;
  b.text << "H^" << job.degree << "(" << (job.input.empty() ? job.model : job.input) << (space == "quotient" ? "/G" : "")
         << "; " << job.coeff << (job.coeff == "D" ? "(" + std::to_string(job.level) + ")" : "") << ") = " << group
         << "\n";
  return b.finish(kExitOk);
}

// ---- obstruction ----

JobResult run_obstruction(const Job& job) {
  const ModelId m = parse_model(job.model);
  std::mt19937_64 rng(job.seed);
  AnalyticGerbe eg;
  SampleSet s;
  std::optional<GroupQuadrature> q;
  if (m.kind == "hopf") {
    eg = hopf_gerbe(m.a);
    s = hopf_samples(32, 4, rng);
    q = GroupQuadrature::circle(64);
  } else if (m.kind == "loop") {
    eg = toy_loop_gerbe(m.a, m.b);
    s = SampleSet::random(eg.action, 20, 6, rng);
  } else {
    throw UsageError("obstruction is available for hopf and loop:M,k");
  }
  ObstructionClass ob = obstruction(eg, s, q ? &*q : nullptr);
  Builder b(job);
  b.tolerances(Json{{"b_fit_accept", number(kBFitAccept, 6)}, {"b_fit_reject", number(kBFitReject, 6)}});
  Json values;
  values["gerbe"] = eg.name;
  values["vanishes"] = ob.vanishes;
  values["certificate"] = ob.certificate;
  values["gauge_dimension"] = ob.gauge_dim;
  values["fit"] = Json{{"verdict", to_string(ob.fit.verdict)},
                       {"relative_residual", number(ob.fit.residual, 6)},
                       {"scale", number(ob.fit.scale, 6)}};
  Json residuals;
  residuals["z_membership"] = number(z_residual(eg.action, ob.ez, s).max(), 3);
  residuals["fit"] = number(ob.fit.residual, 6);
  if (ob.vanishes) {
    Json w;
    w["unique"] = ob.witness_unique;
    w["residual"] = number(ob.witness_residual, 3);
    if (ob.witness) w["value_at_first_sample"] = vec_json(ob.witness(s.points.front()));
    values["witness"] = w;
  }
  values["residuals"] = residuals;
  b.report["values"] = values;
  const int code = ob.fit.verdict == BFit::Verdict::Indeterminate ? kExitIndeterminate : kExitOk;
  b.verdict("obstruction", ob.verdict, "obstruction + b_fit", ob.vanishes ? kBFitAccept : kBFitReject);
  b.text << "fit residual " << fixed(ob.fit.residual, 6) << ", gauge dimension " << ob.gauge_dim << "\n";
  if (!ob.certificate.empty()) b.text << ob.certificate << "\n";
  return b.finish(code);
}

// ---- reduce ----

JobResult run_reduce_hopf(const Job& job, const ModelId& m) {
  if (m.a != 1) throw UsageError("reduce uses the one-sheet hopf model");
  if (job.lambda.size() > 1) throw UsageError("reduce takes one --lambda");
  const double r = job.lambda.empty() ? 0.0 : parse_lambda(job.lambda.front());
  const double eps = parse_xi(job.xi);
  Builder b(job);
  b.tolerances(Json{{"integer", number(kIntegerTol, 6)}, {"non_integer", number(kNonIntegerTol, 6)}});
  HopfReduction h;
  try {
    h = hopf_reduction(r, 5, 64, job.seed, eps);
  } catch (const Indeterminate& e) {
    b.report["values"] = Json{{"r", number(r)}, {"message", e.what()}};
    b.verdict("reduced class", "indeterminate", "hopf_reduction + integrality", kIntegerTol);
    return b.finish(kExitIndeterminate);
  }
  std::mt19937_64 rng(job.seed + 1);
  SampleSet bs = sphere_samples(16, rng);
  const BaseForm2 F = hopf_curvature_bar(eps);
  double num = 0, den = 0;
  Json curv = Json::array();
  for (size_t k = 0; k < bs.points.size(); ++k) {
    const Vec& p = bs.points[k];
    const Vec& u = bs.vectors[k];
    const Vec& v = bs.second_vector(k);
    const double f = h.fbar(p, u, v), g = F(p, u, v);
    num += f * g;
    den += g * g;
    if (k < 8) curv.push_back(Json{{"p", vec_json(p)}, {"u", vec_json(u)}, {"v", vec_json(v)}, {"fbar", number(f)}});
  }
  const double coef = num / den;
  Json values;
  values["r"] = number(r);
  values["xi"] = Json{{"id", job.xi}, {"perturbation", number(eps)}};
  values["fbar_over_F_Xi"] = number(coef, 9);
  values["sign_convention"] = "f-bar = -r F(Xi) with Xi = sqrt(-1) xi, xi(X*) = 1";
  values["period"] = number(h.period, 12);
  values["distance_to_integer"] = number(h.distance, 6);
  values["residuals"] = Json{{"fbar_vs_rF", number(h.pointwise_residual, 3)},
                             {"descent_nabla", number(h.descent.nabla.max, 3)},
                             {"descent_curving", number(h.descent.curving.max, 3)}};
  values["reduced_gerbe"] = Json{{"base", "S2"}, {"sheets", 1}, {"nabla", "0"}, {"curving_samples", curv}};
  b.report["values"] = values;
  b.verdict("reduced class", h.trivial ? "trivial" : "nontrivial", "hopf_reduction + integrality", kIntegerTol);
  b.text << "f-bar = " << fixed(coef, 9) << " F(Xi), period " << fixed(h.period, 12) << "\n";
  return b.finish(kExitOk);
}

JobResult run_reduce_lens(const Job& job, const ModelId& m) {
  LensSpace L = lens_join(m.a);
  Subdivision sd = barycentric_subdivision(L.cover);
  auto act = L.action.on_subdivision(L.cover, sd);
  BlockModel bm = block_model(sd.complex, act, 1);
  auto n = orbit_sum(sd.complex, act, unit_top_cocycle(sd.complex));
  GerbeData g = gerbe_from_cocycle(bm.em, *bm.nerve, bm.label_vertex, n);
  ReducedDiscrete red = reduce_topological(g);
  DescentReport rep = descent_report(g, red);
  const bool valid = validate(red.gerbe, false).ok;
  Builder b(job);
  b.tolerances(Json{{"exact", true}});
  Json values;
  values["period_up"] = rat_to_string(rep.period_up);
  values["period_down"] = rat_to_string(rep.period_down);
  values["order"] = rep.order;
  values["checks"] = Json{{"reduced_gerbe_valid", valid},
                          {"pullback_matches", rep.pullback_matches},
                          {"same_dd_class", rep.same_dd_class},
                          {"deligne_witness", rep.deligne_witness},
                          {"degree_relation", rep.degree_relation()}};
  values["reduced_gerbe"] = Json{{"base_vertices", red.q.base->num_vertices()},
                                 {"labels", red.gerbe.model().num_labels()},
                                 {"s", Json{{"val", to_json(red.gerbe.s.val)}, {"inc", to_json(red.gerbe.s.inc)}}},
                                 {"A", to_json(red.gerbe.A)},
                                 {"B", to_json(red.gerbe.B)}};
  b.report["values"] = values;
  const bool ok = valid && rep.pullback_matches && rep.same_dd_class && rep.deligne_witness && rep.degree_relation();
  b.verdict("descent", ok ? "pass" : "fail", "reduce_topological + descent_report", 0);
  b.text << "period upstairs " << rat_to_string(rep.period_up) << ", on the quotient " << rat_to_string(rep.period_down)
         << "\n";
  return b.finish(ok ? kExitOk : kExitVerdictFail);
}

JobResult run_reduce(const Job& job) {
  const ModelId m = parse_model(job.model);
  if (m.kind == "hopf") return run_reduce_hopf(job, m);
  if (m.kind == "lens") return run_reduce_lens(job, m);
  throw UsageError("reduce is available for hopf and lens:n");
}

// ---- compare ----

JobResult run_compare(const Job& job) {
  const ModelId m = parse_model(job.model);
  if (m.kind != "hopf") throw UsageError("compare is available for hopf");
  if (job.lambda.size() != 2) throw UsageError("compare needs two --lambda values");
  const double r0 = parse_lambda(job.lambda[0]), r1 = parse_lambda(job.lambda[1]);
  const double eps = parse_xi(job.xi);
  std::mt19937_64 rng(job.seed);
  SampleSet s = hopf_samples(24, 4, rng);
  AnalyticGerbe eg = hopf_gerbe(m.a);
  BasePeriod per = [](const BaseForm2& w) { return sphere_period(w, 5); };
  Builder b(job);
  b.tolerances(Json{{"integer", number(kIntegerTol, 6)}, {"non_integer", number(kNonIntegerTol, 6)}});
  LambdaComparison c;
  try {
    c = compare_lambda_choices(eg, hopf_lambda(eg, r0, s), hopf_lambda(eg, r1, s), hopf_connection(eps), hopf_section(),
                               per, s);
  } catch (const Indeterminate& e) {
    b.report["values"] = Json{{"message", e.what()}};
    b.verdict("stable isomorphism", "indeterminate", "compare_lambda_choices", kIntegerTol);
    return b.finish(kExitIndeterminate);
  }
  Json values;
  values["mu"] = vec_json(c.mu);
  values["mu_variation"] = number(c.mu_variation, 3);
  values["period"] = number(c.period, 12);
  values["distance_to_integer"] = number(c.distance, 6);
  b.report["values"] = values;
  b.verdict("stable isomorphism", c.stably_isomorphic ? "stably isomorphic" : "not stably isomorphic",
            "compare_lambda_choices", kIntegerTol);
  b.text << "mu = " << vec_text(c.mu) << ", period " << fixed(c.period, 12) << "\n";
  return b.finish(kExitOk);
}

// ---- verify ----

JobResult run_verify(const Job& job) {
  if (job.suite.empty()) throw UsageError("verify needs --suite");
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), job.suite) == names.end()) throw UsageError("unknown suite \"" + job.suite + "\"");
  SuiteReport rep = run_suite(job.suite, job.seed);
  Builder b(job);
  b.report["values"] = rep.to_json();
  for (const auto& c : rep.checks) {
    b.verdicts.push_back(Json{{"name", c.id}, {"verdict", c.pass() ? "pass" : "fail"}, {"operation", c.operation},
                              {"tolerance", number(c.tolerance, 6)}});
  }
  b.text << rep.text();
  return b.finish(rep.pass() ? kExitOk : kExitVerdictFail);
}

// ---- model-check ----

JobResult run_model_check(const Job& job) {
  const ModelId m = parse_model(job.model);
  if (job.check.empty()) throw UsageError("model-check needs --check");
  Builder b(job);
  std::mt19937_64 rng(job.seed);
  double value = 0, expected = 0, residual = 0, tol = 0;
  std::string op;
  bool exact = false, exact_ok = false;
  const auto tol_or = [&](double d) { return job.tolerance ? *job.tolerance : d; };
  if (m.kind == "su2" && job.check == "chi-period") {
    op = "su2_chi_period";
    tol = tol_or(1e-3);
    value = su2_chi_period(m.a);
    expected = m.a;
    residual = std::abs(value - expected);
  } else if (m.kind == "su2" && job.check == "e-residuals") {
    op = "su2_form_residuals";
    tol = tol_or(1e-7);
    SU2Residuals r = su2_form_residuals(m.a, 100, rng);
    value = residual = std::max(r.de_vs_chi, r.equivariance);
  } else if (m.kind == "hopf" && job.check == "euler-period") {
    op = "euler_period";
    tol = tol_or(1e-5);
    value = euler_period(6);
    expected = 1;
    residual = std::abs(value - expected);
  } else if (m.kind == "hopf" && job.check == "connection") {
    op = "connection_residual";
    tol = tol_or(1e-9);
    SampleSet s = hopf_samples(64, 6, rng);
    ConnectionResidual c = connection_residual(hopf_action(), hopf_connection(parse_xi(job.xi)), s);
    value = residual = std::max(c.vertical, c.equivariance);
  } else if (m.kind == "hopf" && job.check == "descent") {
    op = "descent_residuals";
    tol = tol_or(1e-9);
    SampleSet s = hopf_samples(500, 4, rng);
    AnalyticGerbe eg = hopf_gerbe(m.a);
    const double r = job.lambda.empty() ? 1.5 : parse_lambda(job.lambda.front());
    value = residual = descent_residuals(eg, hopf_lambda(eg, r, s), hopf_connection(parse_xi(job.xi)), s).max();
  } else if (m.kind == "loop" && job.check == "cocycle") {
    op = "loop_cocycle_c";
    tol = tol_or(1e-12);
    for (int t = 0; t < 20; ++t) {
      auto a = LoopAlgebraElement::random(m.a, m.b, rng), c = LoopAlgebraElement::random(m.a, m.b, rng),
           d = LoopAlgebraElement::random(m.a, m.b, rng);
      residual = std::max({residual, std::abs(loop_cocycle_c(a, c) + loop_cocycle_c(c, a)),
                           std::abs(loop_cocycle_c(bracket(a, c), d) + loop_cocycle_c(bracket(c, d), a) +
                                    loop_cocycle_c(bracket(d, a), c))});
    }
    value = residual;
  } else if (m.kind == "loop" && job.check == "ad-relation") {
    op = "ad_relation_residual (grid 2048)";
    tol = tol_or(1e-8);
    for (int t = 0; t < 20; ++t)
      residual = std::max(residual, ad_relation_residual(random_loop(rng), LoopAlgebraElement::random(m.a, m.b, rng),
                                                         LoopAlgebraElement::random(m.a, m.b, rng)));
    value = residual;
  } else if (m.kind == "lens" && job.check == "cohomology") {
    op = "integer_cohomology";
    exact = true;
    LensSpace L = lens_join(m.a);
    QuotientResult q = quotient_complex(L.cover, L.action);
    const std::string h2 = integer_cohomology(q.quotient, 2).to_string();
    const std::string h3 = integer_cohomology(q.quotient, 3).to_string();
    exact_ok = h2 == "Z/" + std::to_string(m.a) && h3 == "Z";
    b.report["values"] = Json{{"H2", h2}, {"H3", h3}};
    b.text << "H2 = " << h2 << ", H3 = " << h3 << "\n";
  } else {
    throw UsageError("unknown check \"" + job.check + "\" for model " + job.model);
  }
  b.tolerances(Json{{job.check, exact ? Json("exact") : number(tol, 6)}});
  bool ok = exact ? exact_ok : residual < tol;
  if (!exact) {
    b.report["values"] = Json{{"value", number(value, 12)}, {"expected", number(expected, 12)},
                              {"residual", number(residual, 3)}};
    b.text << job.check << " = " << fixed(value, 12) << " (residual " << fixed(residual, 3) << ")\n";
  }
  b.verdict(job.check, ok ? "pass" : "fail", op, tol);
  return b.finish(ok ? kExitOk : kExitVerdictFail);
}

}  // namespace

Job job_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("job: expected an object");
  for (const auto& [k, v] : j.items())
    if (k != "command" && k != "model" && k != "params" && k != "output") throw SchemaError("job: unknown key \"" + k + "\"");
  if (!j.contains("command") || !j.at("command").is_string()) throw SchemaError("job: \"command\" must be a string");
  Job job;
  job.command = j.at("command").get<std::string>();
  if (j.contains("model")) {
    if (!j.at("model").is_string()) throw SchemaError("job: \"model\" must be a string");
    job.model = j.at("model").get<std::string>();
  }
  if (j.contains("output")) {
    if (!j.at("output").is_string()) throw SchemaError("job: \"output\" must be a string");
    job.output = j.at("output").get<std::string>();
  }
  if (j.contains("params")) {
    const Json& p = j.at("params");
    if (!p.is_object()) throw SchemaError("job: \"params\" must be an object");
    for (const auto& [k, v] : p.items()) {
      auto str = [&]() {
        if (!v.is_string()) throw SchemaError("params: \"" + k + "\" must be a string");
        return v.get<std::string>();
      };
      auto integer = [&]() {
        if (!v.is_number_integer()) throw SchemaError("params: \"" + k + "\" must be an integer");
        return v.get<long>();
      };
      if (k == "input") {
        job.input = str();
      } else if (k == "lambda") {
        if (v.is_array()) {
          for (const auto& x : v) {
            if (!x.is_string() && !x.is_number()) throw SchemaError("params: lambda entries are strings or numbers");
            job.lambda.push_back(x.is_string() ? x.get<std::string>() : fixed(x.get<double>(), 17));
          }
        } else if (v.is_string()) {
          job.lambda.push_back(v.get<std::string>());
        } else if (v.is_number()) {
          job.lambda.push_back(fixed(v.get<double>(), 17));
        } else {
          throw SchemaError("params: lambda must be a string, number or array");
        }
      } else if (k == "xi") {
        job.xi = str();
      } else if (k == "tolerance") {
        if (!v.is_number()) throw SchemaError("params: \"tolerance\" must be a number");
        job.tolerance = v.get<double>();
      } else if (k == "seed") {
        const long s = integer();
        if (s < 0) throw SchemaError("params: \"seed\" must be nonnegative");
        job.seed = static_cast<unsigned>(s);
      } else if (k == "suite") {
        job.suite = str();
      } else if (k == "degree") {
        job.degree = static_cast<int>(integer());
      } else if (k == "coeff") {
        job.coeff = str();
      } else if (k == "level") {
        job.level = static_cast<int>(integer());
      } else if (k == "space") {
        job.space = str();
      } else if (k == "check") {
        job.check = str();
      } else {
        throw SchemaError("params: unknown key \"" + k + "\"");
      }
    }
  }
  return job;
}

JobResult run_job(const Job& job) {
  JobResult r;
  if (job.command == "cohomology")
    r = run_cohomology(job);
  else if (job.command == "obstruction")
    r = run_obstruction(job);
  else if (job.command == "reduce")
    r = run_reduce(job);
  else if (job.command == "compare")
    r = run_compare(job);
  else if (job.command == "verify")
    r = run_verify(job);
  else if (job.command == "model-check")
    r = run_model_check(job);
  else
    throw UsageError("unknown command \"" + job.command + "\"");
  if (!job.output.empty()) write_atomic(job.output, dump(r.report));
  return r;
}

}  // namespace eqg
