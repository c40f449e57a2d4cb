#include "eala/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>

#include "eala/catalog.hpp"
#include "eala/coords.hpp"
#include "scenario_internal.hpp"

namespace eala::scenario {

using json_io::Node;
using json_io::write;
using namespace detail;

std::string outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Undetermined: return "undetermined";
  }
  return "undetermined";
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> checks{
      {"affinization_report", false, "root-level verdict, type and nullity of R~; compared with expect"},
      {"corollary_3_65", false, "(iv) with the criterion decides tameness; the converse when m is prime"},
      {"theorem_4_8", false, "affine diagram automorphisms: transitive iff R~^x is empty, else nullity 2"},
      {"corollary_3_67", false, "sigma = id keeps the type and raises the nullity by one"},
      {"nondegeneracy_transfer", false, "V~^0 = (V^0)^sigma (+) Q delta~"},
      {"projection_lemma", false, "projection lemma and visible closure on the fixed subspace"},
      {"ea5b", false, "tame with EA1-EA5a implies EA5b"},
      {"structure", true, "antisymmetry, Jacobi, grading, form symmetry, invariance, non-degeneracy"},
      {"automorphism", true, "sigma and its extension to Aff(g) are automorphisms of period m"},
      {"weight_orthogonality", true, "(g_alpha, g_beta) = 0 unless alpha + beta = 0"},
      {"root_multiplicity", true, "nonisotropic root spaces of Aff(g, sigma) are one-dimensional"},
      {"prop_3_25", true, "the four forms of the Cartan condition agree"},
      {"core_identity", true, "core of Aff(g, sigma) = sum (g_c)_i (x) t^i + F c, with c from commutators"},
      {"core_descriptions", true, "core = subalgebra generated by / sum of projected nonisotropic root spaces"},
      {"tameness", true, "g tame; Aff(g, sigma) tame exactly when the verdict is tame_eala"},
      {"ea_axioms", true, "EA1-EA5b on g; on Aff(g, sigma) exactly when the verdict is tame_eala"},
      {"root_agreement", true, "weights of Aff(g, sigma) = R~ from residues, in the window"},
      {"classification", true, "type and nullity read from Aff(g, sigma) = root-level values"},
  };
  return checks;
}

namespace detail {
CheckOutcome outcome(const std::string& name, Outcome o, std::string witness, OJson details) {
  return {name, o, std::move(witness), std::move(details)};
}
}  // namespace detail

bool Result::any_fail() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.outcome == Outcome::Fail; });
}

// ---- parsing -------------------------------------------------------------------------

namespace {

const CheckInfo* find_check(const std::string& name) {
  for (const auto& c : check_registry())
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace

Scenario parse_scenario(const Json& j, const std::string& pointer) {
  Node root(j, pointer);
  root.object();
  static const std::set<std::string> known{"id", "algebra", "automorphism", "window", "checks", "expect"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) root.at(k).error("unknown field");
  Scenario s;
  s.id = root.at("id").string();
  if (s.id.empty()) root.at("id").error("id must be non-empty");
  Node alg = root.at("algebra");
  s.source = alg.at("kind").string();
  if (s.source == "sl_loop") s.source = "sl";
  static const std::set<std::string> sources{"sl", "toroidal", "quantum_sl", "affine_gcm", "root_datum"};
  if (!sources.count(s.source))
    alg.at("kind").error("unknown source (sl, sl_loop, toroidal, quantum_sl, affine_gcm, root_datum)");
  s.params = alg.has("params") ? alg.at("params").object() : Json::object();
  s.automorphism = root.has("automorphism") ? root.at("automorphism").object() : Json{{"kind", "identity"}};
  if (root.has("window")) {
    s.window = root.at("window").integer();
    if (s.window < 1 || s.window > 8) root.at("window").error("window must lie in 1..8");
  }
  if (root.has("expect")) s.expect = root.at("expect").object();
  s.algebra_backed = s.source == "sl" || (s.source == "toroidal" && s.params.contains("n")) ||
                     (s.source == "quantum_sl" && s.params.value("algebra", false));
  Node cs = root.at("checks");
  if (cs.size() == 0) cs.error("at least one check is required");
  for (size_t i = 0; i < cs.size(); ++i) {
    std::string name = cs.at(i).string();
    const CheckInfo* info = find_check(name);
    if (!info) cs.at(i).error("unknown check \"" + name + "\"");
    if (info->needs_algebra && !s.algebra_backed)
      cs.at(i).error("check \"" + name + "\" needs an algebra-backed source");
    if (name == "theorem_4_8" && s.source != "affine_gcm") cs.at(i).error("theorem_4_8 applies to affine_gcm scenarios");
    if (std::find(s.checks.begin(), s.checks.end(), name) != s.checks.end()) cs.at(i).error("duplicate check");
    s.checks.push_back(name);
  }
  return s;
}

std::vector<Scenario> parse_scenarios(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::Schema, std::string("malformed JSON: ") + e.what());
  }
  std::vector<Scenario> out;
  if (j.is_array()) {
    for (size_t i = 0; i < j.size(); ++i) out.push_back(parse_scenario(j[i], "/" + std::to_string(i)));
  } else {
    out.push_back(parse_scenario(j));
  }
  std::set<std::string> ids;
  for (const auto& s : out)
    if (!ids.insert(s.id).second) fail(ErrorCode::Schema, "duplicate scenario id \"" + s.id + "\"");
  return out;
}

// ---- root-level construction --------------------------------------------------------------

namespace {

const gcm::NamedGCM* curated_by_name(const std::string& name) {
  static const auto all = gcm::curated_affine(9);
  for (const auto& g : all)
    if (g.name == name) return &g;
  return nullptr;
}

autoroot::RootAutomorphism matrix_automorphism(const Node& aut, const ears::RootDatum& d, bool* identity) {
  std::string kind = aut.has("kind") ? aut.at("kind").string() : (aut.has("matrix") ? "matrix" : "");
  if (kind == "identity") {
    *identity = true;
    long m = aut.has("period") ? aut.at("period").integer() : 1;
    if (m < 1) aut.at("period").error("period must be positive");
    return autoroot::RootAutomorphism::create(catalog::identity(d.dim()), m, d);
  }
  if (kind != "matrix") aut.error("expected {kind: identity} or {matrix, period}");
  RatMatrix m = aut.at("matrix").matrix();
  if (m.rows() != d.dim() || !m.square()) aut.at("matrix").error("matrix must be dim x dim");
  long period = aut.at("period").integer();
  try {
    auto s = autoroot::RootAutomorphism::create(m, period, d);
    *identity = m.is_identity();
    return s;
  } catch (const Error& e) {
    aut.error(e.what());
  }
}

RootContext root_context(const Scenario& s) {
  Node params(s.params, "/algebra/params");
  Node aut(s.automorphism, "/automorphism");
  RootContext ctx;
  if (s.source == "affine_gcm") {
    gcm::GCM a = params.has("name") ? [&] {
      const auto* g = curated_by_name(params.at("name").string());
      if (!g) params.at("name").error("not a curated affine matrix name");
      return g->matrix;
    }() : [&] {
      try {
        return gcm::GCM::create(params.at("matrix").integer_matrix());
      } catch (const Error& e) {
        params.at("matrix").error(e.what());
      }
    }();
    try {
      gcm::validate_affine(a);
    } catch (const Error& e) {
      params.error(e.what());
    }
    gcm::DiagramAutomorphism da;
    if (aut.has("diagram_perm")) {
      std::vector<long> p = aut.at("diagram_perm").integers();
      std::vector<int> perm(p.begin(), p.end());
      try {
        da = gcm::make_automorphism(a, perm);
      } catch (const Error& e) {
        aut.at("diagram_perm").error(e.what());
      }
    } else if (aut.has("kind") && aut.at("kind").string() == "identity") {
      std::vector<int> perm(a.size());
      for (size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
      da = gcm::make_automorphism(a, perm);
    } else {
      aut.error("expected {diagram_perm} or {kind: identity}");
    }
    ctx.datum = gcm::affine_root_datum(a);
    ctx.sigma = autoroot::RootAutomorphism::create(gcm::lattice_action(da), da.period, *ctx.datum);
    ctx.identity = da.period == 1;
    ctx.matrix = a;
    ctx.diagram = da;
  } else if (s.source == "toroidal") {
    rootsys::TypeLabel t;
    try {
      t = rootsys::TypeLabel::parse(params.at("type").string());
    } catch (const Error& e) {
      params.at("type").error(e.what());
    }
    long nu = params.at("nu").integer();
    if (nu < 0 || nu > 4) params.at("nu").error("nu must lie in 0..4");
    ctx.datum = catalog::toroidal_datum(t, int(nu));
    ctx.sigma = matrix_automorphism(aut, *ctx.datum, &ctx.identity);
  } else if (s.source == "quantum_sl") {
    long l = params.at("l").integer();
    long nu = params.at("nu").integer();
    if (l < 1 || l > 8) params.at("l").error("l must lie in 1..8");
    if (nu < 1 || nu > 3) params.at("nu").error("nu must lie in 1..3");
    if (params.has("q")) {
      auto q = params.at("q").integer_matrix();
      if (q.size() != size_t(nu)) params.at("q").error("expected a nu x nu matrix");
      try {
        coords::QuantumTorus::from_signs(q);
      } catch (const Error& e) {
        params.at("q").error(e.what());
      }
    }
    if (params.has("q12")) {
      long q = params.at("q12").integer();
      if (nu != 2 || (q != 1 && q != -1)) params.at("q12").error("q12 must be 1 or -1 with nu = 2");
    }
    ctx.datum = catalog::quantum_datum(int(l), int(nu));
    std::string kind = aut.has("kind") ? aut.at("kind").string() : "minus_star";
    if (kind == "minus_star") {
      ctx.sigma = autoroot::RootAutomorphism::create(catalog::quantum_flip(int(l), int(nu)), 2, *ctx.datum);
    } else if (kind == "identity") {
      ctx.sigma = autoroot::RootAutomorphism::create(catalog::identity(ctx.datum->dim()), 1, *ctx.datum);
      ctx.identity = true;
    } else {
      aut.at("kind").error("quantum_sl automorphisms are minus_star or identity");
    }
  } else if (s.source == "root_datum") {
    if (params.has("type")) {
      try {
        ctx.datum = catalog::finite_datum(rootsys::TypeLabel::parse(params.at("type").string()));
      } catch (const Error& e) {
        params.at("type").error(e.what());
      }
    } else {
      ctx.datum = json_io::read_root_datum(params.at("datum"));
    }
    ctx.sigma = matrix_automorphism(aut, *ctx.datum, &ctx.identity);
  }
  if (ctx.identity && !ctx.residues) {
    try {
      ctx.residues = autoroot::ResidueAssignment::trivial(*ctx.sigma, *ctx.datum);
    } catch (const Error& e) {
      ctx.residues_note = e.what();
    }
  }
  if (!ctx.residues && ctx.residues_note.empty())
    ctx.residues_note = "eigenvalue residues of the root spaces need the algebra for sigma != id";
  return ctx;
}

// ---- root-level checks -------------------------------------------------------------------

OJson type_json(const std::optional<rootsys::TypeLabel>& t) { return t ? OJson(t->to_string()) : OJson(nullptr); }

CheckOutcome expect_check(const std::string& name, const Scenario& s, const autoroot::AffinizationReport& rep) {
  OJson d;
  std::string witness;
  bool ok = true;
  Node e(s.expect, "/expect");
  if (s.expect.is_object()) {
    if (e.has("verdict")) {
      std::string v = e.at("verdict").string();
      if (v != rep.verdict) {
        ok = false;
        witness = "verdict " + rep.verdict + ", expected " + v;
      }
    }
    if (e.has("type")) {
      rootsys::TypeLabel t;
      try {
        t = rootsys::TypeLabel::parse(e.at("type").string());
      } catch (const Error& err) {
        e.at("type").error(err.what());
      }
      if (!rep.type || !(*rep.type == t)) {
        ok = false;
        if (witness.empty()) witness = "type " + (rep.type ? rep.type->to_string() : "none") + ", expected " + t.to_string();
      }
    }
    if (e.has("nullity")) {
      long n = e.at("nullity").integer();
      if (!rep.nullity || *rep.nullity != n) {
        ok = false;
        if (witness.empty())
          witness = "nullity " + (rep.nullity ? std::to_string(*rep.nullity) : std::string("none")) + ", expected " +
                    std::to_string(n);
      }
    }
    d["expected"] = OJson::parse(s.expect.dump());
  }
  return pass_if(name, ok, witness, d);
}

// The corollary decides the verdict from roots alone; with an algebra the
// decision is compared with EA1-EA5b and tameness of Aff(g, sigma) itself.
CheckOutcome corollary_3_65(const std::string& name, const RootContext& ctx, AlgebraBackend* alg) {
  auto c = autoroot::corollary_3_65_verdict(*ctx.sigma, *ctx.datum);
  OJson d;
  d["condition_iv"] = autoroot::condition_iv(*ctx.sigma, *ctx.datum).holds;
  d["criterion_3_64"] = autoroot::criterion_3_64(*ctx.sigma, *ctx.datum).holds;
  d["period_prime"] = autoroot::is_prime(ctx.sigma->period());
  d["status"] = c.status;
  if (c.status == "undetermined") return outcome(name, Outcome::Undetermined, "m is not prime and the sufficient condition fails", d);
  if (!alg) return outcome(name, Outcome::Pass, "", d);
  bool tame_eala = alg->aff_tame_eala();
  d["algebra_tame_eala"] = tame_eala;
  bool ok = tame_eala == (c.status == "tame_eala");
  return pass_if(name, ok, ok ? "" : "the root-level decision differs from the algebra", d);
}

CheckOutcome theorem_4_8(const std::string& name, const RootContext& ctx, const autoroot::AffinizationReport& rep) {
  auto expected = gcm::theorem_4_8_verdict(*ctx.matrix, *ctx.diagram);
  OJson d;
  d["transitive"] = gcm::is_transitive(*ctx.diagram);
  d["expected_verdict"] = expected.empty_nonisotropic ? "empty_nonisotropic" : "tame_eala";
  d["computed_verdict"] = rep.verdict;
  d["nullity"] = rep.nullity ? OJson(*rep.nullity) : OJson(nullptr);
  bool ok = expected.empty_nonisotropic ? rep.verdict == "empty_nonisotropic"
                                        : rep.verdict == "tame_eala" && rep.nullity == expected.nullity;
  return pass_if(name, ok, ok ? "" : "computed verdict differs from the theorem", d);
}

CheckOutcome corollary_3_67(const std::string& name, const RootContext& ctx) {
  if (!ctx.identity) return outcome(name, Outcome::Undetermined, "sigma is not the identity");
  if (!ctx.residues) return outcome(name, Outcome::Undetermined, ctx.residues_note);
  auto before = ears::report(*ctx.datum);
  auto after = ears::report(autoroot::affinized_root_datum(*ctx.sigma, *ctx.datum, *ctx.residues));
  OJson d;
  d["type_before"] = type_json(before.type);
  d["type_after"] = type_json(after.type);
  d["nullity_before"] = before.nullity;
  d["nullity_after"] = after.nullity;
  bool ok = before.type && after.type && *before.type == *after.type && after.nullity == before.nullity + 1;
  return pass_if(name, ok, ok ? "" : "type changed or nullity did not rise by one", d);
}

CheckOutcome transfer(const std::string& name, const RootContext& ctx, const autoroot::AffinizationReport& rep) {
  if (rep.verdict != "tame_eala") return outcome(name, Outcome::Undetermined, "R~^x is empty");
  auto t = autoroot::nondegeneracy_transfer(*ctx.sigma, *ctx.datum);
  OJson d;
  d["fixed_radical_dim"] = t.fixed_radical_dim;
  d["affinized_radical_dim"] = t.affinized_radical_dim;
  return pass_if(name, t.holds, t.holds ? "" : "V~^0 is not (V^0)^sigma (+) Q delta~", d);
}

CheckOutcome projection(const std::string& name, const RootContext& ctx) {
  if (ctx.datum->lattice_rank() != 0 || !ears::radical(*ctx.datum).empty())
    return outcome(name, Outcome::Undetermined, "stated for finite root systems; this datum has nullity > 0");
  auto sys = ears::bar_image(*ctx.datum);
  auto y = fixed_subspace(ctx.sigma->matrix());
  if (y.empty()) return outcome(name, Outcome::Undetermined, "sigma fixes no nonzero vector");
  auto res = rootsys::check_projection_lemma(sys, y);
  OJson d;
  d["part_i"] = res.part_i;
  d["part_ii"] = res.part_ii;
  d["visible_closure"] = res.visible_closure;
  d["visible"] = res.visible.size();
  bool ok = res.part_i && res.part_ii && res.visible_closure;
  return pass_if(name, ok, ok ? "" : "projection lemma fails on the fixed subspace", d);
}

CheckOutcome root_ea5b(const std::string& name, const RootContext& ctx, const autoroot::AffinizationReport& rep) {
  if (rep.verdict != "tame_eala") return outcome(name, Outcome::Undetermined, "R~^x is empty");
  if (!ctx.residues) return outcome(name, Outcome::Undetermined, ctx.residues_note);
  auto tilde = autoroot::affinized_root_datum(*ctx.sigma, *ctx.datum, *ctx.residues);
  bool a = ears::check_EA5a(tilde);
  auto b = ears::check_EA5b(tilde);
  OJson d;
  d["ea5a"] = a;
  d["ea5b"] = b.ok;
  if (!a) return outcome(name, Outcome::Undetermined, "EA5a fails on R~", d);
  return pass_if(name, b.ok, b.ok ? "" : "EA5b fails at " + to_string(*b.failing_delta), d);
}

CheckOutcome run_check(const std::string& name, const Scenario& s, const RootContext& ctx,
                       const autoroot::AffinizationReport& rep, AlgebraBackend* alg) {
  try {
    if (name == "affinization_report") return expect_check(name, s, rep);
    if (name == "corollary_3_65") return corollary_3_65(name, ctx, alg);
    if (name == "theorem_4_8") return theorem_4_8(name, ctx, rep);
    if (name == "corollary_3_67") return corollary_3_67(name, ctx);
    if (name == "nondegeneracy_transfer") return transfer(name, ctx, rep);
    if (name == "projection_lemma") return projection(name, ctx);
    if (name == "ea5b" && !alg) return root_ea5b(name, ctx, rep);
    if (name == "classification") {
      auto c = alg->check(name, rep);
      if (c.outcome == Outcome::Pass && s.expect.is_object()) {
        auto e = expect_check(name, s, rep);
        if (e.outcome != Outcome::Pass) return {name, Outcome::Fail, e.witness, c.details};
      }
      return c;
    }
    return alg->check(name, rep);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Schema) throw;
    return outcome(name, e.code() == ErrorCode::NotApplicable ? Outcome::Undetermined : Outcome::Fail,
                   std::string("could not evaluate: ") + e.what());
  }
}

}  // namespace

// ---- running -----------------------------------------------------------------------------

Result run(const Scenario& s, const RunOptions& opt) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  auto ms = [](clock::time_point a) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - a).count();
  };
  OJson timing;
  const long window = opt.window ? *opt.window : s.window;
  if (window < 1 || window > 8) fail(ErrorCode::Schema, "--window: must lie in 1..8");
  std::unique_ptr<AlgebraBackend> alg;
  if (s.algebra_backed) {
    try {
      alg = make_algebra_backend(s, window);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Schema) throw;
      fail(ErrorCode::Schema, "/automorphism: " + std::string(e.what()));
    }
  }
  RootContext ctx = (alg && s.source != "quantum_sl") ? alg->roots() : root_context(s);
  auto rep = autoroot::affinization_report(*ctx.sigma, *ctx.datum);
  timing["setup"] = ms(start);

  Result r;
  r.id = s.id;
  for (const auto& name : s.checks) {
    const auto t = clock::now();
    r.checks.push_back(run_check(name, s, ctx, rep, alg.get()));
    timing["checks"][name] = ms(t);
  }

  OJson o;
  o["scenario"] = s.id;
  o["source"] = s.source;
  o["window"] = window;
  o["status"] = r.any_fail() ? "fail" : "pass";
  OJson checks = OJson::array();
  for (const auto& c : r.checks) {
    OJson co;
    co["name"] = c.name;
    co["outcome"] = outcome_name(c.outcome);
    co["witness"] = c.witness;
    co["details"] = c.details.is_null() ? OJson::object() : c.details;
    checks.push_back(co);
  }
  o["checks"] = checks;
  OJson aff = json_io::write_report(rep);
  aff["input_root_datum"] = json_io::write_root_datum(*ctx.datum);
  aff["automorphism"] = {{"matrix", write(ctx.sigma->matrix())}, {"period", ctx.sigma->period()}};
  o["affinization"] = aff;
  o["algebra"] = alg ? alg->summary() : OJson(nullptr);
  if (opt.timing) {
    timing["total"] = ms(start);
    o["timing_ms"] = timing;
  }
  r.report = std::move(o);
  return r;
}

std::vector<Result> run_all(const std::vector<Scenario>& scenarios, const RunOptions& opt) {
  std::vector<std::future<Result>> jobs;
  for (const auto& s : scenarios) jobs.push_back(std::async(std::launch::async, [&s, &opt] { return run(s, opt); }));
  std::vector<Result> out;
  std::optional<Error> first;
  for (auto& j : jobs) {
    try {
      out.push_back(j.get());
    } catch (const Error& e) {
      if (!first) first = e;
    }
  }
  if (first) throw *first;
  std::sort(out.begin(), out.end(), [](const Result& a, const Result& b) { return a.id < b.id; });
  return out;
}

OJson batch_report(const std::vector<Result>& results) {
  OJson o;
  bool fail = false;
  OJson reports = OJson::array();
  for (const auto& r : results) {
    fail = fail || r.any_fail();
    reports.push_back(r.report);
  }
  o["status"] = fail ? "fail" : "pass";
  o["reports"] = reports;
  return o;
}

// ---- diagram automorphism table ---------------------------------------------------------

Theorem48Table theorem48_table(int max_rank) {
  if (max_rank < 1 || max_rank > 8) fail(ErrorCode::Schema, "--max-rank: must lie in 1..8");
  Theorem48Table t;
  t.rows = OJson::array();
  for (const auto& named : gcm::curated_affine(size_t(max_rank) + 1)) {
    auto datum = gcm::affine_root_datum(named.matrix);
    for (const auto& da : gcm::diagram_automorphisms(named.matrix)) {
      auto s = autoroot::RootAutomorphism::create(gcm::lattice_action(da), da.period, datum);
      auto rep = autoroot::affinization_report(s, datum);
      auto expected = gcm::theorem_4_8_verdict(named.matrix, da);
      bool agree = expected.empty_nonisotropic ? rep.verdict == "empty_nonisotropic"
                                               : rep.verdict == "tame_eala" && rep.nullity == expected.nullity;
      OJson row;
      row["matrix"] = named.name;
      row["nodes"] = named.matrix.size();
      row["diagram_perm"] = da.perm;
      row["period"] = da.period;
      row["transitive"] = gcm::is_transitive(da);
      row["expected"] = expected.empty_nonisotropic ? "empty_nonisotropic" : "tame_eala";
      row["verdict"] = rep.verdict;
      row["type"] = type_json(rep.type);
      row["nullity"] = rep.nullity ? OJson(*rep.nullity) : OJson(nullptr);
      row["agree"] = agree;
      t.rows.push_back(row);
      t.all_agree = t.all_agree && agree;
      ++t.pairs;
    }
  }
  return t;
}

std::string render_theorem48(const Theorem48Table& t) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "matrix" << std::setw(22) << "perm" << std::setw(6) << "m" << std::setw(11)
      << "transitive" << std::setw(20) << "verdict" << std::setw(6) << "type" << std::setw(8) << "nullity"
      << "agree\n";
  for (const auto& r : t.rows) {
    std::string perm;
    for (const auto& p : r["diagram_perm"]) perm += (perm.empty() ? "" : ",") + std::to_string(p.get<int>());
    out << std::left << std::setw(8) << r["matrix"].get<std::string>() << std::setw(22) << perm << std::setw(6)
        << r["period"].get<int>() << std::setw(11) << (r["transitive"].get<bool>() ? "yes" : "no") << std::setw(20)
        << r["verdict"].get<std::string>() << std::setw(6)
        << (r["type"].is_null() ? "-" : r["type"].get<std::string>()) << std::setw(8)
        << (r["nullity"].is_null() ? "-" : std::to_string(r["nullity"].get<int>()))
        << (r["agree"].get<bool>() ? "yes" : "NO") << "\n";
  }
  out << t.pairs << " pairs, " << (t.all_agree ? "all agree" : "DISAGREEMENT") << "\n";
  return out.str();
}

}  // namespace eala::scenario
