#include <functional>

#include "eala/catalog.hpp"
#include "eala/liealg/analysis.hpp"
#include "eala/liealg/build.hpp"
#include "scenario_internal.hpp"

namespace eala::scenario::detail {

using json_io::Node;
using namespace eala::liealg;

namespace {

std::string first_failure(const StructureReport& r) {
  const std::pair<const char*, const CheckResult*> parts[] = {
      {"antisymmetry", &r.antisymmetry}, {"jacobi", &r.jacobi},       {"grading", &r.grading},
      {"form symmetry", &r.form_symmetric}, {"invariance", &r.invariance}, {"form grading", &r.form_grading},
      {"nondegeneracy", &r.nondegenerate}};
  for (const auto& [name, c] : parts)
    if (!c->holds) return std::string(name) + ": " + c->witness;
  return "";
}

size_t structure_count(const StructureReport& r) {
  return r.antisymmetry.checked + r.jacobi.checked + r.grading.checked + r.form_symmetric.checked +
         r.invariance.checked + r.form_grading.checked + r.nondegenerate.checked;
}

// Automorphism of a finite-dimensional sl_n from its spec.
Automorphism<Rational> sl_automorphism(const CoordinatedSl& g, const Node& spec) {
  std::string kind = spec.has("kind") ? spec.at("kind").string() : (spec.has("matrix") ? "matrix" : "");
  std::optional<long> period;
  if (spec.has("period")) period = spec.at("period").integer();
  Automorphism<Rational> out;
  if (kind == "identity") {
    out = {RatMatrix::identity(g.real.alg.dim(), Rational(0)), 1};
  } else if (kind == "chevalley") {
    out = chevalley(g);
  } else if (kind == "minus_star") {
    out = minus_star(g);
  } else if (kind == "conjugation") {
    if (!period) spec.at("period").error("conjugation needs a period");
    RatMatrix p = spec.at("by").matrix();
    if (p.rows() != size_t(g.n) || !p.square()) spec.at("by").error("expected an n x n matrix");
    out = conjugation(g, p, *period);
  } else if (kind == "matrix") {
    if (!period) spec.at("period").error("a matrix automorphism needs a period");
    RatMatrix m = spec.at("matrix").matrix();
    if (m.rows() != g.real.alg.dim() || !m.square()) spec.at("matrix").error("expected a square matrix on the basis of g");
    out = {m, *period};
  } else {
    spec.error("unknown automorphism kind \"" + kind + "\" (identity, chevalley, minus_star, conjugation, matrix)");
  }
  if (period) out.period = *period;
  if (out.period < 1) spec.at("period").error("period must be positive");
  return out;
}

template <class F>
class Backend : public AlgebraBackend {
 public:
  Backend(Realization<Rational> g_rat, Realization<F> g, Automorphism<F> s, long window, std::string label)
      : g_rat_(std::move(g_rat)), label_(std::move(label)) {
    st_ = study(std::move(g), std::move(s), window);
    gd_.emplace(infer_root_datum(st_.g, st_.g_weights));
    ad_.emplace(infer_root_datum(st_.aff.real, st_.aff_weights));
    ctx_.datum = gd_->datum;
    ctx_.sigma = root_automorphism(st_.aff.cartan, st_.sigma.period, gd_->datum);
    ctx_.identity = st_.sigma.matrix.is_identity();
    try {
      ctx_.residues = residues_from_algebra(*ctx_.sigma, gd_->datum, st_.aff.cartan, st_.residues, st_.g.alg.zero());
    } catch (const Error& e) {
      ctx_.residues_note = e.what();
    }
  }

  const RootContext& roots() const override { return ctx_; }

  OJson summary() const override {
    OJson o;
    o["construction"] = label_;
    o["window"] = st_.window;
    o["period"] = st_.sigma.period;
    o["dim_g"] = st_.g.alg.dim();
    o["dim_aff"] = st_.aff.real.alg.dim();
    o["dim_fixed_cartan"] = st_.aff.cartan.vectors.size();
    o["g_roots_window_consistent"] = gd_->window_consistent;
    o["aff_roots_window_consistent"] = ad_->window_consistent;
    try {
      auto r = ears::report(ad_->datum);
      o["aff_type"] = r.type ? OJson(r.type->to_string()) : OJson(nullptr);
      o["aff_nullity"] = r.nullity;
    } catch (const Error&) {
      o["aff_type"] = nullptr;
      o["aff_nullity"] = nullptr;
    }
    return o;
  }

  bool aff_tame_eala() override { return ea_aff().all() && tameness_check(st_.aff.real, aff_core()).tame; }

  CheckOutcome check(const std::string& name, const autoroot::AffinizationReport& rep) override {
    const bool tame_verdict = rep.verdict == "tame_eala";
    if (name == "structure") return structure(name);
    if (name == "automorphism") return automorphism(name);
    if (name == "weight_orthogonality") {
      auto a = weight_orthogonality(st_.g, st_.g_weights), b = weight_orthogonality(st_.aff.real, st_.aff_weights);
      OJson d;
      d["pairs_checked"] = a.checked + b.checked;
      return pass_if(name, a.holds && b.holds, !a.holds ? "g: " + a.witness : b.witness, d);
    }
    if (name == "root_multiplicity") {
      auto a = nonisotropic_multiplicity_one(st_.aff.real, st_.aff_weights);
      OJson d;
      d["roots_checked"] = a.checked;
      return pass_if(name, a.holds, a.witness, d);
    }
    if (name == "prop_3_25") {
      auto c = cartan_conditions(st_.g, st_.sigma, st_.aff, st_.g_weights, st_.aff_weights, st_.residues);
      OJson d;
      d["i"] = c.i;
      d["ii"] = c.ii;
      d["iii"] = c.iii;
      d["iv"] = c.iv ? OJson(*c.iv) : OJson(nullptr);
      std::string w = c.agree() ? (c.i ? "all conditions hold" : c.witness_ii) : "conditions disagree";
      return pass_if(name, c.agree(), w, d);
    }
    if (name == "core_identity") {
      if (!tame_verdict) return outcome(name, Outcome::Undetermined, "Aff(g, sigma) has no nonisotropic roots");
      if (st_.window < st_.sigma.period + 1)
        return outcome(name, Outcome::Undetermined, "the window must contain degrees k and k + m (N >= m + 1)");
      auto ci = core_identity(st_.aff, st_.g, aff_core(), g_core(), st_.eig);
      auto cc = central_commutator(st_.aff, st_.g, st_.eig);
      OJson d;
      d["degrees_compared"] = ci.degrees_compared;
      d["c_in_core"] = ci.c_in_core;
      d["d_in_core"] = ci.d_in_core;
      d["commutator_degree"] = cc.k;
      d["commutator_pair"] = cc.pair;
      d["commutator_gives_c"] = cc.found && cc.holds;
      std::string w = !ci.holds ? ci.witness : !cc.found ? "no pair x, y with (x, y) != 0 fits the window"
                                             : !cc.holds ? "the commutator combination is not a multiple of c" : "";
      return pass_if(name, ci.holds && cc.found && cc.holds, w, d);
    }
    if (name == "core_descriptions") {
      auto cd = core_descriptions(st_.g, st_.aff, st_.g_weights, st_.residues, g_core());
      if (!cd.applicable) return outcome(name, Outcome::Undetermined, "no alpha with (pi alpha, pi alpha) != 0");
      OJson d;
      d["generated_by_projected"] = cd.generated_by_projected;
      d["sum_plus_commutators"] = cd.sum_plus_commutators;
      d["degrees_compared"] = cd.degrees_compared;
      return pass_if(name, cd.generated_by_projected && cd.sum_plus_commutators, cd.witness, d);
    }
    if (name == "tameness") {
      auto tg = tameness_check(st_.g, g_core());
      auto ta = tameness_check(st_.aff.real, aff_core());
      OJson d;
      d["g_tame"] = tg.tame;
      d["aff_tame"] = ta.tame;
      d["aff_degrees_checked"] = ta.degrees_checked;
      if (!tg.tame) return outcome(name, Outcome::Fail, "g is not tame: " + tg.witness, d);
      bool ok = ta.tame == tame_verdict;
      return pass_if(name, ok, ok ? ta.witness : "tameness of Aff(g, sigma) contradicts the verdict " + rep.verdict, d);
    }
    if (name == "ea_axioms") {
      const auto& eg = ea_g();
      const auto& ea = ea_aff();
      OJson d;
      d["g"] = ea_json(eg);
      d["aff"] = ea_json(ea);
      if (!eg.all()) return outcome(name, Outcome::Fail, "g is not an EALA", d);
      bool ok = ea.all() == tame_verdict;
      return pass_if(name, ok, ok ? "" : "EA axioms on Aff(g, sigma) contradict the verdict " + rep.verdict, d);
    }
    if (name == "ea5b") {
      const auto& ea = ea_aff();
      auto ta = tameness_check(st_.aff.real, aff_core());
      OJson d;
      d["aff_tame"] = ta.tame;
      d["ea1_to_ea5a"] = ea.first_four() && ea.ea5a;
      d["ea5b"] = ea.ea5b;
      if (!ta.tame || !ea.first_four() || !ea.ea5a)
        return outcome(name, Outcome::Undetermined, "hypotheses not met: Aff(g, sigma) is not tame with EA1-EA5a", d);
      return pass_if(name, ea.ea5b, ea.ea5b ? "" : "EA5b fails on a tame algebra satisfying EA1-EA5a", d);
    }
    if (name == "root_agreement") {
      if (!ctx_.residues) return outcome(name, Outcome::Undetermined, "residues unavailable: " + ctx_.residues_note);
      auto tilde = autoroot::affinized_root_datum(*ctx_.sigma, gd_->datum, *ctx_.residues);
      auto ra = root_agreement(st_.aff, st_.g, st_.aff_weights, *ctx_.sigma, gd_->datum, tilde);
      OJson d;
      d["algebra_weights"] = ra.algebra_roots;
      d["datum_roots_in_window"] = ra.datum_roots;
      return pass_if(name, ra.holds, ra.witness, d);
    }
    if (name == "classification") {
      OJson d;
      d["root_level_type"] = rep.type ? OJson(rep.type->to_string()) : OJson(nullptr);
      d["root_level_nullity"] = rep.nullity ? OJson(*rep.nullity) : OJson(nullptr);
      if (!tame_verdict) {
        bool empty = true;
        for (const auto& c : ad_->datum.cosets()) empty = empty && ad_->datum.isotropic(c);
        d["algebra_nonisotropic_roots"] = !empty;
        return pass_if(name, empty, empty ? "" : "the algebra has nonisotropic roots", d);
      }
      auto r = ears::report(ad_->datum);
      d["algebra_type"] = r.type ? OJson(r.type->to_string()) : OJson(nullptr);
      d["algebra_nullity"] = r.nullity;
      bool ok = r.type && rep.type && *r.type == *rep.type && rep.nullity && r.nullity == *rep.nullity;
      return pass_if(name, ok, ok ? "" : "algebra-level type or nullity differs from the root-level affinization", d);
    }
    fail(ErrorCode::Internal, "unhandled algebra check " + name);
  }

 private:
  CheckOutcome structure(const std::string& name) {
    auto a = structure_report(st_.g.alg);
    auto b = structure_report(st_.aff.real.alg);
    OJson d;
    d["g_instances"] = structure_count(a);
    d["aff_instances"] = structure_count(b);
    if (!a.all()) return outcome(name, Outcome::Fail, "g: " + first_failure(a), d);
    return pass_if(name, b.all(), b.all() ? "" : "Aff(g, sigma): " + first_failure(b), d);
  }

  CheckOutcome automorphism(const std::string& name) {
    const long m = st_.sigma.period;
    auto rg = check_automorphism(st_.g, st_.sigma);
    OJson d;
    d["sigma_on_g"] = rg.all();
    if (!rg.all()) {
      std::string w = !rg.period.holds ? rg.period.witness : !rg.bracket.holds ? rg.bracket.witness
                    : !rg.form.holds ? rg.form.witness : !rg.grading.holds ? rg.grading.witness : rg.cartan.witness;
      return outcome(name, Outcome::Fail, w, d);
    }
    // extension to Aff(g); its period must be exactly m
    auto aff = realize_in<F>(affinize(g_rat_, st_.window), m);
    auto ext = extend_automorphism(aff, st_.g.alg.dim(), st_.window, st_.sigma);
    auto re = check_automorphism(aff, ext);
    long period = 0;
    Matrix<F> p = ext.matrix;
    for (long k = 1; k <= m; ++k, p = p * ext.matrix)
      if (p.is_identity()) {
        period = k;
        break;
      }
    d["extension_automorphism"] = re.all();
    d["extension_period"] = period;
    if (!re.all()) return outcome(name, Outcome::Fail, "the extension to Aff(g) is not an automorphism", d);
    return pass_if(name, period == m, period == m ? "" : "the extension has period " + std::to_string(period), d);
  }

  static OJson ea_json(const EaAxioms& e) {
    OJson o;
    o["EA1"] = e.ea1.holds;
    o["EA2"] = e.ea2.holds;
    o["EA3"] = e.ea3.holds;
    o["EA4"] = e.ea4.holds;
    o["EA5a"] = e.ea5a;
    o["EA5b"] = e.ea5b;
    if (!e.roots_error.empty()) o["note"] = e.roots_error;
    return o;
  }

  const Core<F>& g_core() {
    if (!g_core_) g_core_.emplace(core(st_.g, st_.g_weights));
    return *g_core_;
  }
  const Core<F>& aff_core() {
    if (!aff_core_) aff_core_.emplace(core(st_.aff.real, st_.aff_weights));
    return *aff_core_;
  }
  const EaAxioms& ea_g() {
    if (!ea_g_) ea_g_.emplace(ea_axioms(st_.g, st_.g_weights, gd_->datum));
    return *ea_g_;
  }
  const EaAxioms& ea_aff() {
    if (!ea_aff_) ea_aff_.emplace(ea_axioms(st_.aff.real, st_.aff_weights, ad_->datum));
    return *ea_aff_;
  }

  Realization<Rational> g_rat_;
  std::string label_;
  Study<F> st_;
  std::optional<InferredDatum> gd_, ad_;
  RootContext ctx_;
  std::optional<Core<F>> g_core_, aff_core_;
  std::optional<EaAxioms> ea_g_, ea_aff_;
};

template <class F>
std::unique_ptr<AlgebraBackend> make(Realization<Rational> g_rat, const Automorphism<Rational>& s, long window,
                                     std::string label) {
  auto g = realize_in<F>(g_rat, s.period);
  Automorphism<F> sf{matrix_in<F>(s.matrix, s.period), s.period};
  return std::make_unique<Backend<F>>(std::move(g_rat), std::move(g), std::move(sf), window, std::move(label));
}

std::unique_ptr<AlgebraBackend> dispatch(Realization<Rational> g_rat, const Automorphism<Rational>& s, long window,
                                         std::string label) {
  if (s.period <= 2) return make<Rational>(std::move(g_rat), s, window, std::move(label));
  return make<Cyclotomic>(std::move(g_rat), s, window, std::move(label));
}

coords::QuantumTorus torus_from(const Node& params, int nu) {
  if (params.has("q")) {
    auto q = params.at("q").integer_matrix();
    if (q.size() != size_t(nu)) params.at("q").error("expected a nu x nu matrix");
    try {
      return coords::QuantumTorus::from_signs(q);
    } catch (const Error& e) {
      params.at("q").error(e.what());
    }
  }
  if (params.has("q12")) {
    if (nu != 2) params.at("q12").error("q12 needs nu = 2");
    long q = params.at("q12").integer();
    return coords::QuantumTorus::from_signs({{1, q}, {q, 1}});
  }
  return coords::QuantumTorus::commutative(nu);
}

}  // namespace

std::unique_ptr<AlgebraBackend> make_algebra_backend(const Scenario& s, long window) {
  Node params(s.params, "/algebra/params");
  Node aut(s.automorphism, "/automorphism");
  if (s.source == "sl") {
    long n = params.at("n").integer();
    if (n < 2 || n > 4) params.at("n").error("n must be 2, 3 or 4");
    auto g = sl(int(n));
    auto sigma = sl_automorphism(g, aut);
    return dispatch(g.real, sigma, window, "sl(" + std::to_string(n) + ")");
  }
  if (s.source == "toroidal") {
    long n = params.at("n").integer();
    long nu = params.at("nu").integer();
    if (n < 2 || n > 3) params.at("n").error("n must be 2 or 3");
    if (nu < 1 || nu > 2) params.at("nu").error("nu must be 1 or 2");
    auto base = sl(int(n));
    auto cur = current_algebra(base.real, int(nu), window, true);
    std::string label = "sl(" + std::to_string(n) + ") (x) Laurent polynomials in " + std::to_string(nu) + " variables";
    std::string kind = aut.at("kind").string();
    if (kind == "identity") {
      Automorphism<Rational> id{RatMatrix::identity(cur.real.alg.dim(), Rational(0)), 1};
      return dispatch(cur.real, id, window, label);
    }
    if (kind != "tau_mu") aut.at("kind").error("toroidal automorphisms are identity or tau_mu");
    auto tau = sl_automorphism(base, aut.at("tau"));
    long m = aut.at("period").integer();
    if (m < 1) aut.at("period").error("period must be positive");
    std::vector<long> mu = aut.at("mu").integers();
    if (mu.size() != size_t(nu)) aut.at("mu").error("mu needs nu entries");
    if (m <= 2) {
      auto sf = toroidal_automorphism<Rational>(cur, tau.matrix, mu, m);
      return std::make_unique<Backend<Rational>>(cur.real, cur.real, sf, window, label);
    }
    auto sf = toroidal_automorphism<Cyclotomic>(cur, matrix_in<Cyclotomic>(tau.matrix, m), mu, m);
    return std::make_unique<Backend<Cyclotomic>>(cur.real, realize_in<Cyclotomic>(cur.real, m), sf, window, label);
  }
  if (s.source == "quantum_sl") {
    long l = params.at("l").integer();
    long nu = params.at("nu").integer();
    if (l < 1 || l > 2) params.at("l").error("the algebra is built for l = 1, 2 only");
    if (nu < 1 || nu > 2) params.at("nu").error("nu must be 1 or 2");
    auto torus = torus_from(params, int(nu));
    auto k = coordinated_sl(int(l + 1), torus, window, Rational(1), true);
    std::string kind = aut.has("kind") ? aut.at("kind").string() : "minus_star";
    Automorphism<Rational> sigma;
    if (kind == "minus_star") sigma = minus_star(k);
    else if (kind == "identity") sigma = {RatMatrix::identity(k.real.alg.dim(), Rational(0)), 1};
    else aut.at("kind").error("quantum_sl automorphisms are minus_star or identity");
    return dispatch(k.real, sigma, window, "sl(" + std::to_string(l + 1) + ") over a quantum torus");
  }
  fail(ErrorCode::Internal, "no algebra for source " + s.source);
}

}  // namespace eala::scenario::detail
