#include "doctest.h"
#include "eala/liealg/analysis.hpp"
#include "eala/liealg/build.hpp"

using namespace eala;
using namespace eala::liealg;

namespace {

template <class F>
size_t find(const GradedAlgebra<F>& g, const std::string& name) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (g.basis(i).name == name) return i;
  FAIL("no basis element " << name);
  return 0;
}

RatMatrix sl2_tau(const CoordinatedSl& g) {
  RatMatrix m = RatMatrix::identity(3, Rational(0));
  m(find(g.real.alg, "e12"), find(g.real.alg, "e12")) = -1;
  m(find(g.real.alg, "e21"), find(g.real.alg, "e21")) = -1;
  return m;
}

Automorphism<Rational> identity_of(const Realization<Rational>& r) {
  return {RatMatrix::identity(r.alg.dim(), Rational(0)), 1};
}

// Number of fixed points of the extension of sigma to Aff(g) in loop degree i.
size_t fixed_dim_in_loop_degree(const Realization<Rational>& g, const Automorphism<Rational>& s, long window, long i) {
  auto aff = affinize(g, window);
  auto ext = extend_automorphism(aff, g.alg.dim(), window, s);
  const size_t n = g.alg.dim();
  const size_t off = static_cast<size_t>(i + window) * n;
  RatMatrix block(n, n, Rational(0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) block(a, b) = ext.matrix(off + a, off + b);
  return fixed_subspace(block).size();
}

size_t fixed_dim(const FixedAffinization<Rational>& fa, long i) {
  size_t n = 0;
  for (const auto& [d, idx] : fa.real.alg.blocks())
    if (d[0] == i) n += idx.size();
  return n;
}

// g (+) F z with z central, (z, z) = 1 and z added to the Cartan.
Realization<Rational> with_central_summand(const Realization<Rational>& r) {
  const auto& a = r.alg;
  GradedAlgebra<Rational> b(Rational(0), a.grading_rank(), a.window());
  for (size_t i = 0; i < a.dim(); ++i) b.add_basis(a.basis(i).name, a.basis(i).degree);
  size_t z = b.add_basis("z", Degree(a.grading_rank(), 0));
  b.finish_basis();
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = i + 1; j < a.dim(); ++j)
      if (a.bracket_defined(i, j)) b.set_bracket(i, j, a.bracket_basis(i, j));
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = i; j < a.dim(); ++j)
      if (a.form_basis(i, j) != 0) b.set_form(i, j, a.form_basis(i, j));
  b.set_form(z, z, Rational(1));
  auto pad = [&](const RatVector& v) {
    RatVector w = v;
    w.push_back(Rational(0));
    return w;
  };
  Realization<Rational> out{std::move(b), {}, {}, {}};
  for (const auto& v : r.cartan) out.cartan.push_back(pad(v));
  out.cartan.push_back(out.alg.unit(z));
  for (const auto& v : r.centrals) out.centrals.push_back(pad(v));
  for (const auto& v : r.derivations) out.derivations.push_back(pad(v));
  return out;
}

template <class F>
std::set<RatVector> weights_of(const WeightDecomposition<F>& w) {
  std::set<RatVector> out;
  for (const auto& x : w.distinct_weights()) out.insert(rational_weight(x));
  return out;
}

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

}  // namespace

TEST_CASE("eigenspaces") {
  auto g = sl(2);
  auto id = eigenspaces(g.real.alg, identity_of(g.real));
  CHECK(id.dim(0) == 3);
  auto om = eigenspaces(g.real.alg, chevalley(g));
  CHECK(om.dim(0) == 1);
  CHECK(om.dim(1) == 2);

  // order-3 rotation of sl3 over Q(zeta_3)
  auto g3 = sl(3);
  RatMatrix p(3, 3, Rational(0));
  p(1, 0) = p(2, 1) = p(0, 2) = 1;
  auto rot = conjugation(g3, p, 3);
  Automorphism<Cyclotomic> lifted{lift(rot.matrix, 3), 3};
  auto alg = lift(g3.real.alg, 3);
  auto e = eigenspaces(alg, lifted);
  CHECK(e.dim(0) + e.dim(1) + e.dim(2) == 8);
  for (long i = 0; i < 3; ++i) CHECK(e.dim(i) > 0);
  // [g_i, g_j] lies in g_{i+j}
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j)
      for (const auto& x : e.at(i, {}))
        for (const auto& y : e.at(j, {})) {
          auto b = *alg.bracket(x, y);
          auto zeta = coords::root_of_unity<Cyclotomic>(3, i + j, alg.zero());
          CHECK(lifted.matrix.apply(b) == scale(zeta, b));
        }

  auto bad = chevalley(g);
  bad.period = 1;
  CHECK_THROWS(eigenspaces(g.real.alg, bad));
}

TEST_CASE("extension of sigma to Aff(g)") {
  auto g = sl(2);
  auto aff = affinize(g.real, 2);
  auto ext = extend_automorphism(aff, 3, 2, chevalley(g));
  CHECK(check_automorphism(aff, ext).all());
  // omega~(e (x) t) = f (x) t up to the sign of omega(e) = -f and zeta^-1 = -1
  size_t e1 = find(aff.alg, "e12 (x) t^1"), f1 = find(aff.alg, "e21 (x) t^1");
  CHECK(ext.matrix(f1, e1) == 1);
  auto id = extend_automorphism(aff, 3, 2, identity_of(g.real));
  CHECK(id.matrix.is_identity());
  auto tau = extend_automorphism(aff, 3, 2, Automorphism<Rational>{sl2_tau(g), 2});
  CHECK(check_automorphism(aff, tau).all());
}

TEST_CASE("fixed subalgebra of sl2 under omega") {
  auto g = sl(2);
  auto s = chevalley(g);
  auto fa = fixed_subalgebra(g.real, s, 4);
  for (long i = -4; i <= 4; ++i) {
    CHECK(fixed_dim(fa, i) == (i % 2 == 0 ? 1u : 2u) + (i == 0 ? 2u : 0u));
    CHECK(fixed_dim(fa, i) == fixed_dim_in_loop_degree(g.real, s, 4, i) + (i == 0 ? 2u : 0u));
  }
  CHECK(fa.cartan.vectors.empty());
  CHECK(fa.real.cartan.size() == 2);
  CHECK(structure_report(fa.real.alg).all());
}

TEST_CASE("fixed subalgebra for sigma = id is Aff(g)") {
  auto g = sl(2);
  auto fa = fixed_subalgebra(g.real, identity_of(g.real), 3);
  auto aff = affinize(g.real, 3);
  CHECK(fa.real.alg.dim() == aff.alg.dim());
  CHECK(fa.real.cartan.size() == 3);
  // same structure constants on matching basis vectors
  size_t e1 = find(aff.alg, "e12 (x) t^1"), f1 = find(aff.alg, "e21 (x) t^-1");
  auto x = fa.element(1, g.real.alg.unit(0), g.real.alg);
  auto y = fa.element(-1, g.real.alg.unit(1), g.real.alg);
  auto b = *fa.real.alg.bracket(x, y);
  auto h0 = fa.element(0, g.real.alg.unit(2), g.real.alg);
  RatVector expect = h0;
  expect[fa.c] = 4;
  CHECK(b == expect);
  CHECK(*aff.alg.bracket(aff.alg.unit(e1), aff.alg.unit(f1)) ==
        vadd(aff.alg.unit(find(aff.alg, "h1 (x) t^0")), scale(Rational(4), aff.alg.unit(find(aff.alg, "c")))));
  CHECK(fa.real.alg.form(fa.real.alg.unit(fa.c), fa.real.alg.unit(fa.d)) == 1);
  CHECK(fa.real.alg.form(fa.real.alg.unit(fa.c), fa.real.alg.unit(fa.c)) == 0);
  CHECK(structure_report(fa.real.alg).all());
}

TEST_CASE("weights of sl2 and Aff(sl2, id)") {
  auto g = sl(2);
  auto w = diagonal_weights(g.real);
  // values on h: e -> 2, f -> -2, h -> 0
  CHECK(weights_of(w) == std::set<RatVector>{rv({0}), rv({2}), rv({-2})});
  CHECK(w.dim_of_weight(rv({2})) == 1);

  auto st = study(g.real, identity_of(g.real), 3);
  // values on (h, c, d)
  std::set<RatVector> expect;
  for (long i = -3; i <= 3; ++i) {
    expect.insert(rv({2, 0, i}));
    expect.insert(rv({-2, 0, i}));
    expect.insert(rv({0, 0, i}));
  }
  CHECK(weights_of(st.aff_weights) == expect);
  CHECK(nonisotropic_multiplicity_one(st.aff.real, st.aff_weights).holds);
  CHECK(weight_orthogonality(st.aff.real, st.aff_weights).holds);

  auto inferred = infer_root_datum(st.aff.real, st.aff_weights);
  CHECK(inferred.window_consistent);
  auto rep = ears::report(inferred.datum);
  CHECK(rep.nullity == 1);
  CHECK(rep.type->to_string() == "A1");
}

TEST_CASE("centralizers and Cartan conditions") {
  auto g = sl(2);
  size_t h = find(g.real.alg, "h1");
  auto c = centralizer_in_block(g.real.alg, {}, {g.real.alg.unit(h)});
  REQUIRE(c.size() == 1);
  CHECK(c[0][h] != 0);

  auto om = study(g.real, chevalley(g), 2);
  auto cc = cartan_conditions(om.g, om.sigma, om.aff, om.g_weights, om.aff_weights, om.residues);
  CHECK_FALSE(cc.i);
  CHECK_FALSE(cc.ii);
  CHECK_FALSE(cc.iii);
  REQUIRE(cc.iv.has_value());
  CHECK_FALSE(*cc.iv);
  CHECK(cc.agree());
  // h^omega = 0, so the centralizer is g^omega itself
  CHECK(om.residues.per_residue[0].dim_of_weight({}) == 1);

  for (const auto& s : {identity_of(g.real), Automorphism<Rational>{sl2_tau(g), 2}}) {
    auto st = study(g.real, s, 2);
    auto k = cartan_conditions(st.g, st.sigma, st.aff, st.g_weights, st.aff_weights, st.residues);
    CHECK(k.i);
    CHECK(k.ii);
    CHECK(k.iii);
    CHECK(k.agree());
  }
}

TEST_CASE("toroidal sl2 with tau mu = 1") {
  auto g = sl(2);
  auto cur = current_algebra(g.real, 1, 3, true);
  auto s = toroidal_automorphism<Rational>(cur, sl2_tau(g), {1}, 2);
  auto st = study(cur.real, s, 3);
  // degree-p component of g^sigma is gdot_{-p mod 2} (x) t^p
  for (long p = -3; p <= 3; ++p) {
    size_t dim = 0;
    for (const auto& v : st.eig.at(0, {p})) (void)v, ++dim;
    CHECK(dim == (p % 2 == 0 ? 1u : 2u) + (p == 0 ? 2u : 0u));
  }
  auto cc = cartan_conditions(st.g, st.sigma, st.aff, st.g_weights, st.aff_weights, st.residues);
  CHECK(cc.i);
  CHECK(cc.ii);
  CHECK(cc.iii);
  CHECK(cc.agree());
  auto ac = core(st.aff.real, st.aff_weights);
  auto inferred = infer_root_datum(st.aff.real, st.aff_weights);
  auto ea = ea_axioms(st.aff.real, st.aff_weights, inferred.datum);
  CHECK(ea.all());
  CHECK(ea.roots->nullity == 2);
  CHECK(tameness_check(st.aff.real, ac).tame);
}

TEST_CASE("cores and tameness") {
  auto g = sl(2);
  auto w = diagonal_weights(g.real);
  auto c = core(g.real, w);
  CHECK(c.space.dim() == 3);
  CHECK(tameness_check(g.real, c).tame);

  auto st = study(g.real, identity_of(g.real), 4);
  auto ac = core(st.aff.real, st.aff_weights);
  auto gc = core(st.g, st.g_weights);
  auto ci = core_identity(st.aff, st.g, ac, gc, st.eig);
  CHECK(ci.holds);
  CHECK(ci.c_in_core);
  CHECK_FALSE(ci.d_in_core);
  CHECK(tameness_check(st.aff.real, ac).tame);

  auto z = with_central_summand(st.aff.real);
  auto zw = diagonal_weights(z);
  auto zc = core(z, zw);
  auto t = tameness_check(z, zc);
  CHECK_FALSE(t.tame);
  CHECK(t.witness.find("z") != std::string::npos);
}

TEST_CASE("core identity and the central commutator") {
  auto g = sl(2);
  for (const auto& s : {identity_of(g.real), Automorphism<Rational>{sl2_tau(g), 2}}) {
    auto st = study(g.real, s, 4);
    auto ac = core(st.aff.real, st.aff_weights);
    auto gc = core(st.g, st.g_weights);
    auto ci = core_identity(st.aff, st.g, ac, gc, st.eig);
    CHECK(ci.holds);
    CHECK(ci.degrees_compared > 0);
    auto cc = central_commutator(st.aff, st.g, st.eig);
    CHECK(cc.found);
    CHECK(cc.holds);
  }
}

TEST_CASE("EA axioms") {
  auto g = sl(2);
  auto id = study(g.real, identity_of(g.real), 3);
  auto d = infer_root_datum(id.aff.real, id.aff_weights);
  auto ea = ea_axioms(id.aff.real, id.aff_weights, d.datum);
  CHECK(ea.all());

  auto om = study(g.real, chevalley(g), 3);
  auto od = infer_root_datum(om.aff.real, om.aff_weights);
  auto eo = ea_axioms(om.aff.real, om.aff_weights, od.datum);
  CHECK_FALSE(eo.ea2.holds);
}

TEST_CASE("algebra weights agree with the root-level affinization") {
  auto g = sl(2);
  for (const auto& s : {identity_of(g.real), Automorphism<Rational>{sl2_tau(g), 2}, chevalley(g)}) {
    auto st = study(g.real, s, 3);
    auto gd = infer_root_datum(st.g, st.g_weights);
    auto rs = root_automorphism(st.aff.cartan, s.period, gd.datum);
    auto res = residues_from_algebra(rs, gd.datum, st.aff.cartan, st.residues, Rational(0));
    auto ra = root_agreement(st.aff, st.g, st.aff_weights, rs, gd.datum, autoroot::affinized_root_datum(rs, gd.datum, res));
    CHECK_MESSAGE(ra.holds, ra.witness);
  }
}

TEST_CASE("quantum sl2 with minus star") {
  for (int l = 1; l <= 2; ++l) {
    auto k = coordinated_sl(l + 1, coords::QuantumTorus::commutative(1), 2, Rational(1), true);
    auto s = minus_star(k);
    CHECK(s.matrix.pow(2).is_identity());
    CHECK(check_automorphism(k.real, s).all());
    auto st = study(k.real, s, 2);
    auto cc = cartan_conditions(st.g, st.sigma, st.aff, st.g_weights, st.aff_weights, st.residues);
    CHECK(cc.iii);
    CHECK(cc.agree());
    auto gc = core(st.g, st.g_weights);
    auto desc = core_descriptions(st.g, st.aff, st.g_weights, st.residues, gc);
    CHECK(desc.applicable);
    CHECK(desc.generated_by_projected);
    CHECK(desc.sum_plus_commutators);
  }
}
