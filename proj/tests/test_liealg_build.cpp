#include "doctest.h"
#include "eala/liealg/build.hpp"

using namespace eala;
using namespace eala::liealg;

namespace {

size_t find(const GradedAlgebra<Rational>& g, const std::string& name) {
  for (size_t i = 0; i < g.dim(); ++i)
    if (g.basis(i).name == name) return i;
  FAIL("no basis element " << name);
  return 0;
}

Sparse<Rational> term(size_t i, long c) { return {{i, Rational(c)}}; }

// ad x as a matrix, from the structure constants.
RatMatrix ad(const GradedAlgebra<Rational>& g, size_t x) {
  RatMatrix m(g.dim(), g.dim(), Rational(0));
  for (size_t j = 0; j < g.dim(); ++j)
    for (const auto& [k, c] : g.bracket_basis(x, j)) m(k, j) = c;
  return m;
}

Rational trace(const RatMatrix& m) {
  Rational t(0);
  for (size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// tau = Ad diag(1, -1) on sl_2 (e -> -e, f -> -f, h -> h).
RatMatrix sl2_tau(const CoordinatedSl& g) {
  RatMatrix m = RatMatrix::identity(3, Rational(0));
  m(find(g.real.alg, "e12"), find(g.real.alg, "e12")) = -1;
  m(find(g.real.alg, "e21"), find(g.real.alg, "e21")) = -1;
  return m;
}

coords::QuantumTorus minus_one_torus(int nu) {
  std::vector<std::vector<long>> q(nu, std::vector<long>(nu, 1));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      if (i != j) q[i][j] = -1;
  return coords::QuantumTorus::from_signs(q);
}

}  // namespace

TEST_CASE("sl2 structure constants") {
  auto g = sl(2);
  const auto& a = g.real.alg;
  REQUIRE(a.dim() == 3);
  size_t e = find(a, "e12"), f = find(a, "e21"), h = find(a, "h1");
  CHECK(a.bracket_basis(e, f) == term(h, 1));
  CHECK(a.bracket_basis(h, e) == term(e, 2));
  CHECK(a.bracket_basis(h, f) == term(f, -2));
  CHECK(a.form_basis(e, f) == 4);
  CHECK(a.form_basis(h, h) == 8);
  CHECK(structure_report(a).all());
  CHECK(g.real.cartan.size() == 1);
}

TEST_CASE("form on sl_n is the Killing form") {
  for (int n = 2; n <= 4; ++n) {
    auto g = sl(n);
    const auto& a = g.real.alg;
    CHECK(a.dim() == size_t(n * n - 1));
    CHECK(structure_report(a).all());
    for (size_t x = 0; x < a.dim(); ++x)
      for (size_t y = 0; y < a.dim(); ++y) CHECK(a.form_basis(x, y) == trace(ad(a, x) * ad(a, y)));
  }
}

TEST_CASE("loop and affine algebras of sl2") {
  auto g = sl(2);
  auto aff = affinize(g.real, 2);
  const auto& a = aff.alg;
  CHECK(a.dim() == 5 * 3 + 2);
  size_t e1 = find(a, "e12 (x) t^1"), f1 = find(a, "e21 (x) t^-1"), h0 = find(a, "h1 (x) t^0");
  size_t c = find(a, "c"), d = find(a, "d");
  // [e (x) t, f (x) t^-1] = h + (e, f) c
  CHECK(a.bracket_basis(e1, f1) == Sparse<Rational>{{h0, Rational(1)}, {c, Rational(4)}});
  CHECK(a.bracket_basis(d, e1) == term(e1, 1));
  CHECK(a.form_basis(c, d) == 1);
  CHECK_FALSE(a.bracket_defined(e1, find(a, "e12 (x) t^2")));
  CHECK(structure_report(a).all());
  CHECK(aff.cartan.size() == 3);

  auto l = loop(g.real, 1);
  CHECK(l.alg.dim() == 9);
  CHECK(l.alg.bracket_basis(find(l.alg, "e12 (x) t^1"), find(l.alg, "e21 (x) t^-1")) ==
        term(find(l.alg, "h1 (x) t^0"), 1));
  CHECK(structure_report(l.alg).all());
}

TEST_CASE("automorphisms of sl_n") {
  auto g = sl(2);
  auto omega = chevalley(g);
  CHECK(check_automorphism(g.real, omega).all());
  size_t e = find(g.real.alg, "e12"), f = find(g.real.alg, "e21");
  CHECK(omega.matrix(f, e) == -1);
  auto g3 = sl(3);
  CHECK(check_automorphism(g3.real, minus_star(g3)).all());
  CHECK(check_automorphism(g3.real, chevalley(g3)).all());
  RatMatrix p(3, 3, Rational(0));
  p(1, 0) = p(2, 1) = p(0, 2) = 1;
  auto cyc = conjugation(g3, p, 3);
  auto rep = check_automorphism(g3.real, cyc);
  CHECK(rep.period.holds);
  CHECK(rep.bracket.holds);
  CHECK(rep.form.holds);
  CHECK(rep.cartan.holds);
  auto wrong = omega;
  wrong.period = 3;
  CHECK_FALSE(check_automorphism(g.real, wrong).period.holds);
}

TEST_CASE("toroidal sl2 with tau mu") {
  auto g = sl(2);
  auto cur = current_algebra(g.real, 1, 2, true);
  CHECK(cur.real.alg.dim() == 5 * 3 + 2);
  CHECK(structure_report(cur.real.alg).all());
  auto s = toroidal_automorphism<Rational>(cur, sl2_tau(g), {1}, 2);
  CHECK(check_automorphism(cur.real, s).all());
  // e (x) t -> -(-1) e (x) t
  size_t e1 = find(cur.real.alg, "e12 t^(1)");
  CHECK(s.matrix(e1, e1) == 1);
  auto aff = affinize(cur.real, 2);
  CHECK(structure_report(aff.alg).all());
}

TEST_CASE("sl_n over the quantum torus") {
  for (int n = 2; n <= 3; ++n) {
    auto k = coordinated_sl(n, minus_one_torus(2), 1, Rational(1), true);
    CHECK(structure_report(k.real.alg).all());
    auto s = minus_star(k);
    CHECK(check_automorphism(k.real, s).all());
  }
  // in degree (1, 1) the identity matrix is a commutator, so the diagonal is full
  auto k = coordinated_sl(2, minus_one_torus(2), 1, Rational(1), false);
  CHECK_NOTHROW(find(k.real.alg, "e11 t^(1,1)"));
  CHECK_NOTHROW(find(k.real.alg, "h1 t^(0,0)"));
  auto big = coordinated_sl(2, minus_one_torus(2), 2, Rational(1), false);
  CHECK_NOTHROW(find(big.real.alg, "h1 t^(2,0)"));
  CHECK_NOTHROW(find(big.real.alg, "e11 t^(1,0)"));
}
