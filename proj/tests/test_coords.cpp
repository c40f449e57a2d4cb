#include "doctest.h"
#include "eala/coords.hpp"

using namespace eala;
using namespace eala::coords;

namespace {

using T = TorusElement<Rational>;

T mono(Exponent p, long c = 1) { return T::monomial(p, Rational(c)); }

QuantumTorus minus_one_torus(int nu) {
  std::vector<std::vector<long>> q(nu, std::vector<long>(nu, 1));
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nu; ++j)
      if (i != j) q[i][j] = -1;
  return QuantumTorus::from_signs(q);
}

std::vector<Exponent> exponents(int nu, long r) {
  std::vector<Exponent> out;
  Exponent p(nu, -r);
  while (true) {
    out.push_back(p);
    int i = nu - 1;
    while (i >= 0 && p[i] == r) p[i--] = -r;
    if (i < 0) return out;
    ++p[i];
  }
}

}  // namespace

TEST_CASE("quantum torus validation") {
  CHECK_NOTHROW(QuantumTorus::create({{0, 1}, {1, 0}}, 2));
  CHECK_THROWS_AS(QuantumTorus::create({{1, 0}, {0, 0}}, 2), Error);
  CHECK_THROWS_AS(QuantumTorus::create({{0, 1}, {1, 0}}, 3), Error);
  CHECK_THROWS_AS(QuantumTorus::from_signs({{1, 2}, {2, 1}}), Error);
  CHECK(QuantumTorus::commutative(3).commutative_torus());
  CHECK_FALSE(minus_one_torus(2).commutative_torus());
}

TEST_CASE("multiplication with q12 = -1") {
  auto t = minus_one_torus(2);
  // t2 t1 = q21 t1 t2 = -t^(1,1)
  CHECK(qt_mul(t, mono({0, 1}), mono({1, 0})) == mono({1, 1}, -1));
  CHECK(qt_mul(t, mono({1, 0}), mono({0, 1})) == mono({1, 1}));
  CHECK(qt_mul(t, mono({1, 0}), mono({-1, 0})) == mono({0, 0}));
  CHECK(epsilon(qt_mul(t, mono({0, 1}), mono({0, -1})), Rational(0)) == 1);
  CHECK(epsilon(mono({1, 0}), Rational(0)) == 0);
}

TEST_CASE("associativity and trace property on a box") {
  for (int nu = 1; nu <= 3; ++nu) {
    auto t = minus_one_torus(nu);
    auto box = exponents(nu, nu == 3 ? 1 : 2);
    for (const auto& p : box)
      for (const auto& q : box) {
        auto pq = qt_mul(t, mono(p), mono(q));
        auto qp = qt_mul(t, mono(q), mono(p));
        CHECK(epsilon(pq, Rational(0)) == epsilon(qp, Rational(0)));
        for (const auto& r : box) CHECK(qt_mul(t, pq, mono(r)) == qt_mul(t, mono(p), qt_mul(t, mono(q), mono(r))));
      }
  }
}

TEST_CASE("reversal is an involutive anti-automorphism") {
  auto t = minus_one_torus(2);
  CHECK(reversal(t, mono({1, 1})) == mono({1, 1}, -1));
  CHECK(reversal(t, mono({1, 0})) == mono({1, 0}));
  for (const auto& p : exponents(2, 2)) {
    CHECK(reversal(t, reversal(t, mono(p))) == mono(p));
    for (const auto& q : exponents(2, 2))
      CHECK(reversal(t, qt_mul(t, mono(p), mono(q))) == qt_mul(t, reversal(t, mono(q)), reversal(t, mono(p))));
  }
  auto cube = QuantumTorus::create({{0, 1}, {2, 0}}, 3);
  CHECK_THROWS_AS(reversal(cube, mono({1, 1})), Error);
}

TEST_CASE("matrix star") {
  auto t = minus_one_torus(2);
  const size_t n = 3;
  auto unit = [&](size_t i, size_t j, Exponent p) {
    TorusMatrix<Rational> m(n, std::vector<T>(n));
    m[i][j] = mono(p);
    return m;
  };
  // e_12 t^p -> reversal(t^p) e_{23}
  auto s = matrix_star(t, unit(0, 1, {1, 1}));
  CHECK(s[1][2] == mono({1, 1}, -1));
  TorusMatrix<Rational> id(n, std::vector<T>(n));
  for (size_t i = 0; i < n; ++i) id[i][i] = mono({0, 0});
  CHECK(matrix_star(t, id) == id);
  auto a = unit(0, 1, {1, 0}), b = unit(1, 2, {0, 1});
  a[2][0] = mono({0, -1}, 3);
  b[0][0] = mono({1, 1}, 2);
  CHECK(matrix_star(t, matrix_mul(t, a, b)) == matrix_mul(t, matrix_star(t, b), matrix_star(t, a)));
}

TEST_CASE("cyclotomic coefficients") {
  auto t = QuantumTorus::create({{0, 1}, {2, 0}}, 3);
  using C = TorusElement<Cyclotomic>;
  const Cyclotomic z = Cyclotomic::zero(3);
  auto m = [&](Exponent p) { return C::monomial(p, one_like(z)); };
  // t2 t1 = zeta^2 t1 t2
  auto lhs = qt_mul(t, m({0, 1}), m({1, 0}));
  CHECK(lhs == C::monomial({1, 1}, zeta_power(3, 2)));
  CHECK_THROWS_AS(root_of_unity<Rational>(3, 1, Rational(0)), Error);
  CHECK_THROWS_AS(qt_mul(t, C::monomial({0, 1}, Cyclotomic::one(4)), C::monomial({1, 0}, Cyclotomic::one(4))), Error);
}
