#include <complex>
#include <numeric>

#include "doctest.h"
#include "eala/exactnum.hpp"
#include "eala/linalg.hpp"

using namespace eala;

namespace {

// Numerical evaluation at exp(2 pi i / m), used only as an independent oracle.
std::complex<double> evaluate(const Cyclotomic& x) {
  const double pi = std::acos(-1.0);
  std::complex<double> z = std::polar(1.0, 2 * pi / x.order());
  std::complex<double> sum = 0, pw = 1;
  for (const auto& c : x.coeffs()) {
    sum += c.get_d() * pw;
    pw *= z;
  }
  return sum;
}

bool close(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) < 1e-9; }

RatMatrix permutation_matrix(const std::vector<int>& perm) {
  RatMatrix p(perm.size(), perm.size(), Rational(0));
  for (size_t i = 0; i < perm.size(); ++i) p(perm[i], i) = 1;
  return p;
}

}  // namespace

TEST_CASE("cyclotomic products") {
  CHECK(cyc_arith(zeta_power(2, 1), zeta_power(2, 1), CycOp::Mul) == Cyclotomic::one(2));
  // zeta_3^2 = -1 - zeta_3
  CHECK(cyc_arith(zeta_power(3, 1), zeta_power(3, 1), CycOp::Mul) ==
        Cyclotomic(3, std::vector<Rational>{-1, -1}));
  CHECK(cyc_arith(zeta_power(6, 1), zeta_power(6, 1), CycOp::Mul) ==
        Cyclotomic(6, std::vector<Rational>{-1, 1}));
  CHECK_THROWS_AS(cyc_arith(zeta_power(3, 1), zeta_power(4, 1), CycOp::Add), Error);
  try {
    cyc_arith(zeta_power(3, 1), zeta_power(4, 1), CycOp::Mul);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IncompatibleFields);
  }
}

TEST_CASE("zeta powers") {
  CHECK(zeta_power(1, 5) == Cyclotomic::one(1));
  CHECK(zeta_power(4, 2) == Cyclotomic(4, Rational(-1)));
  CHECK(zeta_power(3, -1) == Cyclotomic(3, std::vector<Rational>{-1, -1}));
  for (long m = 1; m <= 12; ++m) {
    CHECK(zeta_power(m, m) == Cyclotomic::one(m));
    for (long k = -2 * m; k <= 2 * m; ++k) {
      CHECK(zeta_power(m, k + m) == zeta_power(m, k));
      if (k % m != 0) CHECK(zeta_power(m, k) != Cyclotomic::one(m));
    }
  }
}

TEST_CASE("cyclotomic arithmetic agrees with complex evaluation") {
  const double pi = std::acos(-1.0);
  for (long m = 1; m <= 12; ++m) {
    CHECK(cyclotomic_polynomial(m).size() == static_cast<size_t>(euler_phi(m)) + 1);
    for (long j = 0; j < m; ++j)
      for (long k = 0; k < m; ++k) {
        Cyclotomic a = zeta_power(m, j) + Cyclotomic(m, Rational(j, 3));
        Cyclotomic b = zeta_power(m, k) - Cyclotomic(m, Rational(1, 2));
        CHECK(close(evaluate(a * b), evaluate(a) * evaluate(b)));
        CHECK(close(evaluate(a + b), evaluate(a) + evaluate(b)));
        if (!b.is_zero()) CHECK(close(evaluate(a / b), evaluate(a) / evaluate(b)));
      }
    CHECK(close(evaluate(zeta_power(m, 1)), std::polar(1.0, 2 * pi / m)));
  }
}

TEST_CASE("rationals stay reduced") {
  Rational x = parse_rational("6/-4");
  CHECK(x == Rational(-3, 2));
  CHECK(x.get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("kernel") {
  auto k = kernel(rat_matrix({{2, 0}, {0, 0}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == rat_vector({0, 1}));
  CHECK(kernel(RatMatrix::identity(3, Rational(0))).empty());

  RatMatrix m = rat_matrix({{1, 2, 3, 4}, {2, 4, 6, 8}, {1, 0, -1, 0}});
  auto basis = kernel(m);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) CHECK(is_zero_vector(m.apply(v)));
  CHECK(rank(RatMatrix::from_columns(basis, 4, Rational(0))) == 2);

  // symmetric input: kernel vectors are orthogonal to every column
  RatMatrix g = rat_matrix({{2, -2, 0}, {-2, 2, 0}, {0, 0, 0}});
  for (const auto& v : kernel(g))
    for (size_t j = 0; j < 3; ++j) CHECK(is_zero(bilinear(RatMatrix::identity(3, Rational(0)), v, g.col(j))));
}

TEST_CASE("fixed subspaces of permutation matrices") {
  CHECK(fixed_subspace(RatMatrix::identity(3, Rational(0))).size() == 3);
  auto swap = fixed_subspace(permutation_matrix({1, 0}));
  REQUIRE(swap.size() == 1);
  CHECK(swap[0] == rat_vector({1, 1}));
  auto cyc = fixed_subspace(permutation_matrix({1, 2, 0}));
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0] == rat_vector({1, 1, 1}));
  CHECK_THROWS_AS(fixed_subspace(RatMatrix(2, 3, Rational(0))), Error);

  for (size_t n = 1; n <= 6; ++n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      RatMatrix p = permutation_matrix(perm);
      // cycle count of the permutation is the fixed dimension
      std::vector<bool> seen(n, false);
      size_t cycles = 0;
      for (size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
      }
      auto fixed = fixed_subspace(p);
      CHECK(fixed.size() == cycles);
      RatMatrix shifted = p - RatMatrix::identity(n, Rational(0));
      CHECK(fixed.size() + rank(shifted) == n);

      long order = 1;
      while (!p.pow(order).is_identity()) ++order;
      RatVector v(n);
      for (size_t i = 0; i < n; ++i) v[i] = Rational(static_cast<long>(i * i + 1));
      RatVector avg(n, Rational(0));
      RatVector cur = v;
      for (long i = 0; i < order; ++i) {
        avg = vadd(avg, cur);
        cur = p.apply(cur);
      }
      avg = scale(Rational(1, order), avg);
      CHECK(p.apply(avg) == avg);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
