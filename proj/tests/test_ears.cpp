#include "doctest.h"
#include "eala/catalog.hpp"
#include "eala/ears.hpp"

using namespace eala;
using namespace eala::ears;

namespace {

RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

// {0, +-a, +-d, +-a +- 2d} on (a, d), form diag(2, 0).
RootDatum ea5b_counterexample() {
  RatMatrix form(2, 2, Rational(0));
  form(0, 0) = 2;
  auto exact = [](long z) { return std::vector<Progression>{Progression{Rational(z), 0}}; };
  std::vector<Coset> cs;
  for (long z : {-1, 0, 1}) cs.push_back({v({0, 0}), exact(z)});
  for (long s : {-1, 1})
    for (long z : {-2, 0, 2}) cs.push_back({v({s, 0}), exact(z)});
  return RootDatum::create(form, cs, {v({0, 1})});
}

}  // namespace

TEST_CASE("affine A1 as a coset datum") {
  auto d = catalog::toroidal_datum({rootsys::Family::A, 1}, 1);
  CHECK(d.cosets().size() == 3);
  auto rad = radical(d);
  REQUIRE(rad.size() == 1);
  CHECK(rad[0] == v({0, 1}));
  auto split = split_roots(d);
  REQUIRE(split.isotropic.size() == 1);
  CHECK(split.isotropic[0].progressions[0].modulus == 1);
  CHECK(split.nonisotropic.size() == 2);
  CHECK(d.contains(v({1, 7})));
  CHECK(d.contains(v({0, -3})));
  CHECK_FALSE(d.contains(v({2, 0})));
  // sample(1): 3 cosets x 3 indices
  CHECK(d.sample(1).size() == 9);

  auto r = report(d);
  CHECK(r.nullity == 1);
  REQUIRE(r.type);
  CHECK(*r.type == rootsys::TypeLabel{rootsys::Family::A, 1});
  CHECK(r.ea5a);
  CHECK(r.ea5b);
  CHECK(r.nondegenerate);
}

TEST_CASE("EA5b counterexample") {
  auto d = ea5b_counterexample();
  CHECK_FALSE(datum_violation(d));
  CHECK(check_EA5a(d));
  auto res = check_EA5b(d);
  CHECK_FALSE(res.ok);
  REQUIRE(res.failing_delta);
  // Oracle: direct scan of alpha in R^x with alpha + delta in R.
  const RatVector w = *res.failing_delta;
  CHECK((w == v({0, 1}) || w == v({0, -1})));
  for (const auto& a : d.sample(3)) {
    if (is_zero(d.pair(a, a))) continue;
    CHECK_FALSE(d.contains(vadd(a, w)));
  }
  // Removing the gap restores the axiom.
  CHECK(check_EA5b(catalog::toroidal_datum({rootsys::Family::A, 1}, 1)).ok);
}

TEST_CASE("EA5a detects decomposable data") {
  RatMatrix form(2, 2, Rational(0));
  form(0, 0) = 2;
  form(1, 1) = 2;
  auto d = RootDatum::finite({v({0, 0}), v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})}, form);
  CHECK_FALSE(check_EA5a(d));
  CHECK(check_EA5a(catalog::finite_datum({rootsys::Family::A, 2})));
}

TEST_CASE("datum validation") {
  RatMatrix indefinite(2, 2, Rational(0));
  indefinite(0, 0) = 2;
  indefinite(1, 1) = -2;
  try {
    RootDatum::finite({v({0, 0}), v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})}, indefinite);
    FAIL("indefinite form accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSemidefinite);
  }
  RatMatrix form(1, 1, Rational(0));
  form(0, 0) = 2;
  CHECK_THROWS_AS(RootDatum::finite({v({0}), v({1})}, form), Error);
}

TEST_CASE("toroidal and quantum data") {
  for (int nu = 1; nu <= 3; ++nu) {
    auto t = report(catalog::toroidal_datum({rootsys::Family::B, 2}, nu));
    CHECK(t.nullity == nu);
    CHECK(*t.type == rootsys::TypeLabel{rootsys::Family::B, 2});
    CHECK(t.ea5b);
  }
  for (int l = 1; l <= 4; ++l) {
    auto q = report(catalog::quantum_datum(l, 2));
    CHECK(q.nullity == 2);
    CHECK(*q.type == rootsys::TypeLabel{rootsys::Family::A, l});
    CHECK(q.nonisotropic_count == size_t(l * (l + 1)));
  }
}

TEST_CASE("normalization scales the least norm to 2") {
  RatMatrix form(1, 1, Rational(0));
  form(0, 0) = 6;
  auto d = RootDatum::finite({v({0}), v({1}), v({-1})}, form).normalized();
  CHECK(d.form()(0, 0) == 2);
}
