#include "doctest.h"
#include "eala/autoroot.hpp"
#include "eala/catalog.hpp"

using namespace eala;
using namespace eala::autoroot;
using rootsys::Family;
using rootsys::TypeLabel;

namespace {

RatVector v(std::initializer_list<long> xs) {
  RatVector out;
  for (long x : xs) out.push_back(Rational(x));
  return out;
}

// alpha_i -> alpha_{n+1-i} on simple-root coordinates of A_n.
RatMatrix a_flip(size_t n) {
  RatMatrix m(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i) m(n - 1 - i, i) = 1;
  return m;
}

RatMatrix minus_one() {
  RatMatrix m(1, 1, Rational(0));
  m(0, 0) = -1;
  return m;
}

TypeLabel expected_quantum_type(int l) {
  return l % 2 == 1 ? TypeLabel{Family::C, (l + 1) / 2} : TypeLabel{Family::BC, l / 2};
}

}  // namespace

TEST_CASE("automorphism validation") {
  auto a2 = catalog::finite_datum({Family::A, 2});
  CHECK_NOTHROW(RootAutomorphism::create(a_flip(2), 2, a2));
  try {
    RootAutomorphism::create(a_flip(2), 3, a2);
    FAIL("wrong period accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidAutomorphism);
  }
  RatMatrix stretch = catalog::identity(2);
  stretch(0, 0) = -1;
  CHECK_THROWS_AS(RootAutomorphism::create(stretch, 2, a2), Error);
  // moving delta is rejected
  auto t = catalog::toroidal_datum({Family::A, 1}, 1);
  RatMatrix neg(2, 2, Rational(0));
  neg(0, 0) = -1;
  neg(1, 1) = -1;
  CHECK_THROWS_AS(RootAutomorphism::create(neg, 2, t), Error);
}

TEST_CASE("pi and sigma length") {
  auto a2 = catalog::finite_datum({Family::A, 2});
  auto s = RootAutomorphism::create(a_flip(2), 2, a2);
  CHECK(pi(s, v({1, 0})) == RatVector{Rational(1, 2), Rational(1, 2)});
  CHECK(pi(s, v({1, 1})) == v({1, 1}));
  CHECK(sigma_length(s, a2, v({1, 0})) == 2);
  CHECK(sigma_length(s, a2, v({1, 1})) == 1);
  CHECK_THROWS_AS(sigma_length(s, a2, v({2, 0})), Error);
}

TEST_CASE("transitive rotations project every simple root to delta / (l+1)") {
  for (const auto& n : gcm::curated_affine(9)) {
    if (n.name.front() != 'A' || n.name.find("(1)") == std::string::npos) continue;
    const size_t nodes = n.matrix.size();
    auto d = gcm::affine_root_datum(n.matrix);
    std::vector<int> rot(nodes);
    for (size_t i = 0; i < nodes; ++i) rot[i] = static_cast<int>((i + 1) % nodes);
    auto da = gcm::make_automorphism(n.matrix, rot);
    auto s = RootAutomorphism::create(gcm::lattice_action(da), da.period, d);
    RatVector expect(nodes, Rational(1, static_cast<long>(nodes)));
    for (size_t j = 0; j < nodes; ++j) {
      RatVector a(nodes, Rational(0));
      a[j] = 1;
      CHECK(pi(s, a) == expect);
    }
    auto r = affinization_report(s, d);
    CHECK_FALSE(r.criterion_3_64);
    CHECK(r.verdict == "empty_nonisotropic");
  }
}

TEST_CASE("criterion and condition (iv) for sigma = -1 on A1") {
  auto a1 = catalog::finite_datum({Family::A, 1});
  auto s = RootAutomorphism::create(minus_one(), 2, a1);
  CHECK_FALSE(criterion_3_64(s, a1).holds);
  auto iv = condition_iv(s, a1);
  CHECK_FALSE(iv.holds);
  REQUIRE(iv.witness);
  CHECK(!is_zero_vector(*iv.witness));
  auto c = corollary_3_65_verdict(s, a1);
  CHECK(c.status == "not_tame_eala");
  CHECK_THROWS_AS(affinized_bar_roots(s, a1), Error);
}

TEST_CASE("non-prime periods leave the corollary undetermined") {
  auto a1 = catalog::finite_datum({Family::A, 1});
  // sigma = -1 listed with period 4: condition (iv) still fails
  auto s = RootAutomorphism::create(minus_one(), 4, a1);
  CHECK(corollary_3_65_verdict(s, a1).status == "undetermined");
}

TEST_CASE("quantum torus flip") {
  for (int nu = 1; nu <= 2; ++nu)
    for (int l = 1; l <= 6; ++l) {
      CAPTURE(l);
      CAPTURE(nu);
      auto d = catalog::quantum_datum(l, nu);
      auto s = RootAutomorphism::create(catalog::quantum_flip(l, nu), 2, d);
      auto r = affinization_report(s, d);
      CHECK(r.criterion_3_64);
      REQUIRE(r.type);
      CHECK(*r.type == expected_quantum_type(l));
      CHECK(*r.nullity == nu + 1);
      CHECK(r.nondegenerate);
      CHECK(r.corollary.status == "tame_eala");
    }
  // pi(eps_1 - eps_2) = (eps_1 - eps_2 + eps_l - eps_{l+1}) / 2 for l = 4
  auto s = RootAutomorphism::create(catalog::quantum_flip(4, 1), 2, catalog::quantum_datum(4, 1));
  RatVector p = pi(s, v({1, -1, 0, 0, 0, 0}));
  CHECK(p == RatVector{Rational(1, 2), Rational(-1, 2), 0, Rational(1, 2), Rational(-1, 2), 0});
}

TEST_CASE("identity automorphism adds one to the nullity") {
  std::vector<ears::RootDatum> data{
      catalog::finite_datum({Family::A, 1}),
      catalog::finite_datum({Family::A, 2}),
      gcm::affine_root_datum(gcm::GCM::create({{2, -2}, {-2, 2}})),
      gcm::affine_root_datum(gcm::GCM::create({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})),
      catalog::toroidal_datum({Family::A, 1}, 2),
  };
  for (const auto& d : data) {
    auto s = RootAutomorphism::create(catalog::identity(d.dim()), 1, d);
    auto before = ears::report(d);
    auto after = ears::report(affinized_root_datum(s, d, ResidueAssignment::trivial(s, d)));
    CHECK(after.nullity == before.nullity + 1);
    CHECK(*after.type == *before.type);
    CHECK(after.ea5b);
    auto t = nondegeneracy_transfer(s, d);
    CHECK(t.holds);
    CHECK(t.affinized_radical_dim == t.fixed_radical_dim + 1);
  }
}

TEST_CASE("residue consistency") {
  auto a1 = catalog::finite_datum({Family::A, 1});
  auto s = RootAutomorphism::create(catalog::identity(1), 2, a1);
  // alpha in R_0, -alpha in R_1
  auto bad = [](const RatVector& a) { return a[0] < 0 ? std::set<long>{1} : std::set<long>{0}; };
  try {
    ResidueAssignment::from_function(s, a1, {{}, {}, {}}, bad);
    FAIL("inconsistent residues accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentResidues);
  }
  CHECK_THROWS_AS(ResidueAssignment::trivial(s, a1), Error);
}

TEST_CASE("diagram flip of A2 gives BC1 in nullity one") {
  auto a2 = catalog::finite_datum({Family::A, 2});
  auto s = RootAutomorphism::create(a_flip(2), 2, a2);
  // fixed roots carry the eigenvalue -1, moved roots and zero meet both residues
  auto fn = [&](const RatVector& a) {
    if (!is_zero_vector(a) && s.apply(a) == a) return std::set<long>{1};
    return std::set<long>{0, 1};
  };
  auto res = ResidueAssignment::from_function(s, a2, std::vector<std::vector<long>>(a2.cosets().size()), fn);
  auto tilde = affinized_root_datum(s, a2, res);
  auto r = ears::report(tilde);
  CHECK(r.nullity == 1);
  CHECK(*r.type == TypeLabel{Family::BC, 1});
  CHECK(r.ea5b);
  // long roots only at odd delta~
  auto sp = affinized_space(s, a2);
  CHECK(tilde.contains(sp.embed(v({1, 1}), 1)));
  CHECK_FALSE(tilde.contains(sp.embed(v({1, 1}), 0)));
  CHECK(tilde.contains(sp.embed(pi(s, v({1, 0})), 0)));
  CHECK(tilde.contains(sp.embed(pi(s, v({1, 0})), 1)));
}

TEST_CASE("projection lemma on fixed subspaces of diagram symmetries") {
  for (const auto& t : rootsys::canonical_labels(6)) {
    if (t.family == Family::BC) continue;
    auto sys = rootsys::build_finite(t);
    for (const auto& da : gcm::diagram_automorphisms(catalog::finite_cartan(t))) {
      CAPTURE(t.to_string());
      auto y = fixed_subspace(gcm::lattice_action(da));
      auto res = rootsys::check_projection_lemma(sys, y);
      CHECK(res.part_i);
      CHECK(res.part_ii);
      CHECK(res.visible_closure);
    }
  }
}
