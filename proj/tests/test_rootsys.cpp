#include "doctest.h"
#include "eala/rootsys.hpp"

using namespace eala;
using namespace eala::rootsys;

namespace {

// Classical number of nonzero roots, independent of the construction.
size_t table_count(const TypeLabel& t) {
  const size_t n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1);
    case Family::B:
    case Family::C: return 2 * n * n;
    case Family::D: return 2 * n * (n - 1);
    case Family::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    case Family::BC: return 2 * n * n + 2 * n;
  }
  return 0;
}

std::vector<TypeLabel> all_labels(int max_rank) {
  std::vector<TypeLabel> out;
  for (int r = 1; r <= max_rank; ++r)
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G, Family::BC}) {
      TypeLabel t{f, r};
      if (t.admissible()) out.push_back(t);
    }
  return out;
}

}  // namespace

TEST_CASE("labels") {
  CHECK(TypeLabel::parse("BC3").family == Family::BC);
  CHECK(TypeLabel::parse("E8").rank == 8);
  CHECK_THROWS_AS(TypeLabel::parse("E5"), Error);
  CHECK_THROWS_AS(TypeLabel::parse("F3"), Error);
  CHECK_THROWS_AS(TypeLabel::parse("X2"), Error);
  CHECK(TypeLabel::parse("C2") == TypeLabel::parse("B2"));
  CHECK(TypeLabel::parse("D3") == TypeLabel::parse("A3"));
  CHECK(TypeLabel::parse("B1") == TypeLabel::parse("A1"));
  CHECK(TypeLabel::parse("BC1") != TypeLabel::parse("A1"));
  CHECK(TypeLabel::parse("C3") != TypeLabel::parse("B3"));
}

TEST_CASE("build_finite small cases") {
  auto a1 = build_finite({Family::A, 1});
  CHECK(a1.roots().size() == 3);
  CHECK(a1.pair(a1.roots()[1], a1.roots()[1]) == 2);
  CHECK(build_finite({Family::A, 2}).roots().size() == 7);
  auto bc1 = build_finite({Family::BC, 1});
  REQUIRE(bc1.roots().size() == 5);
  // {0, +-e, +-2e}
  RatVector e = bc1.roots()[3];
  CHECK(bc1.contains(scale(Rational(2), e)));
  CHECK(bc1.contains(vneg(e)));
  CHECK_THROWS_AS(build_finite({Family::E, 5}), Error);
}

TEST_CASE("build_finite matches the classical tables and recognition inverts it") {
  for (const auto& t : all_labels(8)) {
    CAPTURE(t.to_string());
    auto sys = build_finite(t);
    CHECK(sys.nonzero_roots().size() == table_count(t));
    CHECK(recognize_type(sys.roots(), sys.form()) == t);
  }
}

TEST_CASE("reflections") {
  auto a2 = build_finite({Family::A, 2});
  RatVector a = rat_vector({1, 0}), b = rat_vector({0, 1});
  CHECK(reflect(a2, a, a) == vneg(a));
  CHECK(reflect(a2, a, b) == rat_vector({1, 1}));
  auto b2 = build_finite({Family::B, 2});
  for (const auto& x : b2.nonzero_roots())
    for (const auto& y : b2.nonzero_roots()) {
      RatVector w = reflect(b2, x, y);
      CHECK(b2.contains(w));
      CHECK(reflect(b2, x, w) == y);
      CHECK(b2.pair(w, w) == b2.pair(y, y));
      Rational cartan = 2 * b2.pair(y, x) / b2.pair(x, x);
      CHECK(cartan.get_den() == 1);
    }
  RatMatrix g = rat_matrix({{2, 0}, {0, 2}});
  CHECK(reflect(g, rat_vector({1, 0}), rat_vector({0, 1})) == rat_vector({0, 1}));
  CHECK_THROWS_AS(reflect(rat_matrix({{0}}), rat_vector({1}), rat_vector({1})), Error);
}

TEST_CASE("root system validation") {
  // orthogonal union A1 x A1 is decomposable
  std::vector<RatVector> split = {rat_vector({0, 0}), rat_vector({1, 0}), rat_vector({-1, 0}),
                                  rat_vector({0, 1}), rat_vector({0, -1})};
  RatMatrix id2 = rat_matrix({{2, 0}, {0, 2}});
  auto why = root_system_violation(split, id2);
  REQUIRE(why.has_value());
  CHECK(why->find("decomposable") != std::string::npos);
  CHECK_THROWS_AS(FiniteRootSystem::create(split, id2), Error);
  CHECK_THROWS_AS(recognize_type(split, id2), Error);
  // not closed under negation
  CHECK(root_system_violation({rat_vector({1})}, rat_matrix({{2}})).has_value());
}

TEST_CASE("projections") {
  auto a2 = build_finite({Family::A, 2});
  CHECK(project(a2, {rat_vector({1, 0}), rat_vector({0, 1})}) == a2.nonzero_roots());

  // fixed line of the swap alpha <-> beta
  std::vector<RatVector> y = {rat_vector({1, 1})};
  auto img = project(a2, y);
  std::vector<RatVector> expected = {scale(Rational(1, 2), rat_vector({1, 1})), scale(Rational(-1, 2), rat_vector({1, 1})),
                                     rat_vector({1, 1}), rat_vector({-1, -1})};
  std::sort(expected.begin(), expected.end());
  CHECK(img == expected);

  Projection p(a2.form(), y);
  for (const auto& x : a2.nonzero_roots()) {
    CHECK(p.apply(p.apply(x)) == p.apply(x));
    for (const auto& z : a2.nonzero_roots()) CHECK(a2.pair(p.apply(x), z) == a2.pair(x, p.apply(z)));
  }
  auto lemma = check_projection_lemma(a2, y);
  CHECK(lemma.part_i);
  CHECK(lemma.part_ii);
  CHECK(lemma.visible_closure);
  CHECK(lemma.witnesses.size() == 6);

  auto a1 = build_finite({Family::A, 1});
  auto l1 = check_projection_lemma(a1, {rat_vector({1})});
  CHECK((l1.part_i && l1.part_ii));
  CHECK_THROWS_AS(Projection(a2.form(), {rat_vector({0, 0})}), Error);
}

TEST_CASE("recognition up to scaling and embedding") {
  // BC1 given directly
  std::vector<RatVector> bc = {rat_vector({0}), rat_vector({1}), rat_vector({-1}), rat_vector({2}), rat_vector({-2})};
  CHECK(recognize_type(bc, rat_matrix({{3}})) == TypeLabel{Family::BC, 1});
  // A2 embedded in the plane x+y+z=0 of Q^3 with the standard form, scaled by 5
  std::vector<RatVector> a2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        RatVector v(3, Rational(0));
        v[i] = 1;
        v[j] = -1;
        a2.push_back(v);
      }
  RatMatrix five = rat_matrix({{5, 0, 0}, {0, 5, 0}, {0, 0, 5}});
  CHECK(recognize_type(a2, five) == TypeLabel{Family::A, 2});
}
