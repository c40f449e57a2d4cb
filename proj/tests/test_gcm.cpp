#include <map>
#include <set>

#include "doctest.h"
#include "eala/catalog.hpp"
#include "eala/gcm.hpp"

using namespace eala;
using namespace eala::gcm;

namespace {

const NamedGCM& find(const std::vector<NamedGCM>& all, const std::string& name) {
  for (const auto& n : all)
    if (n.name == name) return n;
  FAIL("missing " << name);
  return all.front();
}

// Marks from the classical tables, nodes in the order used by curated_affine.
std::map<std::string, std::vector<long>> marks_table() {
  return {
      {"A1(1)", {1, 1}},          {"A3(1)", {1, 1, 1, 1}},         {"B3(1)", {1, 1, 2, 2}},
      {"B5(1)", {1, 1, 2, 2, 2, 2}}, {"C2(1)", {1, 2, 1}},         {"C4(1)", {1, 2, 2, 2, 1}},
      {"D4(1)", {1, 1, 2, 1, 1}},  {"D6(1)", {1, 1, 2, 2, 2, 1, 1}}, {"E6(1)", {1, 1, 2, 2, 3, 2, 1}},
      {"E7(1)", {1, 2, 2, 3, 4, 3, 2, 1}}, {"E8(1)", {1, 2, 3, 4, 6, 5, 4, 3, 2}},
      {"F4(1)", {1, 2, 3, 4, 2}},  {"G2(1)", {1, 3, 2}},           {"A2(2)", {2, 1}},
  };
}

// Bar types of the affine root systems.
std::string bar_type(const std::string& name) {
  const std::string kind = name.substr(name.find('(') + 1, 1);
  const char x = name[0];
  const int n = std::stoi(name.substr(1, name.find('(') - 1));
  if (kind == "1") return name.substr(0, name.find('('));
  if (name == "E6(2)") return "F4";
  if (name == "D4(3)") return "G2";
  if (x == 'A' && n % 2 == 0) return "BC" + std::to_string(n / 2);
  if (x == 'A') return "C" + std::to_string((n + 1) / 2);
  return "B" + std::to_string(n - 1);  // D(l+1)(2)
}

size_t factorial(size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("GCM validation") {
  CHECK_THROWS_AS(GCM::create({{2, -1}, {0, 2}}), Error);
  CHECK_THROWS_AS(GCM::create({{2, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(GCM::create({{1, -1}, {-1, 2}}), Error);
  try {
    validate_affine(catalog::finite_cartan({rootsys::Family::A, 2}));
    FAIL("finite type accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAffine);
  }
  CHECK_THROWS_AS(validate_affine(GCM::create({{2, -3}, {-3, 2}})), Error);
}

TEST_CASE("marks agree with the tables") {
  auto all = curated_affine(9);
  for (const auto& [name, expected] : marks_table()) {
    CAPTURE(name);
    CHECK(validate_affine(find(all, name).matrix).a == expected);
  }
  for (const auto& n : all) {
    CAPTURE(n.name);
    auto m = validate_affine(n.matrix);
    RatVector mv;
    for (long x : m.a) mv.push_back(x);
    CHECK(is_zero_vector(n.matrix.rational().apply(mv)));
  }
}

TEST_CASE("curated list is complete up to nine nodes") {
  auto all = curated_affine(9);
  std::set<std::string> names;
  for (const auto& n : all) names.insert(n.name);
  CHECK(names.size() == all.size());
  // A1..A8, B3..B8, C2..C8, D4..D8, E6..E8, F4, G2 untwisted;
  // A2..A16 even, A5..A15 odd, D3..D9, E6, D4 twisted.
  CHECK(all.size() == 8 + 6 + 7 + 5 + 3 + 1 + 1 + 8 + 6 + 7 + 1 + 1);
}

TEST_CASE("diagram automorphism groups") {
  auto all = curated_affine(9);
  for (int l = 1; l <= 8; ++l) {
    auto a = find(all, "A" + std::to_string(l) + "(1)").matrix;
    auto g = diagram_automorphisms(a);
    // dihedral of order 2(l+1); for l = 1 just the swap
    CHECK(g.size() == (l == 1 ? 2u : size_t(2 * (l + 1))));
    std::vector<int> id(l + 1);
    for (int i = 0; i <= l; ++i) id[i] = i;
    CHECK(g.front().perm == id);
    size_t transitive = 0;
    for (const auto& s : g) transitive += is_transitive(s);
    // rotations by a unit of Z/(l+1)
    size_t units = 0;
    for (int k = 1; k <= l + 1; ++k) {
      int x = k, y = l + 1;
      while (y) { int t = x % y; x = y; y = t; }
      units += (x == 1);
    }
    CHECK(transitive == units);
  }
  CHECK(diagram_automorphisms(find(all, "D4(1)").matrix).size() == factorial(4));
  CHECK(diagram_automorphisms(find(all, "E6(1)").matrix).size() == 6);
  CHECK(diagram_automorphisms(find(all, "E8(1)").matrix).size() == 1);
  CHECK(diagram_automorphisms(find(all, "A4(2)").matrix).size() == 1);
}

TEST_CASE("automorphisms preserve marks and the group closes") {
  for (const auto& n : curated_affine(9)) {
    CAPTURE(n.name);
    auto marks = validate_affine(n.matrix).a;
    auto g = diagram_automorphisms(n.matrix);
    std::set<std::vector<int>> perms;
    for (const auto& s : g) perms.insert(s.perm);
    for (const auto& s : g) {
      for (size_t i = 0; i < marks.size(); ++i) CHECK(marks[s.perm[i]] == marks[i]);
      for (const auto& t : g) {
        std::vector<int> st(s.perm.size());
        for (size_t i = 0; i < st.size(); ++i) st[i] = s.perm[t.perm[i]];
        CHECK(perms.count(st) == 1);
      }
      // sigma^period = id
      RatMatrix m = lattice_action(s);
      CHECK(m.pow(s.period).is_identity());
    }
  }
}

TEST_CASE("transitive diagram automorphisms empty the nonisotropic roots") {
  auto all = curated_affine(9);
  auto a2 = find(all, "A2(1)").matrix;
  for (const auto& s : diagram_automorphisms(a2)) {
    auto v = theorem_4_8_verdict(a2, s);
    CHECK(v.empty_nonisotropic == is_transitive(s));
    CHECK(v.tame_eala == !is_transitive(s));
    if (v.tame_eala) CHECK(*v.nullity == 2);
    else CHECK_FALSE(v.nullity);
  }
}

TEST_CASE("affine root data") {
  auto all = curated_affine(9);
  auto a1 = affine_root_datum(find(all, "A1(1)").matrix);
  CHECK(a1.cosets().size() == 3);
  CHECK(a1.contains({Rational(1), Rational(0)}));
  CHECK(a1.contains({Rational(3), Rational(2)}));
  CHECK(a1.contains({Rational(1), Rational(1)}));
  CHECK_FALSE(a1.contains({Rational(2), Rational(0)}));
  CHECK(affine_root_datum(find(all, "A2(1)").matrix).cosets().size() == 7);

  for (const auto& n : all) {
    CAPTURE(n.name);
    auto r = ears::report(affine_root_datum(n.matrix));
    CHECK(r.nullity == 1);
    REQUIRE(r.type);
    CHECK(*r.type == rootsys::TypeLabel::parse(bar_type(n.name)));
    CHECK(r.ea5a);
    CHECK(r.ea5b);
  }
}

TEST_CASE("positive real roots of A1(1)") {
  // alpha_0 + n delta, alpha_1 + n delta with height <= 4
  auto roots = positive_real_roots(GCM::create({{2, -2}, {-2, 2}}), 4);
  CHECK(roots.size() == 4);
}
