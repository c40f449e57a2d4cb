#include "eala/gcm.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace eala::gcm {

GCM GCM::create(std::vector<std::vector<long>> entries) {
  const size_t n = entries.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "GCM: empty matrix");
  for (const auto& row : entries)
    if (row.size() != n) fail(ErrorCode::NotSquare, "GCM: matrix is not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j && entries[i][j] != 2) fail(ErrorCode::InvalidArgument, "GCM: diagonal entry is not 2");
      if (i != j && entries[i][j] > 0) fail(ErrorCode::InvalidArgument, "GCM: positive off-diagonal entry");
      if (i != j && (entries[i][j] == 0) != (entries[j][i] == 0))
        fail(ErrorCode::InvalidArgument, "GCM: a_ij = 0 but a_ji != 0 at (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ")");
    }
  GCM g;
  g.a_ = std::move(entries);
  return g;
}

RatMatrix GCM::rational() const {
  RatMatrix m(size(), size(), Rational(0));
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j) m(i, j) = a_[i][j];
  return m;
}

GCM GCM::transpose() const {
  auto t = a_;
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j) t[i][j] = a_[j][i];
  return create(std::move(t));
}

Marks validate_affine(const GCM& a) {
  auto ker = kernel(a.rational());
  if (ker.size() != 1)
    fail(ErrorCode::NotAffine, "not affine: kernel has dimension " + std::to_string(ker.size()));
  RatVector v = ker[0];
  if (sgn(v[0]) < 0) v = vneg(v);
  for (const auto& x : v)
    if (sgn(x) <= 0) fail(ErrorCode::NotAffine, "not affine: kernel generator is not positive");
  mpz_class den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class num = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  Marks m;
  for (const auto& x : v) m.a.push_back(to_long(Rational(x.get_num() * (den / x.get_den()) / g)));
  return m;
}

std::vector<Rational> symmetrizer(const GCM& a) {
  const size_t n = a.size();
  std::vector<std::optional<Rational>> s(n);
  for (size_t start = 0; start < n; ++start) {
    if (s[start]) continue;
    s[start] = Rational(1);
    std::deque<size_t> queue{start};
    while (!queue.empty()) {
      size_t i = queue.front();
      queue.pop_front();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || a(i, j) == 0) continue;
        Rational sj = *s[i] * a(i, j) / a(j, i);
        if (!s[j]) {
          s[j] = sj;
          queue.push_back(j);
        } else if (*s[j] != sj) {
          fail(ErrorCode::NotSymmetrizable, "GCM is not symmetrizable");
        }
      }
    }
  }
  Rational least = *s[0];
  for (const auto& x : s) least = std::min(least, *x);
  std::vector<Rational> out;
  for (const auto& x : s) out.push_back(*x / least);
  return out;
}

RatMatrix lattice_form(const GCM& a) {
  auto s = symmetrizer(a);
  RatMatrix b(a.size(), a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) b(i, j) = s[i] * a(i, j);
  return b;
}

DiagramAutomorphism make_automorphism(const GCM& a, std::vector<int> perm) {
  const size_t n = a.size();
  if (perm.size() != n) fail(ErrorCode::InvalidAutomorphism, "diagram automorphism has the wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < n; ++i)
    if (sorted[i] != static_cast<int>(i)) fail(ErrorCode::InvalidAutomorphism, "diagram automorphism is not a permutation");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a(perm[i], perm[j]) != a(i, j))
        fail(ErrorCode::InvalidAutomorphism, "permutation does not preserve the Cartan matrix");
  DiagramAutomorphism s{std::move(perm), 1};
  std::vector<int> cur = s.perm;
  auto is_id = [&](const std::vector<int>& p) {
    for (size_t i = 0; i < n; ++i)
      if (p[i] != static_cast<int>(i)) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (size_t i = 0; i < n; ++i) cur[i] = s.perm[cur[i]];
    ++s.period;
  }
  return s;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const GCM& a) {
  const size_t n = a.size();
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(size_t)> extend = [&](size_t i) {
    if (i == n) {
      out.push_back(make_automorphism(a, perm));
      return;
    }
    for (size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (size_t j = 0; j <= i && ok; ++j) {
        size_t pj = (j == i) ? c : perm[j];
        ok = a(c, pj) == a(i, j) && a(pj, c) == a(j, i);
      }
      if (!ok) continue;
      perm[i] = static_cast<int>(c);
      used[c] = true;
      extend(i + 1);
      used[c] = false;
    }
  };
  extend(0);
  return out;
}

bool is_transitive(const DiagramAutomorphism& s) {
  const size_t n = s.perm.size();
  std::vector<bool> seen(n, false);
  size_t i = 0, count = 0;
  while (!seen[i]) {
    seen[i] = true;
    ++count;
    i = s.perm[i];
  }
  return count == n;
}

RatMatrix lattice_action(const DiagramAutomorphism& s) {
  const size_t n = s.perm.size();
  RatMatrix m(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i) m(s.perm[i], i) = 1;
  return m;
}

Theorem48Verdict theorem_4_8_verdict(const GCM& a, const DiagramAutomorphism& s) {
  validate_affine(a);
  make_automorphism(a, s.perm);
  if (is_transitive(s)) return {true, false, std::nullopt};
  return {false, true, 2};
}

std::vector<RatVector> positive_real_roots(const GCM& a, long max_height) {
  const size_t n = a.size();
  std::set<RatVector> seen;
  std::deque<RatVector> queue;
  for (size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RatVector b = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < n; ++i) {
      // r_i(b) = b - <b, alpha_i^vee> alpha_i with <alpha_j, alpha_i^vee> = a_ij
      Rational c(0);
      for (size_t j = 0; j < n; ++j) c += a(i, j) * b[j];
      if (is_zero(c)) continue;
      RatVector w = b;
      w[i] -= c;
      if (sgn(w[i]) < 0) continue;
      Rational height(0);
      for (const auto& x : w) height += x;
      if (height > max_height) continue;
      if (seen.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return std::vector<RatVector>(seen.begin(), seen.end());
}

namespace {

std::vector<ears::Coset> real_cosets(const GCM& a, const Marks& marks, size_t node, int bound) {
  long ht = std::accumulate(marks.a.begin(), marks.a.end(), 0L);
  RatVector delta;
  for (long x : marks.a) delta.emplace_back(x);
  std::map<RatVector, std::set<Rational>> by_key;
  for (const auto& pos : positive_real_roots(a, bound * ht)) {
    for (const RatVector& r : {pos, vneg(pos)}) {
      Rational c = r[node];  // mark of `node` is 1
      by_key[vsub(r, scale(c, delta))].insert(c);
    }
  }
  std::vector<ears::Coset> out;
  for (const auto& [key, values] : by_key) {
    if (values.size() < 2)
      fail(ErrorCode::UnstableBound, "affine root datum: bound " + std::to_string(bound) +
                                         " too small to infer a progression for " + to_string(key));
    std::vector<Rational> v(values.begin(), values.end());
    Rational step = v[1] - v[0];
    for (size_t i = 2; i < v.size(); ++i)
      if (v[i] - v[i - 1] != step)
        fail(ErrorCode::UnstableBound, "affine root datum: values along delta over " + to_string(key) +
                                           " are not an arithmetic progression");
    if (!is_integer(step)) fail(ErrorCode::Internal, "affine root datum: non-integral modulus");
    out.push_back({key, {{v[0], to_long(step)}}});
  }
  return out;
}

}  // namespace

ears::RootDatum affine_root_datum(const GCM& a, int bound) {
  if (bound < 2) fail(ErrorCode::InvalidArgument, "affine root datum: bound must be at least 2");
  Marks marks = validate_affine(a);
  RatMatrix form = lattice_form(a);
  size_t node = a.size();
  for (size_t i = 0; i < a.size() && node == a.size(); ++i)
    if (marks.a[i] == 1) node = i;
  if (node == a.size()) fail(ErrorCode::Internal, "affine root datum: no node with mark 1");
  RatVector delta;
  for (long x : marks.a) delta.emplace_back(x);

  auto build = [&](int b) {
    auto cosets = real_cosets(a, marks, node, b);
    cosets.push_back({RatVector(a.size(), Rational(0)), {{Rational(0), 1}}});
    return ears::RootDatum::create(form, cosets, {delta});
  };
  ears::RootDatum d = build(bound);
  ears::RootDatum next = build(bound + 1);
  if (d.cosets() != next.cosets())
    fail(ErrorCode::UnstableBound, "affine root datum: progressions change between bound " + std::to_string(bound) +
                                       " and " + std::to_string(bound + 1) + "; use a larger bound");
  return d;
}

// ---- curated list ----------------------------------------------------------

namespace {

using Entries = std::vector<std::vector<long>>;

Entries blank(size_t n) {
  Entries a(n, std::vector<long>(n, 0));
  for (size_t i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

void link(Entries& a, size_t i, size_t j, long aij = -1, long aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

// Nodes 0..l; chain 1..l as in the finite diagram.
Entries untwisted_A(size_t l) {
  if (l == 1) return {{2, -2}, {-2, 2}};
  Entries a = blank(l + 1);
  for (size_t i = 0; i < l + 1; ++i) link(a, i, (i + 1) % (l + 1));
  return a;
}

Entries untwisted_B(size_t l) {
  Entries a = blank(l + 1);
  for (size_t i = 1; i + 1 < l; ++i) link(a, i, i + 1);
  link(a, l - 1, l, -1, -2);  // alpha_l short
  link(a, 0, 2);
  return a;
}

Entries untwisted_C(size_t l) {
  Entries a = blank(l + 1);
  for (size_t i = 1; i + 1 < l; ++i) link(a, i, i + 1);
  link(a, l - 1, l, -2, -1);  // alpha_l long
  link(a, 0, 1, -1, -2);      // alpha_0 long
  return a;
}

Entries untwisted_D(size_t l) {
  Entries a = blank(l + 1);
  for (size_t i = 1; i + 1 <= l - 1; ++i) link(a, i, i + 1);
  link(a, l - 2, l);
  link(a, 0, 2);
  return a;
}

Entries untwisted_E(size_t l) {
  Entries a = blank(l + 1);
  link(a, 1, 3);
  link(a, 2, 4);
  for (size_t i = 3; i < l; ++i) link(a, i, i + 1);
  if (l == 6) link(a, 0, 2);
  if (l == 7) link(a, 0, 1);
  if (l == 8) link(a, 0, 8);
  return a;
}

Entries untwisted_F4() {
  Entries a = blank(5);
  link(a, 0, 1);
  link(a, 1, 2);
  link(a, 2, 3, -1, -2);  // alpha_3 short
  link(a, 3, 4);
  return a;
}

Entries untwisted_G2() {
  Entries a = blank(3);
  link(a, 0, 2);  // alpha_0 attached to the long root
  link(a, 1, 2, -3, -1);     // alpha_1 short
  return a;
}

// Chain 0..l with three root lengths increasing along it.
Entries twisted_A_even(size_t l) {
  if (l == 1) return {{2, -4}, {-1, 2}};
  Entries a = blank(l + 1);
  link(a, 0, 1, -2, -1);
  for (size_t i = 1; i + 1 < l; ++i) link(a, i, i + 1);
  link(a, l - 1, l, -2, -1);
  return a;
}

Entries transposed(const Entries& e) {
  Entries t = e;
  for (size_t i = 0; i < e.size(); ++i)
    for (size_t j = 0; j < e.size(); ++j) t[i][j] = e[j][i];
  return t;
}

}  // namespace

std::vector<NamedGCM> curated_affine(size_t max_nodes) {
  std::vector<std::pair<std::string, Entries>> all;
  auto add = [&](std::string name, Entries e) {
    if (e.size() <= max_nodes) all.emplace_back(std::move(name), std::move(e));
  };
  auto s = [](char f, size_t l, int twist) { return std::string(1, f) + std::to_string(l) + "(" + std::to_string(twist) + ")"; };
  for (size_t l = 1; l <= 8; ++l) add(s('A', l, 1), untwisted_A(l));
  for (size_t l = 3; l <= 8; ++l) add(s('B', l, 1), untwisted_B(l));
  for (size_t l = 2; l <= 8; ++l) add(s('C', l, 1), untwisted_C(l));
  for (size_t l = 4; l <= 8; ++l) add(s('D', l, 1), untwisted_D(l));
  for (size_t l = 6; l <= 8; ++l) add(s('E', l, 1), untwisted_E(l));
  add("F4(1)", untwisted_F4());
  add("G2(1)", untwisted_G2());
  for (size_t l = 1; l <= 8; ++l) add(s('A', 2 * l, 2), twisted_A_even(l));
  for (size_t l = 3; l <= 8; ++l) add(s('A', 2 * l - 1, 2), transposed(untwisted_B(l)));
  for (size_t l = 2; l <= 8; ++l) add(s('D', l + 1, 2), transposed(untwisted_C(l)));
  add("E6(2)", transposed(untwisted_F4()));
  add("D4(3)", transposed(untwisted_G2()));

  std::vector<NamedGCM> out;
  for (auto& [name, e] : all) {
    GCM g = GCM::create(std::move(e));
    validate_affine(g);
    out.push_back({name, std::move(g)});
  }
  return out;
}

}  // namespace eala::gcm
