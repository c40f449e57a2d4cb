#include "eala/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace eala::rootsys {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

using RootSet = std::set<RatVector>;

std::vector<RatVector> sorted_with_zero_first(const RootSet& set, size_t dim) {
  std::vector<RatVector> out;
  RatVector zero(dim, Rational(0));
  out.push_back(zero);
  for (const auto& v : set)
    if (!is_zero_vector(v)) out.push_back(v);
  return out;
}

}  // namespace

TypeLabel TypeLabel::parse(const std::string& text) {
  TypeLabel label;
  size_t pos = 0;
  if (text.rfind("BC", 0) == 0) {
    label.family = Family::BC;
    pos = 2;
  } else if (!text.empty()) {
    static const std::map<char, Family> fams = {{'A', Family::A}, {'B', Family::B}, {'C', Family::C},
                                                {'D', Family::D}, {'E', Family::E}, {'F', Family::F},
                                                {'G', Family::G}};
    auto it = fams.find(text[0]);
    if (it == fams.end()) fail(ErrorCode::InvalidArgument, "unknown root system family in '" + text + "'");
    label.family = it->second;
    pos = 1;
  }
  if (pos >= text.size()) fail(ErrorCode::InvalidArgument, "missing rank in type label '" + text + "'");
  try {
    size_t used = 0;
    label.rank = std::stoi(text.substr(pos), &used);
    if (used != text.size() - pos) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "bad rank in type label '" + text + "'");
  }
  if (!label.admissible()) fail(ErrorCode::InvalidArgument, "inadmissible type label '" + text + "'");
  return label;
}

std::string TypeLabel::to_string() const { return family_name(family) + std::to_string(rank); }

bool TypeLabel::admissible() const {
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::BC: return rank >= 1;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

TypeLabel TypeLabel::canonical() const {
  if ((family == Family::B || family == Family::C) && rank == 1) return {Family::A, 1};
  if (family == Family::C && rank == 2) return {Family::B, 2};
  if (family == Family::D && rank == 3) return {Family::A, 3};
  return *this;
}

std::vector<TypeLabel> canonical_labels(int max_rank) {
  std::vector<TypeLabel> out;
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) out.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) out.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) out.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) out.push_back({Family::E, r});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  for (int r = 1; r <= max_rank; ++r) out.push_back({Family::BC, r});
  return out;
}

// ---- construction ----------------------------------------------------------

RatMatrix simple_root_gram(const TypeLabel& label) {
  if (!label.admissible() || label.family == Family::BC)
    fail(ErrorCode::InvalidArgument, "no simple-root Gram matrix for " + label.to_string());
  const int n = label.rank;
  RatMatrix g(n, n, Rational(0));
  auto link = [&](int i, int j, long v) { g(i, j) = v; g(j, i) = v; };
  switch (label.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case Family::B:  // long roots of norm 4, last simple root short
      for (int i = 0; i < n; ++i) g(i, i) = (i + 1 < n) ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case Family::C:  // short roots of norm 2, last simple root long
      for (int i = 0; i < n; ++i) g(i, i) = (i + 1 < n) ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      if (n >= 2) link(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case Family::E: {
      for (int i = 0; i < n; ++i) g(i, i) = 2;
      // Bourbaki numbering 1-3-4-5-...-n with 2 attached to 4 (0-based here).
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    }
    case Family::F:
      g(0, 0) = 4; g(1, 1) = 4; g(2, 2) = 2; g(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case Family::G:
      g(0, 0) = 2; g(1, 1) = 6;
      link(0, 1, -3);
      break;
    case Family::BC: break;
  }
  return g;
}

RatVector reflect(const RatMatrix& form, const RatVector& alpha, const RatVector& beta) {
  Rational aa = bilinear(form, alpha, alpha);
  if (is_zero(aa)) fail(ErrorCode::InvalidArgument, "reflection in an isotropic vector");
  Rational c = 2 * bilinear(form, beta, alpha) / aa;
  return vsub(beta, scale(c, alpha));
}

namespace {

RootSet reflection_closure(const RatMatrix& gram) {
  const size_t n = gram.rows();
  RootSet roots;
  std::deque<RatVector> queue;
  for (size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RatVector v = queue.front();
    queue.pop_front();
    for (size_t i = 0; i < n; ++i) {
      // s_i(v) = v - 2 (v, a_i)/(a_i, a_i) a_i in simple-root coordinates.
      Rational vi(0);
      for (size_t k = 0; k < n; ++k) vi += v[k] * gram(k, i);
      RatVector w = v;
      w[i] -= 2 * vi / gram(i, i);
      if (roots.insert(w).second) queue.push_back(std::move(w));
    }
  }
  return roots;
}

}  // namespace

FiniteRootSystem build_finite(const TypeLabel& label) {
  if (!label.admissible()) fail(ErrorCode::InvalidArgument, "inadmissible type label " + label.to_string());
  if (label.family == Family::BC) {
    RatMatrix gram = simple_root_gram({Family::B, label.rank});
    RootSet roots = reflection_closure(gram);
    Rational shortest = -1;
    for (const auto& r : roots) {
      Rational q = bilinear(gram, r, r);
      if (shortest < 0 || q < shortest) shortest = q;
    }
    RootSet all = roots;
    for (const auto& r : roots)
      if (bilinear(gram, r, r) == shortest) all.insert(scale(Rational(2), r));
    return FiniteRootSystem::create(sorted_with_zero_first(all, gram.rows()), gram);
  }
  RatMatrix gram = simple_root_gram(label);
  return FiniteRootSystem::create(sorted_with_zero_first(reflection_closure(gram), gram.rows()), gram);
}

// ---- validation ------------------------------------------------------------

bool orthogonality_connected(const std::vector<RatVector>& vectors, const RatMatrix& form) {
  if (vectors.empty()) return true;
  std::vector<RatVector> images;
  for (const auto& v : vectors) images.push_back(form.apply(v));
  std::vector<bool> seen(vectors.size(), false);
  std::vector<size_t> stack{0};
  seen[0] = true;
  size_t count = 1;
  while (!stack.empty()) {
    size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < vectors.size(); ++j) {
      if (seen[j]) continue;
      Rational p(0);
      for (size_t k = 0; k < vectors[i].size(); ++k) p += vectors[i][k] * images[j][k];
      if (!is_zero(p)) {
        seen[j] = true;
        ++count;
        stack.push_back(j);
      }
    }
  }
  return count == vectors.size();
}

std::optional<std::string> root_system_violation(const std::vector<RatVector>& roots, const RatMatrix& form) {
  const size_t dim = form.rows();
  if (!form.square()) return "form is not square";
  if (form != form.transpose()) return "form is not symmetric";
  for (const auto& r : roots)
    if (r.size() != dim) return "root " + to_string(r) + " has the wrong dimension";
  if (negative_direction(form) || !kernel(form).empty()) return "form is not positive definite";
  RootSet set(roots.begin(), roots.end());
  std::vector<RatVector> nonzero;
  for (const auto& r : set)
    if (!is_zero_vector(r)) nonzero.push_back(r);
  if (nonzero.empty()) return "no nonzero roots";
  if (rank(RatMatrix::from_columns(nonzero, dim, Rational(0))) != dim) return "roots do not span the ambient space";
  std::vector<RatVector> images;
  std::vector<Rational> norms;
  for (const auto& r : nonzero) {
    images.push_back(form.apply(r));
    Rational q(0);
    for (size_t k = 0; k < dim; ++k) q += r[k] * images.back()[k];
    norms.push_back(q);
  }
  for (size_t a = 0; a < nonzero.size(); ++a) {
    if (!set.count(vneg(nonzero[a]))) return "not closed under negation at " + to_string(nonzero[a]);
    for (size_t b = 0; b < nonzero.size(); ++b) {
      Rational ab(0);
      for (size_t k = 0; k < dim; ++k) ab += nonzero[a][k] * images[b][k];
      Rational cartan = 2 * ab / norms[b];
      if (!is_integer(cartan))
        return "Cartan integrality fails for " + to_string(nonzero[a]) + ", " + to_string(nonzero[b]);
      RatVector w = vsub(nonzero[a], scale(cartan, nonzero[b]));
      if (is_zero_vector(w) || !set.count(w))
        return "reflection closure fails: w_" + to_string(nonzero[b]) + "(" + to_string(nonzero[a]) + ")";
    }
  }
  if (!orthogonality_connected(nonzero, form)) return "decomposable: nonzero roots split into orthogonal sets";
  return std::nullopt;
}

FiniteRootSystem FiniteRootSystem::create(std::vector<RatVector> roots, RatMatrix form) {
  if (auto bad = root_system_violation(roots, form)) fail(ErrorCode::NotRootSystem, "not a root system: " + *bad);
  RootSet set(roots.begin(), roots.end());
  return FiniteRootSystem(sorted_with_zero_first(set, form.rows()), std::move(form));
}

FiniteRootSystem FiniteRootSystem::from_span(const std::vector<RatVector>& vectors, const RatMatrix& form) {
  if (vectors.empty()) fail(ErrorCode::NotRootSystem, "not a root system: no vectors");
  const size_t dim = vectors.front().size();
  SpanChart<Rational> chart(span_basis(vectors, dim, Rational(0)), dim, Rational(0));
  const size_t r = chart.rank();
  RatMatrix gram(r, r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) gram(i, j) = bilinear(form, chart.basis()[i], chart.basis()[j]);
  std::vector<RatVector> coords;
  for (const auto& v : vectors) coords.push_back(*chart.coords(v));
  if (r == 0) fail(ErrorCode::NotRootSystem, "not a root system: no nonzero roots");
  return create(std::move(coords), std::move(gram));
}

std::vector<RatVector> FiniteRootSystem::nonzero_roots() const {
  return std::vector<RatVector>(roots_.begin() + 1, roots_.end());
}

bool FiniteRootSystem::contains(const RatVector& v) const {
  return std::binary_search(roots_.begin() + 1, roots_.end(), v) || is_zero_vector(v);
}

// ---- projections -----------------------------------------------------------

Projection::Projection(const RatMatrix& form, const std::vector<RatVector>& subspace) {
  const size_t n = form.rows();
  std::vector<RatVector> basis = subspace.empty() ? subspace : span_basis(subspace, n, Rational(0));
  if (basis.empty()) fail(ErrorCode::InvalidArgument, "projection onto the zero subspace");
  RatMatrix y = RatMatrix::from_columns(basis, n, Rational(0));
  RatMatrix yt_g = y.transpose() * form;
  auto inv = inverse(yt_g * y);
  if (!inv) fail(ErrorCode::InvalidArgument, "projection: form is degenerate on the subspace");
  matrix_ = y * (*inv) * yt_g;
}

std::vector<RatVector> project(const FiniteRootSystem& sys, const std::vector<RatVector>& subspace) {
  Projection p(sys.form(), subspace);
  RootSet out;
  for (const auto& r : sys.nonzero_roots()) out.insert(p.apply(r));
  return std::vector<RatVector>(out.begin(), out.end());
}

ProjectionLemmaResult check_projection_lemma(const FiniteRootSystem& sys, const std::vector<RatVector>& subspace) {
  Projection p(sys.form(), subspace);
  const auto delta = sys.nonzero_roots();
  ProjectionLemmaResult res;
  std::vector<RatVector> proj;
  for (const auto& a : delta) {
    proj.push_back(p.apply(a));
    if (!is_zero_vector(proj.back())) res.visible.push_back(a);
  }
  res.part_i = true;
  for (const auto& a : delta) {
    std::optional<RatVector> partner;
    for (const auto& b : res.visible)
      if (!is_zero(sys.pair(a, b))) {
        partner = b;
        break;
      }
    if (partner) {
      res.nearly_visible.push_back(a);
      res.witnesses.emplace_back(a, *partner);
    } else {
      res.part_i = false;
    }
  }
  res.visible_closure = res.nearly_visible.size() == delta.size();
  RootSet images;
  for (const auto& x : proj)
    if (!is_zero_vector(x)) images.insert(x);
  res.part_ii = !images.empty() &&
                orthogonality_connected(std::vector<RatVector>(images.begin(), images.end()), sys.form());
  return res;
}

// ---- type recognition ------------------------------------------------------

namespace {

RatMatrix cartan_matrix(const std::vector<RatVector>& simple, const RatMatrix& form) {
  const size_t r = simple.size();
  RatMatrix a(r, r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      a(i, j) = 2 * bilinear(form, simple[i], simple[j]) / bilinear(form, simple[i], simple[i]);
  return a;
}

bool same_up_to_relabeling(const RatMatrix& a, const RatMatrix& b) {
  const size_t n = a.rows();
  if (b.rows() != n) return false;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(size_t)> extend = [&](size_t i) {
    if (i == n) return true;
    for (size_t cand = 0; cand < n; ++cand) {
      if (used[cand] || a(i, i) != b(cand, cand)) continue;
      bool ok = true;
      for (size_t j = 0; j < i && ok; ++j)
        ok = a(i, j) == b(cand, perm[j]) && a(j, i) == b(perm[j], cand);
      if (!ok) continue;
      perm[i] = static_cast<int>(cand);
      used[cand] = true;
      if (extend(i + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  return extend(0);
}

// Coefficients (1, K, K^2, ...) with the least K >= 2 that vanishes on no root.
RatVector generic_functional(const std::vector<RatVector>& roots, size_t dim) {
  for (long k = 2;; ++k) {
    RatVector c(dim, Rational(0));
    Rational pw(1);
    for (size_t i = 0; i < dim; ++i) {
      c[i] = pw;
      pw *= k;
    }
    bool ok = true;
    for (const auto& r : roots) {
      Rational f(0);
      for (size_t i = 0; i < dim; ++i) f += c[i] * r[i];
      if (is_zero(f)) {
        ok = false;
        break;
      }
    }
    if (ok) return c;
  }
}

}  // namespace

TypeLabel recognize_type(const std::vector<RatVector>& roots, const RatMatrix& form) {
  FiniteRootSystem sys = FiniteRootSystem::from_span(roots, form);
  const size_t dim = sys.ambient_dim();
  const auto nonzero = sys.nonzero_roots();

  bool non_reduced = false;
  std::vector<RatVector> indivisible;
  for (const auto& a : nonzero) {
    if (sys.contains(scale(Rational(2), a))) non_reduced = true;
    if (!sys.contains(scale(Rational(1, 2), a))) indivisible.push_back(a);
  }

  RatVector functional = generic_functional(indivisible, dim);
  auto value = [&](const RatVector& v) {
    Rational f(0);
    for (size_t i = 0; i < dim; ++i) f += functional[i] * v[i];
    return f;
  };
  std::vector<RatVector> positive;
  for (const auto& a : indivisible)
    if (sgn(value(a)) > 0) positive.push_back(a);
  RootSet sums;
  for (size_t i = 0; i < positive.size(); ++i)
    for (size_t j = i; j < positive.size(); ++j) sums.insert(vadd(positive[i], positive[j]));
  std::vector<RatVector> simple;
  for (const auto& a : positive)
    if (!sums.count(a)) simple.push_back(a);
  if (simple.size() != dim)
    fail(ErrorCode::NotRootSystem, "not a root system: simple system has " + std::to_string(simple.size()) +
                                       " roots but the rank is " + std::to_string(dim));

  RatMatrix cartan = cartan_matrix(simple, sys.form());
  std::optional<TypeLabel> reduced_type;
  for (const auto& label : canonical_labels(static_cast<int>(dim))) {
    if (label.family == Family::BC || label.rank != static_cast<int>(dim)) continue;
    RatMatrix gram = simple_root_gram(label);
    std::vector<RatVector> unit;
    for (size_t i = 0; i < dim; ++i) {
      RatVector e(dim, Rational(0));
      e[i] = 1;
      unit.push_back(e);
    }
    if (same_up_to_relabeling(cartan, cartan_matrix(unit, gram))) {
      reduced_type = label;
      break;
    }
  }
  if (!reduced_type) fail(ErrorCode::NotRootSystem, "not a root system: Cartan matrix matches no classified type");
  if (!non_reduced) return *reduced_type;
  if (*reduced_type != TypeLabel{Family::B, static_cast<int>(dim)})
    fail(ErrorCode::NotRootSystem, "not a root system: non-reduced with indivisible part of type " +
                                       reduced_type->to_string());
  return {Family::BC, static_cast<int>(dim)};
}

}  // namespace eala::rootsys
