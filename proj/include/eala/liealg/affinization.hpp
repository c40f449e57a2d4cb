#pragma once

// sigma-eigenspaces of a graded algebra, the twisted extension of sigma to
// Aff(g), and the fixed-point algebra Aff(g, sigma) built from eigenbases.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eala/liealg/build.hpp"

namespace eala::liealg {

inline long pos_mod(long x, long m) { return ((x % m) + m) % m; }

// Restriction of a degree-preserving map to the block of degree d.
template <class F>
Matrix<F> restrict_to_block(const GradedAlgebra<F>& g, const Matrix<F>& s, const Degree& d) {
  const auto& idx = g.block(d);
  std::map<size_t, size_t> local;
  for (size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
  Matrix<F> out(idx.size(), idx.size(), g.zero());
  for (size_t k = 0; k < idx.size(); ++k)
    for (size_t i = 0; i < s.rows(); ++i) {
      const F& x = s(i, idx[k]);
      if (is_zero(x)) continue;
      auto it = local.find(i);
      if (it == local.end())
        fail(ErrorCode::InvalidAutomorphism, "automorphism moves " + g.basis(idx[k]).name + " out of its degree");
      out(it->second, k) = x;
    }
  return out;
}

template <class F>
struct Eigenspaces {
  long period = 1;
  // (residue i, degree) -> basis of g_i = {x : sigma x = zeta^i x} in that degree, in g coordinates
  std::map<std::pair<long, Degree>, std::vector<Vec<F>>> spaces;

  size_t dim(long residue) const {
    size_t n = 0;
    for (const auto& [key, basis] : spaces)
      if (key.first == residue) n += basis.size();
    return n;
  }
  const std::vector<Vec<F>>& at(long residue, const Degree& d) const {
    static const std::vector<Vec<F>> empty;
    auto it = spaces.find({residue, d});
    return it == spaces.end() ? empty : it->second;
  }
};

// Needs zeta_m in F: Rational handles m <= 2 only.
template <class F>
Eigenspaces<F> eigenspaces(const GradedAlgebra<F>& g, const Automorphism<F>& s) {
  const long m = s.period;
  if (m < 1) fail(ErrorCode::InvalidAutomorphism, "period must be positive");
  if (s.matrix.rows() != g.dim() || !s.matrix.square())
    fail(ErrorCode::InvalidAutomorphism, "automorphism has the wrong size");
  Eigenspaces<F> e;
  e.period = m;
  for (const auto& [d, idx] : g.blocks()) {
    Matrix<F> b = restrict_to_block(g, s.matrix, d);
    if (!b.pow(m).is_identity()) fail(ErrorCode::InvalidAutomorphism, "sigma^m is not the identity");
    size_t total = 0;
    for (long i = 0; i < m; ++i) {
      F z = coords::root_of_unity<F>(m, i, g.zero());
      Matrix<F> shifted = b;
      for (size_t k = 0; k < idx.size(); ++k) shifted(k, k) -= z;
      auto ker = kernel(shifted);
      if (ker.empty()) continue;
      total += ker.size();
      std::vector<Vec<F>> full;
      for (const auto& v : ker) {
        Vec<F> x(g.dim(), g.zero());
        for (size_t k = 0; k < idx.size(); ++k) x[idx[k]] = v[k];
        full.push_back(std::move(x));
      }
      e.spaces[{i, d}] = std::move(full);
    }
    if (total != idx.size()) fail(ErrorCode::NotDiagonalizable, "sigma is not diagonalizable on a degree block");
  }
  return e;
}

// Extension of sigma to Aff(g) = affinize(g, window): x (x) t^i -> zeta^-i sigma(x) (x) t^i,
// c -> c, d -> d. `aff` must be affinize(g, window), lifted to F if needed.
template <class F>
Automorphism<F> extend_automorphism(const Realization<F>& aff, size_t base_dim, long window, const Automorphism<F>& s) {
  const size_t n = base_dim;
  const size_t loops = static_cast<size_t>(2 * window + 1);
  if (aff.alg.dim() != loops * n + 2) fail(ErrorCode::InvalidArgument, "extend_automorphism: not an affinization of the base");
  if (s.matrix.rows() != n) fail(ErrorCode::InvalidAutomorphism, "automorphism has the wrong size");
  const F zero = aff.alg.zero();
  Automorphism<F> out{Matrix<F>(aff.alg.dim(), aff.alg.dim(), zero), s.period};
  for (long i = -window; i <= window; ++i) {
    F phase = coords::root_of_unity<F>(s.period, -i, zero);
    size_t off = static_cast<size_t>(i + window) * n;
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        if (!is_zero(s.matrix(b, a))) out.matrix(off + b, off + a) = phase * s.matrix(b, a);
  }
  out.matrix(loops * n, loops * n) = one_like(zero);
  out.matrix(loops * n + 1, loops * n + 1) = one_like(zero);
  return out;
}

template <class F>
std::string vector_name(const GradedAlgebra<F>& g, const Vec<F>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != one_like(g.zero())) s += "(" + to_string(v[i]) + ")";
    s += g.basis(i).name;
  }
  return s.empty() ? "0" : s;
}

// h^sigma for sigma(h) = h.
template <class F>
struct FixedCartan {
  Matrix<F> action;                 // sigma on coordinates of the Cartan list
  std::vector<Vec<F>> coords;       // basis of h^sigma in coordinates of the Cartan list
  std::vector<Vec<F>> vectors;      // the same in g coordinates
};

template <class F>
FixedCartan<F> fixed_cartan(const Realization<F>& g, const Automorphism<F>& s) {
  const size_t n = g.alg.dim();
  const size_t r = g.cartan.size();
  FixedCartan<F> fc;
  fc.action = Matrix<F>(r, r, g.alg.zero());
  if (r == 0) return fc;
  SpanChart<F> chart(g.cartan, n, g.alg.zero());
  for (size_t j = 0; j < r; ++j) {
    auto c = chart.coords(s.matrix.apply(g.cartan[j]));
    if (!c) fail(ErrorCode::InvalidAutomorphism, "sigma does not preserve h");
    for (size_t i = 0; i < r; ++i) fc.action(i, j) = (*c)[i];
  }
  fc.coords = fixed_subspace(fc.action);
  for (const auto& k : fc.coords) fc.vectors.push_back(chart.embed(k));
  return fc;
}

// Aff(g, sigma) = sum_i g_i (x) t^i + F c + F d for |i| <= window, with Cartan
// h^sigma (x) 1 + F c + F d. Degrees are (loop degree, g degree).
template <class F>
struct FixedAffinization {
  Realization<F> real;
  long period = 1;
  long window = 0;
  size_t c = 0, d = 0;
  FixedCartan<F> cartan;
  // loop degree and g-vector of each basis element other than c, d
  std::vector<std::optional<std::pair<long, Vec<F>>>> origin;
  std::map<std::pair<long, Degree>, SpanChart<F>> charts;  // (residue, g degree) -> eigenbasis chart
  std::map<Degree, size_t> offsets;                         // Aff degree -> first basis index

  static Degree aff_degree(long i, const Degree& p) {
    Degree e{i};
    e.insert(e.end(), p.begin(), p.end());
    return e;
  }

  // x (x) t^i for x in g_i; throws if x is not in g_i or i is out of the window.
  Vec<F> element(long i, const Vec<F>& x, const GradedAlgebra<F>& g) const {
    if (i < -window || i > window) fail(ErrorCode::OutOfWindow, "loop degree outside the window");
    Vec<F> out(real.alg.dim(), real.alg.zero());
    const long r = pos_mod(i, period);
    for (const auto& [p, idx] : g.blocks()) {
      Vec<F> part(g.dim(), g.zero());
      bool any = false;
      for (size_t a : idx)
        if (!is_zero(x[a])) {
          part[a] = x[a];
          any = true;
        }
      if (!any) continue;
      auto ch = charts.find({r, p});
      std::optional<Vec<F>> coords;
      if (ch != charts.end()) coords = ch->second.coords(part);
      if (!coords) fail(ErrorCode::InvalidArgument, "vector is not in the eigenspace of its loop degree");
      size_t off = offsets.at(aff_degree(i, p));
      for (size_t k = 0; k < coords->size(); ++k) out[off + k] = (*coords)[k];
    }
    return out;
  }
};

template <class F>
FixedAffinization<F> fixed_subalgebra(const Realization<F>& g, const Automorphism<F>& s, long window) {
  const auto& base = g.alg;
  const size_t r = base.grading_rank();
  if (window < 1) fail(ErrorCode::InvalidArgument, "loop window must be positive");
  if (r > 0 && base.window() != window)
    fail(ErrorCode::InvalidArgument, "the loop window must equal the window of the graded algebra");
  if (!check_form_nondegenerate(base).holds) fail(ErrorCode::InvalidArgument, "affinization needs a nondegenerate form");
  const long m = s.period;
  const F zero = base.zero();
  auto eig = eigenspaces(base, s);

  FixedAffinization<F> fa;
  fa.period = m;
  fa.window = window;
  fa.cartan = fixed_cartan(g, s);
  auto& alg = fa.real.alg;
  alg = GradedAlgebra<F>(zero, r + 1, window);

  // eigen elements (residue, g degree, vector) and their charts
  struct Eigen {
    long residue;
    Degree degree;
    size_t local;
    Vec<F> vec;
    Sparse<F> sparse;
  };
  std::vector<Eigen> eigen;
  std::map<std::pair<long, Degree>, size_t> first_eigen;
  for (const auto& [key, basis] : eig.spaces) {
    fa.charts.emplace(key, SpanChart<F>(basis, base.dim(), zero));
    first_eigen[key] = eigen.size();
    for (size_t k = 0; k < basis.size(); ++k) eigen.push_back({key.first, key.second, k, basis[k], sparsify(basis[k])});
  }

  // basis of Aff(g, sigma)
  std::vector<size_t> eigen_of;  // Aff basis index -> eigen element
  for (long i = -window; i <= window; ++i) {
    const long res = pos_mod(i, m);
    for (const auto& [key, basis] : eig.spaces) {
      if (key.first != res) continue;
      fa.offsets[FixedAffinization<F>::aff_degree(i, key.second)] = alg.dim();
      for (size_t k = 0; k < basis.size(); ++k) {
        alg.add_basis(vector_name(base, basis[k]) + " (x) t^" + std::to_string(i),
                      FixedAffinization<F>::aff_degree(i, key.second));
        fa.origin.push_back(std::make_pair(i, basis[k]));
        eigen_of.push_back(first_eigen[key] + k);
      }
    }
  }
  const size_t loop_dim = alg.dim();
  fa.c = alg.add_basis("c", Degree(r + 1, 0));
  fa.d = alg.add_basis("d", Degree(r + 1, 0));
  fa.origin.push_back(std::nullopt);
  fa.origin.push_back(std::nullopt);
  alg.finish_basis();

  // brackets and pairings of eigen elements, in eigen-local coordinates
  const size_t ne = eigen.size();
  std::map<std::pair<size_t, size_t>, Sparse<F>> cache;
  auto eigen_bracket = [&](size_t a, size_t b) -> const Sparse<F>& {
    auto it = cache.find({a, b});
    if (it != cache.end()) return it->second;
    Sparse<F> out;
    auto v = base.bracket_sparse(eigen[a].sparse, eigen[b].sparse);
    if (!v) fail(ErrorCode::Internal, "eigen bracket outside the window");
    if (!v->empty()) {
      long res = pos_mod(eigen[a].residue + eigen[b].residue, m);
      Degree p = degree_sum(eigen[a].degree, eigen[b].degree);
      auto ch = fa.charts.find({res, p});
      auto dense = densify(*v, base.dim(), zero);
      std::optional<Vec<F>> coords;
      if (ch != fa.charts.end()) coords = ch->second.coords(dense);
      if (!coords) fail(ErrorCode::InvalidAutomorphism, "eigenspaces are not compatible with the bracket");
      for (size_t k = 0; k < coords->size(); ++k)
        if (!is_zero((*coords)[k])) out.emplace_back(k, (*coords)[k]);
    }
    return cache.emplace(std::make_pair(a, b), std::move(out)).first->second;
  };
  std::vector<std::vector<F>> pairing(ne);
  for (size_t a = 0; a < ne; ++a) {
    pairing[a].assign(ne, zero);
    for (size_t b = 0; b < ne; ++b)
      if (degree_sum(eigen[a].degree, eigen[b].degree) == Degree(r, 0)) pairing[a][b] = base.form(eigen[a].vec, eigen[b].vec);
  }

  for (size_t x = 0; x < loop_dim; ++x) {
    const long i = fa.origin[x]->first;
    const size_t a = eigen_of[x];
    for (size_t y = x; y < loop_dim; ++y) {
      const long j = fa.origin[y]->first;
      const size_t b = eigen_of[y];
      if (i + j == 0 && !is_zero(pairing[a][b])) alg.set_form(x, y, pairing[a][b]);
      if (x == y || !alg.bracket_defined(x, y)) continue;
      Sparse<F> value;
      const auto& br = eigen_bracket(a, b);
      if (!br.empty()) {
        size_t off = fa.offsets.at(FixedAffinization<F>::aff_degree(i + j, degree_sum(eigen[a].degree, eigen[b].degree)));
        for (const auto& [k, coeff] : br) value.emplace_back(off + k, coeff);
      }
      if (i + j == 0 && i != 0 && !is_zero(pairing[a][b])) value.emplace_back(fa.c, scalar(i, zero) * pairing[a][b]);
      std::sort(value.begin(), value.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      alg.set_bracket(x, y, std::move(value));
    }
  }
  alg.set_form(fa.c, fa.d, one_like(zero));
  for (size_t x = 0; x < loop_dim; ++x) {
    const long i = fa.origin[x]->first;
    if (i != 0) alg.set_bracket(fa.d, x, {{x, scalar(i, zero)}});
  }

  for (const auto& k : fa.cartan.vectors) fa.real.cartan.push_back(fa.element(0, k, base));
  fa.real.cartan.push_back(alg.unit(fa.c));
  fa.real.cartan.push_back(alg.unit(fa.d));
  fa.real.centrals.push_back(alg.unit(fa.c));
  fa.real.derivations.push_back(alg.unit(fa.d));
  for (const auto& v : g.centrals) {
    if (s.matrix.apply(v) != v) fail(ErrorCode::InvalidAutomorphism, "sigma must fix the central elements c_k");
    fa.real.centrals.push_back(fa.element(0, v, base));
  }
  for (const auto& v : g.derivations) {
    if (s.matrix.apply(v) != v) fail(ErrorCode::InvalidAutomorphism, "sigma must fix the derivations d_k");
    fa.real.derivations.push_back(fa.element(0, v, base));
  }
  return fa;
}

}  // namespace eala::liealg
