#pragma once

// Template definitions for build.hpp.

namespace eala::liealg {

template <class F>
Automorphism<F> toroidal_automorphism(const Current& g, const Matrix<F>& tau, const std::vector<long>& mu, long m) {
  const auto& alg = g.real.alg;
  const size_t n = alg.dim();
  const F zero = tau.zero();
  if (tau.rows() != g.base_dim || !tau.square()) fail(ErrorCode::InvalidArgument, "tau must act on the base algebra");
  if (mu.size() != alg.grading_rank()) fail(ErrorCode::InvalidArgument, "mu must have one entry per variable");
  Automorphism<F> s{Matrix<F>(n, n, zero), m};
  // basis elements of one degree are consecutive, in base order
  for (size_t a = 0; a < n; ++a) {
    if (!g.origin[a]) {
      s.matrix(a, a) = one_like(zero);
      continue;
    }
    const auto& [x, p] = *g.origin[a];
    long dot = 0;
    for (size_t k = 0; k < p.size(); ++k) dot += mu[k] * p[k];
    F phase = coords::root_of_unity<F>(m, dot, zero);
    const size_t off = a - x;
    for (size_t y = 0; y < g.base_dim; ++y)
      if (!is_zero(tau(y, x))) s.matrix(off + y, a) = phase * tau(y, x);
  }
  return s;
}

template <class F>
Realization<F> realize_in(const Realization<Rational>& r, long m) {
  if constexpr (std::is_same_v<F, Rational>) {
    (void)m;
    return r;
  } else {
    return lift(r, m);
  }
}

template <class F>
Matrix<F> matrix_in(const RatMatrix& a, long m) {
  if constexpr (std::is_same_v<F, Rational>) {
    (void)m;
    return a;
  } else {
    return lift(a, m);
  }
}

template <class F>
AutomorphismReport check_automorphism(const Realization<F>& g, const Automorphism<F>& s) {
  const auto& alg = g.alg;
  const size_t n = alg.dim();
  AutomorphismReport r;
  if (s.matrix.rows() != n || !s.matrix.square()) fail(ErrorCode::InvalidAutomorphism, "automorphism has the wrong size");
  std::vector<Sparse<F>> col(n);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i)
      if (!is_zero(s.matrix(i, j))) col[j].emplace_back(i, s.matrix(i, j));
  auto apply = [&](const Sparse<F>& v) {
    std::map<size_t, F> acc;
    for (const auto& [j, c] : v)
      for (const auto& [i, a] : col[j]) {
        auto [it, fresh] = acc.emplace(i, c * a);
        if (!fresh) it->second += c * a;
      }
    Sparse<F> out;
    for (auto& [i, c] : acc)
      if (!is_zero(c)) out.emplace_back(i, c);
    return out;
  };
  auto same = [](const Sparse<F>& a, const Sparse<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].first != b[i].first || a[i].second != b[i].second) return false;
    return true;
  };

  // period: apply sigma m times to every basis vector
  for (size_t j = 0; j < n; ++j) {
    Sparse<F> v{{j, one_like(alg.zero())}};
    for (long k = 0; k < s.period; ++k) v = apply(v);
    ++r.period.checked;
    if (!same(v, Sparse<F>{{j, one_like(alg.zero())}}) && r.period.holds)
      r.period = {false, r.period.checked, "sigma^m moves " + alg.basis(j).name};
  }
  for (size_t j = 0; j < n; ++j) {
    ++r.grading.checked;
    for (const auto& [i, c] : col[j])
      if (alg.basis(i).degree != alg.basis(j).degree && r.grading.holds)
        r.grading = {false, r.grading.checked, "sigma(" + alg.basis(j).name + ") leaves its degree"};
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!alg.bracket_defined(i, j)) continue;
      auto rhs = alg.bracket_sparse(col[i], col[j]);
      if (!rhs) continue;
      ++r.bracket.checked;
      if (!same(apply(alg.bracket_basis(i, j)), *rhs) && r.bracket.holds)
        r.bracket = {false, r.bracket.checked, "sigma[" + alg.basis(i).name + ", " + alg.basis(j).name + "] != [sigma x, sigma y]"};
    }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      F lhs = alg.zero();
      for (const auto& [a, x] : col[i])
        for (const auto& [b, y] : col[j]) lhs += x * y * alg.form_basis(a, b);
      ++r.form.checked;
      if (lhs != alg.form_basis(i, j) && r.form.holds)
        r.form = {false, r.form.checked, "(sigma x, sigma y) != (x, y) for " + alg.basis(i).name + ", " + alg.basis(j).name};
    }
  // sigma(h) in h
  if (!g.cartan.empty()) {
    SpanChart<F> chart(g.cartan, n, alg.zero());
    for (const auto& h : g.cartan) {
      ++r.cartan.checked;
      if (!chart.contains(s.matrix.apply(h)) && r.cartan.holds) r.cartan = {false, r.cartan.checked, "sigma(h) is not in h"};
    }
  }
  return r;
}

}  // namespace eala::liealg
