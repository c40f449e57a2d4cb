#pragma once

// Coordinate algebras: Laurent polynomials in nu variables, commutative or
// quantum (t_i t_j = q_ij t_j t_i with every q_ij a root of unity).

#include <map>
#include <vector>

#include "eala/exactnum.hpp"
#include "eala/linalg.hpp"

namespace eala::coords {

using Exponent = std::vector<long>;

class QuantumTorus {
 public:
  // q_ij = zeta_order^exponents[i][j]; needs exponents[i][i] = 0 and
  // exponents[i][j] = -exponents[j][i] mod order.
  static QuantumTorus create(std::vector<std::vector<long>> exponents, long order);
  static QuantumTorus commutative(int nu);
  // Entries must be +1 or -1.
  static QuantumTorus from_signs(const std::vector<std::vector<long>>& q);

  int nu() const { return static_cast<int>(e_.size()); }
  long order() const { return order_; }
  long exponent(int i, int j) const { return e_[i][j]; }
  bool commutative_torus() const;
  bool signs_only() const { return order_ <= 2; }

  // Exponent k with t^p t^q = zeta^k t^(p+q), 0 <= k < order.
  long cocycle(const Exponent& p, const Exponent& q) const;
  // Exponent of the sign in reversal(t^p) = zeta^k t^p.
  long reversal_exponent(const Exponent& p) const;

 private:
  std::vector<std::vector<long>> e_;
  long order_ = 1;
};

// zeta_order^k in F; Rational only supports order <= 2.
template <class F>
F root_of_unity(long order, long k, const F& zero);

template <>
inline Rational root_of_unity<Rational>(long order, long k, const Rational&) {
  if (order > 2) fail(ErrorCode::IncompatibleFields, "rational coefficients need q_ij = +-1");
  return (order == 2 && ((k % 2) + 2) % 2 == 1) ? Rational(-1) : Rational(1);
}
template <>
inline Cyclotomic root_of_unity<Cyclotomic>(long order, long k, const Cyclotomic& zero) {
  if (zero.order() % order != 0) fail(ErrorCode::IncompatibleFields, "field does not contain the q_ij");
  return zeta_power(zero.order(), k * (zero.order() / order));
}

template <class F>
struct TorusElement {
  std::map<Exponent, F> terms;  // no zero coefficients

  static TorusElement monomial(const Exponent& p, const F& coeff) {
    TorusElement e;
    if (!is_zero(coeff)) e.terms.emplace(p, coeff);
    return e;
  }
  bool is_zero_element() const { return terms.empty(); }
  void add(const Exponent& p, const F& coeff) {
    auto [it, fresh] = terms.emplace(p, coeff);
    if (!fresh) it->second = it->second + coeff;
    if (is_zero(it->second)) terms.erase(it);
  }
  friend bool operator==(const TorusElement& a, const TorusElement& b) { return a.terms == b.terms; }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }
};

template <class F>
TorusElement<F> qt_add(const TorusElement<F>& a, const TorusElement<F>& b) {
  TorusElement<F> out = a;
  for (const auto& [p, c] : b.terms) out.add(p, c);
  return out;
}

template <class F>
TorusElement<F> qt_scale(const F& s, const TorusElement<F>& a) {
  TorusElement<F> out;
  if (is_zero(s)) return out;
  for (const auto& [p, c] : a.terms) out.terms.emplace(p, s * c);
  return out;
}

template <class F>
TorusElement<F> qt_mul(const QuantumTorus& t, const TorusElement<F>& a, const TorusElement<F>& b) {
  TorusElement<F> out;
  for (const auto& [p, x] : a.terms)
    for (const auto& [q, y] : b.terms) {
      Exponent s(p.size());
      for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
      out.add(s, root_of_unity<F>(t.order(), t.cocycle(p, q), x) * x * y);
    }
  return out;
}

// Coefficient of t^0.
template <class F>
F epsilon(const TorusElement<F>& a, const F& zero) {
  for (const auto& [p, c] : a.terms) {
    bool origin = true;
    for (long x : p) origin = origin && x == 0;
    if (origin) return c;
  }
  return zero_like(zero);
}

// The anti-automorphism fixing every t_i; needs q_ij = +-1.
template <class F>
TorusElement<F> reversal(const QuantumTorus& t, const TorusElement<F>& a) {
  if (!t.signs_only()) fail(ErrorCode::InvalidArgument, "reversal needs q_ij = +-1");
  TorusElement<F> out;
  for (const auto& [p, c] : a.terms) out.terms.emplace(p, root_of_unity<F>(t.order(), t.reversal_exponent(p), c) * c);
  return out;
}

template <class F>
using TorusMatrix = std::vector<std::vector<TorusElement<F>>>;

template <class F>
TorusMatrix<F> matrix_mul(const QuantumTorus& t, const TorusMatrix<F>& a, const TorusMatrix<F>& b) {
  const size_t n = a.size();
  TorusMatrix<F> out(n, std::vector<TorusElement<F>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero_element()) continue;
      for (size_t j = 0; j < n; ++j) out[i][j] = qt_add(out[i][j], qt_mul(t, a[i][k], b[k][j]));
    }
  return out;
}

// (a_ij)^* = (reversal(a_{n+1-j, n+1-i})).
template <class F>
TorusMatrix<F> matrix_star(const QuantumTorus& t, const TorusMatrix<F>& m) {
  const size_t n = m.size();
  TorusMatrix<F> out(n, std::vector<TorusElement<F>>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = reversal(t, m[n - 1 - j][n - 1 - i]);
  return out;
}

}  // namespace eala::coords
