#pragma once

// Exact scalars: GMP rationals and elements of the cyclotomic field Q(zeta_m)
// stored in the power basis modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eala/error.hpp"

namespace eala {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

std::string to_string(const Rational& x);
// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);
bool is_integer(const Rational& x);
// Requires is_integer(x).
long to_long(const Rational& x);

long euler_phi(long m);
// Integer coefficients, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(long m);

class Cyclotomic {
 public:
  Cyclotomic();  // zero of Q (m = 1)
  Cyclotomic(long m, const Rational& value);
  Cyclotomic(long m, std::vector<Rational> coeffs);

  static Cyclotomic zero(long m) { return Cyclotomic(m, Rational(0)); }
  static Cyclotomic one(long m) { return Cyclotomic(m, Rational(1)); }

  long order() const { return m_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  Cyclotomic inverse() const;
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  long m_;
  std::vector<Rational> coeffs_;
};

enum class CycOp { Add, Sub, Mul };
Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op);

// zeta_m^k, reduced; k may be negative.
Cyclotomic zeta_power(long m, long k);

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Cyclotomic zero_like(const Cyclotomic& x) { return Cyclotomic::zero(x.order()); }
inline Cyclotomic one_like(const Cyclotomic& x) { return Cyclotomic::one(x.order()); }
inline std::string to_string(const Cyclotomic& x) { return x.to_string(); }

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

}  // namespace eala
