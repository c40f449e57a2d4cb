#include "eala/exactnum.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "eala/linalg.hpp"

namespace eala {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    fail(ErrorCode::InvalidArgument, "not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) fail(ErrorCode::InvalidArgument, "zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& x) { return x.get_den() == 1; }

long to_long(const Rational& x) {
  if (!is_integer(x) || !x.get_num().fits_slong_p()) {
    fail(ErrorCode::InvalidArgument, "expected a machine integer, got " + to_string(x));
  }
  return x.get_num().get_si();
}

long euler_phi(long m) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// Exact division of integer polynomials (constant term first); divisor monic.
std::vector<Integer> poly_divide(std::vector<Integer> num, const std::vector<Integer>& den) {
  const size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {Integer(0)};
  std::vector<Integer> quot(num.size() - dd, Integer(0));
  for (size_t k = num.size(); k-- > dd;) {
    Integer c = num[k];
    quot[k - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(long m) {
  static std::mutex mutex;
  static std::map<long, std::vector<Integer>> cache;
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // x^m - 1 divided by Phi_d for proper divisors d.
  std::vector<Integer> poly(m + 1, Integer(0));
  poly[0] = -1;
  poly[m] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d == 0) poly = poly_divide(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

namespace {

// Reduce a rational polynomial modulo the monic Phi_m.
std::vector<Rational> reduce_mod_phi(long m, std::vector<Rational> poly) {
  const auto& phi = cyclotomic_polynomial(m);
  const size_t deg = phi.size() - 1;
  for (size_t k = poly.size(); k-- > deg;) {
    if (is_zero(poly[k])) continue;
    Rational c = poly[k];
    for (size_t j = 0; j <= deg; ++j) poly[k - deg + j] -= c * Rational(phi[j]);
  }
  poly.resize(deg, Rational(0));
  return poly;
}

void require_same_order(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) {
    fail(ErrorCode::IncompatibleFields,
         "incompatible cyclotomic fields: Q(zeta_" + std::to_string(a.order()) +
             ") vs Q(zeta_" + std::to_string(b.order()) + ")");
  }
}

}  // namespace

Cyclotomic::Cyclotomic() : m_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long m, const Rational& value)
    : m_(m), coeffs_(static_cast<size_t>(euler_phi(m)), Rational(0)) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(long m, std::vector<Rational> coeffs)
    : m_(m), coeffs_(reduce_mod_phi(m, std::move(coeffs))) {}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!eala::is_zero(c)) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!eala::is_zero(coeffs_[i])) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) fail(ErrorCode::InvalidArgument, "cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  Cyclotomic r = a;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
  return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  Cyclotomic r = a;
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_order(a, b);
  const size_t n = a.coeffs_.size();
  if (n == 1) return Cyclotomic(a.m_, Rational(a.coeffs_[0] * b.coeffs_[0]));
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (size_t j = 0; j < n; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Cyclotomic(a.m_, std::move(prod));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) fail(ErrorCode::InvalidArgument, "division by zero in Q(zeta_m)");
  const size_t n = coeffs_.size();
  if (n == 1) return Cyclotomic(m_, Rational(1 / coeffs_[0]));
  // Column j of the multiplication matrix is (this * zeta^j).
  Matrix<Rational> mult(n, n, Rational(0));
  for (size_t j = 0; j < n; ++j) {
    Cyclotomic col = *this * zeta_power(m_, static_cast<long>(j));
    for (size_t i = 0; i < n; ++i) mult(i, j) = col.coeffs_[i];
  }
  std::vector<Rational> rhs(n, Rational(0));
  rhs[0] = 1;
  auto x = solve(mult, rhs);
  if (!x) fail(ErrorCode::Internal, "cyclotomic inverse: singular multiplication matrix");
  return Cyclotomic(m_, std::move(*x));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (eala::is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << m_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
  }
  fail(ErrorCode::InvalidArgument, "unknown cyclotomic operation");
}

Cyclotomic zeta_power(long m, long k) {
  if (m < 1) fail(ErrorCode::InvalidArgument, "cyclotomic order must be positive");
  long e = ((k % m) + m) % m;
  std::vector<Rational> poly(static_cast<size_t>(e) + 1, Rational(0));
  poly[e] = 1;
  return Cyclotomic(m, std::move(poly));
}

}  // namespace eala
