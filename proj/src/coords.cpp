#include "eala/coords.hpp"

#include <numeric>

namespace eala::coords {

namespace {

long mod(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

QuantumTorus QuantumTorus::create(std::vector<std::vector<long>> exponents, long order) {
  if (order < 1) fail(ErrorCode::InvalidArgument, "quantum torus: order must be positive");
  const size_t nu = exponents.size();
  for (size_t i = 0; i < nu; ++i) {
    if (exponents[i].size() != nu) fail(ErrorCode::InvalidArgument, "quantum torus: q must be square");
    for (size_t j = 0; j < nu; ++j) exponents[i][j] = mod(exponents[i][j], order);
  }
  for (size_t i = 0; i < nu; ++i) {
    if (exponents[i][i] != 0) fail(ErrorCode::InvalidArgument, "quantum torus: q_ii must be 1");
    for (size_t j = 0; j < nu; ++j)
      if (mod(exponents[i][j] + exponents[j][i], order) != 0)
        fail(ErrorCode::InvalidArgument, "quantum torus: q_ij q_ji must be 1");
  }
  QuantumTorus t;
  t.e_ = std::move(exponents);
  t.order_ = order;
  // shrink to the least order generated by the entries
  long g = order;
  for (const auto& row : t.e_)
    for (long x : row) g = std::gcd(g, x);
  if (g > 1 && g < order) {
    for (auto& row : t.e_)
      for (long& x : row) x /= g;
    t.order_ = order / g;
  } else if (g == order) {
    for (auto& row : t.e_)
      for (long& x : row) x = 0;
    t.order_ = 1;
  }
  return t;
}

QuantumTorus QuantumTorus::commutative(int nu) {
  return create(std::vector<std::vector<long>>(nu, std::vector<long>(nu, 0)), 1);
}

QuantumTorus QuantumTorus::from_signs(const std::vector<std::vector<long>>& q) {
  std::vector<std::vector<long>> e(q.size());
  for (size_t i = 0; i < q.size(); ++i)
    for (long x : q[i]) {
      if (x != 1 && x != -1) fail(ErrorCode::InvalidArgument, "quantum torus: entries must be +1 or -1");
      e[i].push_back(x == 1 ? 0 : 1);
    }
  return create(std::move(e), 2);
}

bool QuantumTorus::commutative_torus() const {
  for (const auto& row : e_)
    for (long x : row)
      if (x != 0) return false;
  return true;
}

long QuantumTorus::cocycle(const Exponent& p, const Exponent& q) const {
  // t^p t^q: move each t_j^{q_j} left past t_i^{p_i} for i > j
  long k = 0;
  const size_t nu = e_.size();
  for (size_t i = 0; i < nu; ++i)
    for (size_t j = 0; j < i; ++j) k += e_[i][j] * p[i] * q[j];
  return mod(k, order_);
}

long QuantumTorus::reversal_exponent(const Exponent& p) const {
  // t_nu^{p_nu} ... t_1^{p_1} reordered to t_1^{p_1} ... t_nu^{p_nu}
  long k = 0;
  const size_t nu = e_.size();
  for (size_t i = 0; i < nu; ++i)
    for (size_t j = 0; j < i; ++j) k += e_[i][j] * p[i] * p[j];
  return mod(k, order_);
}

}  // namespace eala::coords
