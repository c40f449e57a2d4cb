#include "eala/catalog.hpp"

namespace eala::catalog {

using ears::Coset;
using ears::Progression;

ears::RootDatum finite_datum(const rootsys::TypeLabel& t) {
  return ears::RootDatum::from_system(rootsys::build_finite(t));
}

ears::RootDatum toroidal_datum(const rootsys::TypeLabel& t, int nu) {
  if (nu < 0) fail(ErrorCode::InvalidArgument, "toroidal datum: negative nullity");
  auto sys = rootsys::build_finite(t);
  const size_t r = sys.ambient_dim();
  const size_t n = r + nu;
  RatMatrix form(n, n, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) form(i, j) = sys.form()(i, j);
  std::vector<RatVector> iso;
  for (int k = 0; k < nu; ++k) {
    RatVector d(n, Rational(0));
    d[r + k] = 1;
    iso.push_back(d);
  }
  std::vector<Coset> cosets;
  for (const auto& a : sys.roots()) {
    RatVector rep = a;
    rep.resize(n, Rational(0));
    cosets.push_back({rep, std::vector<Progression>(nu, Progression{Rational(0), 1})});
  }
  return ears::RootDatum::create(form, cosets, iso);
}

ears::RootDatum quantum_datum(int l, int nu) {
  if (l < 1 || nu < 1) fail(ErrorCode::InvalidArgument, "quantum datum: need l >= 1 and nu >= 1");
  const size_t e = l + 1;
  const size_t n = e + nu;
  RatMatrix form(n, n, Rational(0));
  for (size_t i = 0; i < e; ++i) form(i, i) = 1;
  std::vector<RatVector> iso;
  for (int k = 0; k < nu; ++k) {
    RatVector d(n, Rational(0));
    d[e + k] = 1;
    iso.push_back(d);
  }
  std::vector<Coset> cosets;
  std::vector<Progression> all(nu, Progression{Rational(0), 1});
  cosets.push_back({RatVector(n, Rational(0)), all});
  for (size_t i = 0; i < e; ++i)
    for (size_t j = 0; j < e; ++j) {
      if (i == j) continue;
      RatVector rep(n, Rational(0));
      rep[i] = 1;
      rep[j] = -1;
      cosets.push_back({rep, all});
    }
  return ears::RootDatum::create(form, cosets, iso);
}

RatMatrix quantum_flip(int l, int nu) {
  const size_t e = l + 1;
  const size_t n = e + nu;
  RatMatrix m(n, n, Rational(0));
  // eps_i -> -eps_{l+2-i} (1-based)
  for (size_t i = 0; i < e; ++i) m(e - 1 - i, i) = -1;
  for (size_t k = e; k < n; ++k) m(k, k) = 1;
  return m;
}

gcm::GCM finite_cartan(const rootsys::TypeLabel& t) {
  RatMatrix g = rootsys::simple_root_gram(t);
  std::vector<std::vector<long>> a(g.rows(), std::vector<long>(g.rows()));
  for (size_t i = 0; i < g.rows(); ++i)
    for (size_t j = 0; j < g.rows(); ++j) a[i][j] = to_long(2 * g(i, j) / g(i, i));
  return gcm::GCM::create(std::move(a));
}

RatMatrix identity(size_t n) { return RatMatrix::identity(n, Rational(0)); }

RatMatrix extend_by_identity(const RatMatrix& m, size_t extra) {
  const size_t n = m.rows() + extra;
  RatMatrix out = RatMatrix::identity(n, Rational(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace eala::catalog
