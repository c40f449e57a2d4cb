#include "eala/linalg.hpp"

#include <sstream>

namespace eala {

RatVector rat_vector(std::initializer_list<long> xs) {
  RatVector v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

RatMatrix rat_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  RatMatrix m(rows.size(), cols, Rational(0));
  size_t i = 0;
  for (const auto& r : rows) {
    size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ")";
  return os.str();
}

std::optional<RatVector> negative_direction(const RatMatrix& gram) {
  const size_t n = gram.rows();
  std::vector<RatVector> dirs;
  for (size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    dirs.push_back(std::move(e));
  }
  while (!dirs.empty()) {
    std::optional<size_t> pivot;
    for (size_t i = 0; i < dirs.size(); ++i) {
      Rational q = bilinear(gram, dirs[i], dirs[i]);
      if (sgn(q) < 0) return dirs[i];
      if (sgn(q) > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      // Every remaining direction is isotropic; any nonzero pairing gives a
      // negative vector t*u + v with 2t(u,v) + (v,v) = -1.
      for (size_t i = 0; i < dirs.size(); ++i)
        for (size_t j = i + 1; j < dirs.size(); ++j) {
          Rational b = bilinear(gram, dirs[i], dirs[j]);
          if (is_zero(b)) continue;
          Rational t = Rational(-1) / (2 * b);
          return vadd(scale(t, dirs[i]), dirs[j]);
        }
      return std::nullopt;
    }
    const RatVector p = dirs[*pivot];
    const Rational pp = bilinear(gram, p, p);
    std::vector<RatVector> rest;
    for (size_t i = 0; i < dirs.size(); ++i) {
      if (i == *pivot) continue;
      Rational c = bilinear(gram, dirs[i], p) / pp;
      rest.push_back(vsub(dirs[i], scale(c, p)));
    }
    dirs = std::move(rest);
  }
  return std::nullopt;
}

}  // namespace eala
