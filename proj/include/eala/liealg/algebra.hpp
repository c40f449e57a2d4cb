#pragma once

// Lie algebras given by structure constants on a homogeneous basis, truncated
// to a box [-N, N]^k of multidegrees. A bracket whose degree leaves the box
// is undefined; every check below skips such brackets.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "eala/linalg.hpp"

namespace eala::liealg {

using Degree = std::vector<long>;

template <class F>
using Sparse = std::vector<std::pair<size_t, F>>;  // sorted by index, no zeros

template <class F>
Vec<F> densify(const Sparse<F>& s, size_t n, const F& zero) {
  Vec<F> v(n, zero_like(zero));
  for (const auto& [i, c] : s) v[i] = c;
  return v;
}

template <class F>
Sparse<F> sparsify(const Vec<F>& v) {
  Sparse<F> s;
  for (size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) s.emplace_back(i, v[i]);
  return s;
}

// The integer k as an element of the field of `zero`.
template <class F>
F scalar(long k, const F& zero) {
  if constexpr (std::is_same_v<F, Rational>) {
    (void)zero;
    return Rational(k);
  } else {
    return F(zero.order(), Rational(k));
  }
}

template <class F>
F from_rational(const Rational& x, const F& zero) {
  if constexpr (std::is_same_v<F, Rational>) {
    (void)zero;
    return x;
  } else {
    return F(zero.order(), x);
  }
}

// Exact value of a rational element of F.
template <class F>
Rational to_rational(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) {
    return x;
  } else {
    if (!x.is_rational()) fail(ErrorCode::IncompatibleFields, "value " + x.to_string() + " is not rational");
    return x.rational_value();
  }
}

inline Degree degree_sum(const Degree& a, const Degree& b) {
  Degree s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

inline Degree degree_neg(const Degree& a) {
  Degree s(a.size());
  for (size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return s;
}

// Every degree of [-N, N]^k in lexicographic order ({()} for k = 0).
inline std::vector<Degree> degree_box(size_t k, long window) {
  std::vector<Degree> out;
  Degree d(k, -window);
  while (true) {
    out.push_back(d);
    long i = static_cast<long>(k) - 1;
    while (i >= 0 && d[i] == window) d[i--] = -window;
    if (i < 0) return out;
    ++d[i];
  }
}

template <class F>
class GradedAlgebra {
 public:
  struct BasisElement {
    std::string name;
    Degree degree;
  };

  GradedAlgebra() = default;
  GradedAlgebra(const F& zero, size_t grading_rank, long window)
      : zero_(zero_like(zero)), rank_(grading_rank), window_(window) {}

  size_t add_basis(std::string name, Degree degree) {
    if (degree.size() != rank_) fail(ErrorCode::Internal, "basis degree has the wrong length");
    if (!in_window(degree)) fail(ErrorCode::OutOfWindow, "basis element " + name + " outside the window");
    basis_.push_back({std::move(name), std::move(degree)});
    blocks_[basis_.back().degree].push_back(basis_.size() - 1);
    return basis_.size() - 1;
  }

  // Allocates the tables; call once after the last add_basis.
  void finish_basis() {
    const size_t n = basis_.size();
    table_.assign(n * n, {});
    form_.assign(n, {});
  }

  // Sets [b_i, b_j] = value and [b_j, b_i] = -value.
  void set_bracket(size_t i, size_t j, Sparse<F> value) {
    Sparse<F> neg;
    for (const auto& [k, c] : value) neg.emplace_back(k, -c);
    table_[i * dim() + j] = std::move(value);
    table_[j * dim() + i] = std::move(neg);
  }

  void set_form(size_t i, size_t j, const F& value) {
    auto put = [&](size_t a, size_t b) {
      auto& row = form_[a];
      auto it = std::lower_bound(row.begin(), row.end(), b, [](const auto& e, size_t k) { return e.first < k; });
      if (it != row.end() && it->first == b) it->second = value;
      else row.insert(it, {b, value});
    };
    if (is_zero(value)) return;
    put(i, j);
    if (i != j) put(j, i);
  }

  size_t dim() const { return basis_.size(); }
  size_t grading_rank() const { return rank_; }
  long window() const { return window_; }
  const F& zero() const { return zero_; }
  const BasisElement& basis(size_t i) const { return basis_[i]; }

  bool in_window(const Degree& d) const {
    for (long x : d)
      if (x < -window_ || x > window_) return false;
    return true;
  }
  bool interior(const Degree& d, long margin = 1) const {
    for (long x : d)
      if (x < -(window_ - margin) || x > window_ - margin) return false;
    return true;
  }

  bool bracket_defined(size_t i, size_t j) const { return in_window(degree_sum(basis_[i].degree, basis_[j].degree)); }
  // Precondition: bracket_defined(i, j).
  const Sparse<F>& bracket_basis(size_t i, size_t j) const { return table_[i * dim() + j]; }

  F form_basis(size_t i, size_t j) const {
    const auto& row = form_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j, [](const auto& e, size_t k) { return e.first < k; });
    return (it != row.end() && it->first == j) ? it->second : zero_;
  }
  const Sparse<F>& form_row(size_t i) const { return form_[i]; }

  // Undefined (nullopt) when some contributing basis bracket leaves the window.
  std::optional<Vec<F>> bracket(const Vec<F>& x, const Vec<F>& y) const {
    Vec<F> out(dim(), zero_);
    for (size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (size_t j = 0; j < dim(); ++j) {
        if (is_zero(y[j])) continue;
        if (!bracket_defined(i, j)) return std::nullopt;
        F s = x[i] * y[j];
        for (const auto& [k, c] : bracket_basis(i, j)) out[k] += s * c;
      }
    }
    return out;
  }

  std::optional<Sparse<F>> bracket_sparse(const Sparse<F>& x, const Sparse<F>& y) const {
    std::map<size_t, F> acc;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) {
        if (!bracket_defined(i, j)) return std::nullopt;
        F s = a * b;
        for (const auto& [k, c] : bracket_basis(i, j)) {
          auto [it, fresh] = acc.emplace(k, s * c);
          if (!fresh) it->second += s * c;
        }
      }
    Sparse<F> out;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) out.emplace_back(k, std::move(c));
    return out;
  }

  F form(const Vec<F>& x, const Vec<F>& y) const {
    F sum = zero_;
    for (size_t i = 0; i < dim(); ++i) {
      if (is_zero(x[i])) continue;
      for (const auto& [j, c] : form_[i])
        if (!is_zero(y[j])) sum += x[i] * c * y[j];
    }
    return sum;
  }

  const std::map<Degree, std::vector<size_t>>& blocks() const { return blocks_; }
  const std::vector<size_t>& block(const Degree& d) const {
    static const std::vector<size_t> empty;
    auto it = blocks_.find(d);
    return it == blocks_.end() ? empty : it->second;
  }

  Vec<F> unit(size_t i) const {
    Vec<F> v(dim(), zero_);
    v[i] = one_like(zero_);
    return v;
  }

  // Degree of a nonzero homogeneous vector; throws if it is not homogeneous.
  Degree degree_of(const Vec<F>& v) const {
    std::optional<Degree> d;
    for (size_t i = 0; i < dim(); ++i) {
      if (is_zero(v[i])) continue;
      if (!d) d = basis_[i].degree;
      else if (*d != basis_[i].degree) fail(ErrorCode::Internal, "vector is not homogeneous");
    }
    if (!d) fail(ErrorCode::Internal, "degree of the zero vector");
    return *d;
  }

 private:
  F zero_{};
  size_t rank_ = 0;
  long window_ = 0;
  std::vector<BasisElement> basis_;
  std::map<Degree, std::vector<size_t>> blocks_;
  std::vector<Sparse<F>> table_;
  std::vector<Sparse<F>> form_;
};

// ---- structure checks --------------------------------------------------------

struct CheckResult {
  bool holds = true;
  size_t checked = 0;
  std::string witness;  // first failure, if any
};

template <class F>
CheckResult check_antisymmetry(const GradedAlgebra<F>& g) {
  CheckResult r;
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = i; j < g.dim(); ++j) {
      if (!g.bracket_defined(i, j)) continue;
      ++r.checked;
      const auto& a = g.bracket_basis(i, j);
      const auto& b = g.bracket_basis(j, i);
      bool ok = a.size() == b.size();
      for (size_t k = 0; ok && k < a.size(); ++k) ok = a[k].first == b[k].first && a[k].second == -b[k].second;
      if (!ok && r.holds) r = {false, r.checked, "[" + g.basis(i).name + ", " + g.basis(j).name + "]"};
    }
  return r;
}

template <class F>
CheckResult check_grading(const GradedAlgebra<F>& g) {
  CheckResult r;
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j) {
      if (!g.bracket_defined(i, j)) continue;
      ++r.checked;
      Degree d = degree_sum(g.basis(i).degree, g.basis(j).degree);
      for (const auto& [k, c] : g.bracket_basis(i, j))
        if (g.basis(k).degree != d && r.holds)
          r = {false, r.checked, "[" + g.basis(i).name + ", " + g.basis(j).name + "] has a term " + g.basis(k).name};
    }
  return r;
}

// J(x, y, z) is alternating once antisymmetry holds, so i < j < k suffices.
template <class F>
CheckResult check_jacobi(const GradedAlgebra<F>& g) {
  CheckResult r;
  const size_t n = g.dim();
  auto unit = [](size_t i, const F& zero) { return Sparse<F>{{i, one_like(zero)}}; };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (!g.bracket_defined(i, j)) continue;
      for (size_t k = j + 1; k < n; ++k) {
        Degree total = degree_sum(degree_sum(g.basis(i).degree, g.basis(j).degree), g.basis(k).degree);
        if (!g.in_window(total) || !g.bracket_defined(j, k) || !g.bracket_defined(k, i)) continue;
        auto a = g.bracket_sparse(unit(i, g.zero()), g.bracket_basis(j, k));
        auto b = g.bracket_sparse(unit(j, g.zero()), g.bracket_basis(k, i));
        auto c = g.bracket_sparse(unit(k, g.zero()), g.bracket_basis(i, j));
        if (!a || !b || !c) continue;
        ++r.checked;
        std::map<size_t, F> sum;
        for (const auto* part : {&*a, &*b, &*c})
          for (const auto& [idx, v] : *part) {
            auto [it, fresh] = sum.emplace(idx, v);
            if (!fresh) it->second += v;
          }
        bool zero = true;
        for (const auto& [idx, v] : sum) zero = zero && is_zero(v);
        if (!zero && r.holds)
          r = {false, r.checked, "Jacobi fails on (" + g.basis(i).name + ", " + g.basis(j).name + ", " + g.basis(k).name + ")"};
      }
    }
  return r;
}

template <class F>
CheckResult check_form_symmetric(const GradedAlgebra<F>& g) {
  CheckResult r;
  for (size_t i = 0; i < g.dim(); ++i)
    for (const auto& [j, c] : g.form_row(i)) {
      ++r.checked;
      if (g.form_basis(j, i) != c && r.holds) r = {false, r.checked, "(" + g.basis(i).name + ", " + g.basis(j).name + ")"};
    }
  return r;
}

// ([x, y], z) = (x, [y, z]) on basis triples with both brackets defined.
// Only triples of total degree 0 can contribute.
template <class F>
CheckResult check_invariance(const GradedAlgebra<F>& g) {
  CheckResult r;
  const size_t n = g.dim();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!g.bracket_defined(i, j)) continue;
      Degree need = degree_neg(degree_sum(g.basis(i).degree, g.basis(j).degree));
      for (size_t k : g.block(need)) {
        if (!g.bracket_defined(j, k)) continue;
        ++r.checked;
        F lhs = g.zero(), rhs = g.zero();
        for (const auto& [t, c] : g.bracket_basis(i, j)) lhs += c * g.form_basis(t, k);
        for (const auto& [t, c] : g.bracket_basis(j, k)) rhs += c * g.form_basis(i, t);
        if (lhs != rhs && r.holds)
          r = {false, r.checked, "invariance fails on (" + g.basis(i).name + ", " + g.basis(j).name + ", " + g.basis(k).name + ")"};
      }
    }
  return r;
}

// The form pairs degree p only with degree -p.
template <class F>
CheckResult check_form_grading(const GradedAlgebra<F>& g) {
  CheckResult r;
  for (size_t i = 0; i < g.dim(); ++i)
    for (const auto& [j, c] : g.form_row(i)) {
      ++r.checked;
      if (degree_sum(g.basis(i).degree, g.basis(j).degree) != Degree(g.grading_rank(), 0) && r.holds)
        r = {false, r.checked, "(" + g.basis(i).name + ", " + g.basis(j).name + ") pairs unrelated degrees"};
    }
  return r;
}

// Nondegeneracy of the pairing of each degree p with -p.
template <class F>
CheckResult check_form_nondegenerate(const GradedAlgebra<F>& g) {
  CheckResult r;
  for (const auto& [d, idx] : g.blocks()) {
    ++r.checked;
    const auto& other = g.block(degree_neg(d));
    Matrix<F> m(idx.size(), other.size(), g.zero());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < other.size(); ++b) m(a, b) = g.form_basis(idx[a], other[b]);
    if ((idx.size() != other.size() || rank(m) != idx.size()) && r.holds) {
      std::string deg;
      for (long x : d) deg += (deg.empty() ? "" : ",") + std::to_string(x);
      r = {false, r.checked, "form is degenerate on degree (" + deg + ")"};
    }
  }
  return r;
}

struct StructureReport {
  CheckResult antisymmetry, jacobi, grading, form_symmetric, invariance, form_grading, nondegenerate;
  bool all() const {
    return antisymmetry.holds && jacobi.holds && grading.holds && form_symmetric.holds && invariance.holds &&
           form_grading.holds && nondegenerate.holds;
  }
};

template <class F>
StructureReport structure_report(const GradedAlgebra<F>& g) {
  return {check_antisymmetry(g), check_jacobi(g),       check_grading(g),           check_form_symmetric(g),
          check_invariance(g),   check_form_grading(g), check_form_nondegenerate(g)};
}

}  // namespace eala::liealg
