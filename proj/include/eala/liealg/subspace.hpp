#pragma once

// Graded subspaces of a truncated algebra, windowed generated subalgebras
// and centralizers.

#include <map>
#include <vector>

#include "eala/liealg/algebra.hpp"

namespace eala::liealg {

// A subspace spanned by homogeneous vectors, stored per degree as reduced
// echelon rows in block-local coordinates.
template <class F>
class GradedSubspace {
 public:
  explicit GradedSubspace(const GradedAlgebra<F>& g) : g_(&g) {}

  // Adds a homogeneous vector; true when it enlarges the subspace.
  bool add(const Vec<F>& v) {
    if (is_zero_vector(v)) return false;
    Degree d = g_->degree_of(v);
    return add_local(d, to_local(d, v));
  }

  // Same, for a vector given in the coordinates of the block of degree d.
  bool add_local(const Degree& d, Vec<F> x) {
    Block& b = blocks_[d];
    reduce(b, x);
    size_t p = 0;
    while (p < x.size() && is_zero(x[p])) ++p;
    if (p == x.size()) return false;
    F inv = one_like(g_->zero()) / x[p];
    for (auto& c : x) c = c * inv;
    for (auto& row : b.rows) {
      if (is_zero(row[p])) continue;
      F f = row[p];
      for (size_t j = 0; j < row.size(); ++j)
        if (!is_zero(x[j])) row[j] -= f * x[j];
    }
    b.rows.push_back(std::move(x));
    b.pivots.push_back(p);
    return true;
  }

  // Any vector: every homogeneous component must lie in the subspace.
  bool contains(const Vec<F>& v) const {
    for (const auto& [d, idx] : g_->blocks()) {
      Vec<F> x(idx.size(), g_->zero());
      bool any = false;
      for (size_t k = 0; k < idx.size(); ++k)
        if (!is_zero(v[idx[k]])) {
          x[k] = v[idx[k]];
          any = true;
        }
      if (!any) continue;
      auto it = blocks_.find(d);
      if (it == blocks_.end()) return false;
      reduce(it->second, x);
      if (!is_zero_vector(x)) return false;
    }
    return true;
  }

  size_t dim(const Degree& d) const {
    auto it = blocks_.find(d);
    return it == blocks_.end() ? 0 : it->second.rows.size();
  }
  size_t dim() const {
    size_t n = 0;
    for (const auto& [d, b] : blocks_) n += b.rows.size();
    return n;
  }
  std::vector<Vec<F>> basis(const Degree& d) const {
    std::vector<Vec<F>> out;
    auto it = blocks_.find(d);
    if (it == blocks_.end()) return out;
    const auto& idx = g_->block(d);
    for (const auto& row : it->second.rows) {
      Vec<F> v(g_->dim(), g_->zero());
      for (size_t k = 0; k < idx.size(); ++k) v[idx[k]] = row[k];
      out.push_back(std::move(v));
    }
    return out;
  }
  std::vector<Degree> degrees() const {
    std::vector<Degree> out;
    for (const auto& [d, b] : blocks_)
      if (!b.rows.empty()) out.push_back(d);
    return out;
  }

 private:
  struct Block {
    std::vector<Vec<F>> rows;
    std::vector<size_t> pivots;
  };

  Vec<F> to_local(const Degree& d, const Vec<F>& v) const {
    const auto& idx = g_->block(d);
    Vec<F> x(idx.size(), g_->zero());
    for (size_t k = 0; k < idx.size(); ++k) x[k] = v[idx[k]];
    return x;
  }
  static void reduce(const Block& b, Vec<F>& x) {
    for (size_t r = 0; r < b.rows.size(); ++r) {
      const F f = x[b.pivots[r]];
      if (is_zero(f)) continue;
      for (size_t j = 0; j < x.size(); ++j)
        if (!is_zero(b.rows[r][j])) x[j] -= f * b.rows[r][j];
    }
  }

  const GradedAlgebra<F>* g_;
  std::map<Degree, Block> blocks_;
};

// Homogeneous components of v.
template <class F>
std::vector<Vec<F>> homogeneous_parts(const GradedAlgebra<F>& g, const Vec<F>& v) {
  std::vector<Vec<F>> out;
  for (const auto& [d, idx] : g.blocks()) {
    Vec<F> x(g.dim(), g.zero());
    bool any = false;
    for (size_t a : idx)
      if (!is_zero(v[a])) {
        x[a] = v[a];
        any = true;
      }
    if (any) out.push_back(std::move(x));
  }
  return out;
}

// Closure of the span of the generators under brackets that stay inside the
// window. Elements near the boundary can be missing (their preimages would
// need degrees outside the window); compare on the interior only.
template <class F>
GradedSubspace<F> generated_subalgebra(const GradedAlgebra<F>& g, const std::vector<Vec<F>>& generators) {
  GradedSubspace<F> s(g);
  std::vector<size_t> local(g.dim());  // position of each basis index inside its block
  for (const auto& [d, idx] : g.blocks())
    for (size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
  std::vector<Sparse<F>> elems;
  std::vector<Degree> degs;
  for (const auto& v : generators)
    for (auto& part : homogeneous_parts(g, v))
      if (s.add(part)) {
        degs.push_back(g.degree_of(part));
        elems.push_back(sparsify(part));
      }
  // Brackets of homogeneous elements are homogeneous: work in block coordinates.
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      Degree t = degree_sum(degs[i], degs[j]);
      if (!g.in_window(t) || s.dim(t) == g.block(t).size()) continue;  // a full block cannot grow
      auto b = g.bracket_sparse(elems[i], elems[j]);
      if (!b || b->empty()) continue;
      Vec<F> x(g.block(t).size(), g.zero());
      for (const auto& [a, c] : *b) x[local[a]] = c;
      if (s.add_local(t, std::move(x))) {
        degs.push_back(t);
        elems.push_back(std::move(*b));
      }
    }
  return s;
}

// {x in the block of degree d : [x, s] = 0 for every s whose bracket with the
// block stays inside the window}, optionally within span(within).
template <class F>
std::vector<Vec<F>> centralizer_in_block(const GradedAlgebra<F>& g, const Degree& d, const std::vector<Vec<F>>& set,
                                         const std::vector<Vec<F>>* within = nullptr) {
  const auto& idx = g.block(d);
  std::vector<Vec<F>> current;  // in algebra coordinates
  if (within) {
    current = *within;
  } else {
    for (size_t a : idx) current.push_back(g.unit(a));
  }
  for (const auto& sv : set) {
    if (current.empty()) break;
    Sparse<F> s = sparsify(sv);
    Degree sd = g.degree_of(sv);
    if (!g.in_window(degree_sum(d, sd))) continue;
    const auto& target = g.block(degree_sum(d, sd));
    std::map<size_t, size_t> row_of;
    for (size_t k = 0; k < target.size(); ++k) row_of[target[k]] = k;
    Matrix<F> m(target.size(), current.size(), g.zero());
    for (size_t c = 0; c < current.size(); ++c) {
      auto b = g.bracket_sparse(sparsify(current[c]), s);
      for (const auto& [i, x] : *b) m(row_of.at(i), c) = x;
    }
    std::vector<Vec<F>> next;
    for (const auto& k : kernel(m)) {
      Vec<F> v(g.dim(), g.zero());
      for (size_t c = 0; c < current.size(); ++c)
        if (!is_zero(k[c]))
          for (size_t a = 0; a < g.dim(); ++a)
            if (!is_zero(current[c][a])) v[a] += k[c] * current[c][a];
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }
  return current;
}

// Basis of span(a) cap span(b), for vectors in the same space.
template <class F>
std::vector<Vec<F>> intersect(const std::vector<Vec<F>>& a, const std::vector<Vec<F>>& b, size_t dim, const F& zero) {
  if (a.empty() || b.empty()) return {};
  Matrix<F> m(dim, a.size() + b.size(), zero);
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m(i, j) = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m(i, a.size() + j) = -b[j][i];
  std::vector<Vec<F>> out;
  for (const auto& k : kernel(m)) {
    Vec<F> v(dim, zero);
    for (size_t j = 0; j < a.size(); ++j)
      if (!is_zero(k[j]))
        for (size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
    out.push_back(std::move(v));
  }
  return span_basis(out, dim, zero);
}

}  // namespace eala::liealg
