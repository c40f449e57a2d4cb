#pragma once

// Weight-space decompositions with respect to a Cartan subalgebra, the
// residue-refined spaces g_{i, pi(alpha)}, and root data read off the window.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "eala/autoroot.hpp"
#include "eala/ears.hpp"
#include "eala/liealg/affinization.hpp"

namespace eala::liealg {

template <class F>
struct WeightSpace {
  Degree degree;
  Vec<F> weight;                // values on the Cartan list
  std::vector<Vec<F>> basis;    // in algebra coordinates
};

template <class F>
struct WeightDecomposition {
  std::vector<WeightSpace<F>> spaces;  // grouped by degree, in block order

  size_t dim_of_weight(const Vec<F>& w) const {
    size_t n = 0;
    for (const auto& s : spaces)
      if (s.weight == w) n += s.basis.size();
    return n;
  }
  std::vector<Vec<F>> space_of(const Vec<F>& w) const {
    std::vector<Vec<F>> out;
    for (const auto& s : spaces)
      if (s.weight == w) out.insert(out.end(), s.basis.begin(), s.basis.end());
    return out;
  }
  std::vector<Vec<F>> distinct_weights() const {
    std::vector<Vec<F>> out;
    for (const auto& s : spaces)
      if (std::find(out.begin(), out.end(), s.weight) == out.end()) out.push_back(s.weight);
    return out;
  }
};

// Matrices of ad h on the block of degree d, one per Cartan element, in block coordinates.
template <class F>
std::vector<Matrix<F>> cartan_action(const Realization<F>& r, const Degree& d) {
  const auto& g = r.alg;
  const auto& idx = g.block(d);
  std::map<size_t, size_t> local;
  for (size_t k = 0; k < idx.size(); ++k) local[idx[k]] = k;
  std::vector<Matrix<F>> out;
  for (const auto& h : r.cartan) {
    Sparse<F> hs = sparsify(h);
    Matrix<F> m(idx.size(), idx.size(), g.zero());
    for (size_t k = 0; k < idx.size(); ++k) {
      auto v = g.bracket_sparse(hs, Sparse<F>{{idx[k], one_like(g.zero())}});
      if (!v) fail(ErrorCode::Internal, "Cartan element outside degree 0");
      for (const auto& [i, c] : *v) {
        auto it = local.find(i);
        if (it == local.end()) fail(ErrorCode::NotDiagonalizable, "ad h does not preserve degrees");
        m(it->second, k) = c;
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// For bases made of joint eigenvectors of ad h. Throws NotDiagonalizable
// naming the first basis element that is not one.
template <class F>
WeightDecomposition<F> diagonal_weights(const Realization<F>& r) {
  const auto& g = r.alg;
  WeightDecomposition<F> out;
  for (const auto& [d, idx] : g.blocks()) {
    auto act = cartan_action(r, d);
    std::vector<Vec<F>> weights;
    std::vector<std::vector<Vec<F>>> bases;
    for (size_t k = 0; k < idx.size(); ++k) {
      Vec<F> w;
      for (const auto& m : act) {
        for (size_t i = 0; i < idx.size(); ++i)
          if (i != k && !is_zero(m(i, k)))
            fail(ErrorCode::NotDiagonalizable, g.basis(idx[k]).name + " is not a weight vector");
        w.push_back(m(k, k));
      }
      auto it = std::find(weights.begin(), weights.end(), w);
      if (it == weights.end()) {
        weights.push_back(w);
        bases.push_back({g.unit(idx[k])});
      } else {
        bases[it - weights.begin()].push_back(g.unit(idx[k]));
      }
    }
    for (size_t j = 0; j < weights.size(); ++j) out.spaces.push_back({d, weights[j], bases[j]});
  }
  return out;
}

// Joint eigenspaces of ad h on every block, trying the candidate weights
// supplied for that degree. Throws NotDiagonalizable when they do not exhaust a block.
template <class F>
WeightDecomposition<F> weight_decomposition(const Realization<F>& r,
                                            const std::function<std::vector<Vec<F>>(const Degree&)>& candidates) {
  const auto& g = r.alg;
  WeightDecomposition<F> out;
  for (const auto& [d, idx] : g.blocks()) {
    auto act = cartan_action(r, d);
    const size_t s = idx.size();
    size_t found = 0;
    std::vector<Vec<F>> tried;
    for (const auto& w : candidates(d)) {
      if (std::find(tried.begin(), tried.end(), w) != tried.end()) continue;
      tried.push_back(w);
      Matrix<F> stacked(act.size() * s, s, g.zero());
      for (size_t j = 0; j < act.size(); ++j)
        for (size_t a = 0; a < s; ++a) {
          for (size_t b = 0; b < s; ++b) stacked(j * s + a, b) = act[j](a, b);
          stacked(j * s + a, a) -= w[j];
        }
      auto ker = kernel(stacked);
      if (ker.empty()) continue;
      found += ker.size();
      WeightSpace<F> ws{d, w, {}};
      for (const auto& v : ker) {
        Vec<F> x(g.dim(), g.zero());
        for (size_t k = 0; k < s; ++k) x[idx[k]] = v[k];
        ws.basis.push_back(std::move(x));
      }
      out.spaces.push_back(std::move(ws));
    }
    if (found != s) {
      std::string deg;
      for (long x : d) deg += (deg.empty() ? "" : ",") + std::to_string(x);
      fail(ErrorCode::NotDiagonalizable, "ad h is not diagonalizable with the expected weights on degree (" + deg + ")");
    }
  }
  return out;
}

// Restriction to h^sigma of a weight given on the whole Cartan list.
template <class F>
Vec<F> restrict_weight(const FixedCartan<F>& fc, const Vec<F>& w) {
  Vec<F> out;
  for (const auto& k : fc.coords) {
    F v = zero_like(k[0]);
    for (size_t l = 0; l < k.size(); ++l) v += k[l] * w[l];
    out.push_back(v);
  }
  return out;
}

// Weights of h~ = h^sigma + F c + F d on Aff(g, sigma), from the weights of g.
template <class F>
WeightDecomposition<F> affinization_weights(const FixedAffinization<F>& fa, const WeightDecomposition<F>& gw) {
  std::map<Degree, std::vector<Vec<F>>> by_degree;
  for (const auto& s : gw.spaces) by_degree[s.degree].push_back(restrict_weight(fa.cartan, s.weight));
  const F zero = fa.real.alg.zero();
  return weight_decomposition<F>(fa.real, [&](const Degree& d) {
    Degree p(d.begin() + 1, d.end());
    std::vector<Vec<F>> out;
    auto it = by_degree.find(p);
    if (it == by_degree.end()) return out;
    for (auto w : it->second) {
      w.push_back(zero);               // c
      w.push_back(scalar(d[0], zero));  // d
      out.push_back(std::move(w));
    }
    return out;
  });
}

// The spaces g_{i, pi(alpha)}: h^sigma-weight spaces of each eigenspace g_i.
template <class F>
struct ResidueWeights {
  long period = 1;
  // residue -> decomposition of g_i (weights on the h^sigma basis)
  std::vector<WeightDecomposition<F>> per_residue;

  bool occurs(long residue, const Vec<F>& restricted) const {
    for (const auto& s : per_residue[residue].spaces)
      if (s.weight == restricted) return true;
    return false;
  }
};

template <class F>
ResidueWeights<F> residue_weights(const Realization<F>& g, const Eigenspaces<F>& eig, const FixedCartan<F>& fc,
                                  const WeightDecomposition<F>& gw) {
  const auto& alg = g.alg;
  std::map<Degree, std::vector<Vec<F>>> candidates;
  for (const auto& s : gw.spaces) {
    auto w = restrict_weight(fc, s.weight);
    auto& list = candidates[s.degree];
    if (std::find(list.begin(), list.end(), w) == list.end()) list.push_back(w);
  }
  std::vector<Sparse<F>> ks;
  for (const auto& k : fc.vectors) ks.push_back(sparsify(k));
  ResidueWeights<F> out;
  out.period = eig.period;
  out.per_residue.resize(eig.period);
  for (const auto& [key, basis] : eig.spaces) {
    const auto& [res, d] = key;
    const size_t s = basis.size();
    SpanChart<F> chart(basis, alg.dim(), alg.zero());
    std::vector<Matrix<F>> act;
    for (const auto& k : ks) {
      Matrix<F> m(s, s, alg.zero());
      for (size_t b = 0; b < s; ++b) {
        auto v = alg.bracket_sparse(k, sparsify(basis[b]));
        auto c = chart.coords(densify(*v, alg.dim(), alg.zero()));
        if (!c) fail(ErrorCode::Internal, "h^sigma does not preserve an eigenspace");
        for (size_t a = 0; a < s; ++a) m(a, b) = (*c)[a];
      }
      act.push_back(std::move(m));
    }
    size_t found = 0;
    for (const auto& w : candidates[d]) {
      Matrix<F> stacked(act.size() * s, s, alg.zero());
      for (size_t j = 0; j < act.size(); ++j)
        for (size_t a = 0; a < s; ++a) {
          for (size_t b = 0; b < s; ++b) stacked(j * s + a, b) = act[j](a, b);
          stacked(j * s + a, a) -= w[j];
        }
      auto ker = kernel(stacked);
      if (ker.empty()) continue;
      found += ker.size();
      WeightSpace<F> ws{d, w, {}};
      for (const auto& v : ker) ws.basis.push_back(chart.embed(v));
      out.per_residue[res].spaces.push_back(std::move(ws));
    }
    if (found != s) fail(ErrorCode::NotDiagonalizable, "h^sigma is not diagonalizable on an eigenspace");
  }
  return out;
}

// ---- root data from the window ---------------------------------------------------

// Value of each weight on the Cartan list, the dual form (inverse Gram matrix
// of the Cartan list), and delta_k = (c_k, .) for the central elements.
struct RootCoordinates {
  RatMatrix dual_form;
  std::vector<RatVector> deltas;
};

template <class F>
RootCoordinates root_coordinates(const Realization<F>& r) {
  const size_t n = r.cartan.size();
  RatMatrix gram(n, n, Rational(0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gram(i, j) = to_rational(r.alg.form(r.cartan[i], r.cartan[j]));
  auto inv = inverse(gram);
  if (!inv) fail(ErrorCode::InvalidArgument, "the form is degenerate on h");
  RootCoordinates rc{*inv, {}};
  for (const auto& c : r.centrals) {
    RatVector d;
    for (const auto& h : r.cartan) d.push_back(to_rational(r.alg.form(c, h)));
    rc.deltas.push_back(std::move(d));
  }
  return rc;
}

template <class F>
RatVector rational_weight(const Vec<F>& w) {
  RatVector out;
  for (const auto& x : w) out.push_back(to_rational(x));
  return out;
}

struct InferredDatum {
  ears::RootDatum datum;
  // every coset extended through the whole window reproduces the computed weights
  bool window_consistent = true;
  std::string inconsistency;
};

// Root datum whose cosets are read off the weights in the window: each finite
// part u = alpha - sum p_k delta_k occurs on a set of degrees, which is
// extended periodically with the least per-coordinate period visible inside
// the window (modulus 0 when none is). Needs one central element per grading
// coordinate, or none for a trivially graded algebra.
template <class F>
InferredDatum infer_root_datum(const Realization<F>& r, const WeightDecomposition<F>& w) {
  const auto& g = r.alg;
  const size_t k = g.grading_rank();
  auto rc = root_coordinates(r);
  if (rc.deltas.size() != k) fail(ErrorCode::InvalidArgument, "need one central element per grading coordinate");
  const long N = g.window();
  std::map<RatVector, std::set<Degree>> occurs;
  for (const auto& s : w.spaces) {
    RatVector u = rational_weight(s.weight);
    for (size_t j = 0; j < k; ++j) u = vsub(u, scale(Rational(s.degree[j]), rc.deltas[j]));
    occurs[u].insert(s.degree);
  }
  const auto box = degree_box(k, N);
  std::vector<ears::Coset> cosets;
  bool consistent = true;
  std::string inconsistency;
  for (const auto& [u, degs] : occurs) {
    std::vector<long> modulus(k, 0);
    for (size_t j = 0; j < k; ++j) {
      for (long M = 1; M <= N && modulus[j] == 0; ++M) {
        bool periodic = true;
        for (const auto& p : box) {
          if (p[j] + M > N) continue;
          Degree q = p;
          q[j] += M;
          if (degs.count(p) != degs.count(q)) {
            periodic = false;
            break;
          }
        }
        if (periodic) modulus[j] = M;
      }
    }
    std::set<std::vector<long>> keys;
    for (const auto& p : degs) {
      std::vector<long> key(k);
      for (size_t j = 0; j < k; ++j) key[j] = modulus[j] > 0 ? pos_mod(p[j], modulus[j]) : p[j];
      keys.insert(key);
    }
    for (const auto& key : keys) {
      ears::Coset c{u, {}};
      for (size_t j = 0; j < k; ++j) c.progressions.push_back({Rational(key[j]), modulus[j]});
      cosets.push_back(std::move(c));
    }
    for (const auto& p : box) {
      std::vector<long> key(k);
      for (size_t j = 0; j < k; ++j) key[j] = modulus[j] > 0 ? pos_mod(p[j], modulus[j]) : p[j];
      if (keys.count(key) && !degs.count(p) && consistent) {
        consistent = false;
        inconsistency = "finite part " + to_string(u) + " is missing from one degree of its progression";
      }
    }
  }
  return {ears::RootDatum::create(rc.dual_form, std::move(cosets), rc.deltas), consistent, inconsistency};
}

// sigma on weights (values on the Cartan list): (sigma alpha)(h) = alpha(sigma^-1 h).
template <class F>
Matrix<F> weight_action(const FixedCartan<F>& fc) {
  auto inv = inverse(fc.action);
  if (!inv) fail(ErrorCode::InvalidAutomorphism, "sigma is not invertible on h");
  return inv->transpose();
}

// sigma on the root space of g as a root-level automorphism.
template <class F>
autoroot::RootAutomorphism root_automorphism(const FixedCartan<F>& fc, long period, const ears::RootDatum& d) {
  const auto m = weight_action(fc);
  RatMatrix out(m.rows(), m.cols(), Rational(0));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = to_rational(m(i, j));
  return autoroot::RootAutomorphism::create(out, period, d);
}

// R_i = {alpha : g_{i, pi(alpha)} != 0}, tabulated over `period` steps of every moving coordinate.
template <class F>
autoroot::ResidueAssignment residues_from_algebra(const autoroot::RootAutomorphism& s, const ears::RootDatum& d,
                                                  const FixedCartan<F>& fc, const ResidueWeights<F>& rw,
                                                  const F& zero) {
  std::vector<std::vector<long>> periods(d.cosets().size(), std::vector<long>(d.lattice_rank(), s.period()));
  return autoroot::ResidueAssignment::from_function(s, d, periods, [&](const RatVector& alpha) {
    Vec<F> w;
    for (const auto& x : alpha) w.push_back(from_rational(x, zero));
    auto restricted = restrict_weight(fc, w);
    std::set<long> out;
    for (long i = 0; i < rw.period; ++i)
      if (rw.occurs(i, restricted)) out.insert(i);
    return out;
  });
}

}  // namespace eala::liealg
