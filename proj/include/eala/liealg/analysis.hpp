#pragma once

// Algebra-level checks of the affinization statements: cores, tameness, the
// core identity for Aff(g, sigma), the equivalent forms of the Cartan
// condition, the EA axioms, and agreement with the root-level affinization.

#include <optional>
#include <string>
#include <vector>

#include "eala/liealg/subspace.hpp"
#include "eala/liealg/weights.hpp"

namespace eala::liealg {

// Inverse Gram matrix of the Cartan list, over F.
template <class F>
Matrix<F> dual_form(const Realization<F>& r) {
  const size_t n = r.cartan.size();
  Matrix<F> gram(n, n, r.alg.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gram(i, j) = r.alg.form(r.cartan[i], r.cartan[j]);
  auto inv = inverse(gram);
  if (!inv) fail(ErrorCode::InvalidArgument, "the form is degenerate on h");
  return *inv;
}

// Inverse Gram matrix of h^sigma.
template <class F>
Matrix<F> fixed_dual_form(const Realization<F>& g, const FixedCartan<F>& fc) {
  const size_t n = fc.vectors.size();
  Matrix<F> gram(n, n, g.alg.zero());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gram(i, j) = g.alg.form(fc.vectors[i], fc.vectors[j]);
  auto inv = inverse(gram);
  if (!inv) fail(ErrorCode::InvalidArgument, "the form is degenerate on h^sigma");
  return *inv;
}

inline std::string degree_text(const Degree& d) {
  std::string s = "(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

template <class F>
std::string weight_text(const Vec<F>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + to_string(w[i]);
  return s + ")";
}

// ---- core and tameness -----------------------------------------------------------

template <class F>
std::vector<Vec<F>> nonisotropic_root_vectors(const WeightDecomposition<F>& w, const Matrix<F>& dual) {
  std::vector<Vec<F>> out;
  for (const auto& s : w.spaces)
    if (!is_zero(bilinear(dual, s.weight, s.weight))) out.insert(out.end(), s.basis.begin(), s.basis.end());
  return out;
}

template <class F>
struct Core {
  GradedSubspace<F> space;
  std::vector<Vec<F>> generators;
};

// Windowed subalgebra generated by the root spaces of nonisotropic roots.
template <class F>
Core<F> core(const Realization<F>& r, const WeightDecomposition<F>& w) {
  auto gens = nonisotropic_root_vectors(w, dual_form(r));
  return {generated_subalgebra(r.alg, gens), gens};
}

struct TamenessResult {
  bool tame = true;
  size_t degrees_checked = 0;
  std::string witness;
};

// C_g(g_c) inside g_c, degree by degree on the interior of the window.
template <class F>
TamenessResult tameness_check(const Realization<F>& r, const Core<F>& c, long margin = 1) {
  TamenessResult t;
  for (const auto& [d, idx] : r.alg.blocks()) {
    if (!r.alg.interior(d, margin)) continue;
    ++t.degrees_checked;
    for (const auto& x : centralizer_in_block(r.alg, d, c.generators))
      if (!c.space.contains(x) && t.tame) {
        t.tame = false;
        t.witness = vector_name(r.alg, x) + " centralizes the core but is not in it";
      }
  }
  return t;
}

// ---- the core of Aff(g, sigma) ------------------------------------------------------

struct CoreIdentityResult {
  bool holds = true;
  bool c_in_core = false;
  bool d_in_core = false;
  size_t degrees_compared = 0;
  std::string witness;
};

// Core of Aff(g, sigma) against (sum_i (g_c)_i (x) t^i) + F c on the interior.
template <class F>
CoreIdentityResult core_identity(const FixedAffinization<F>& fa, const Realization<F>& g, const Core<F>& aff_core,
                                 const Core<F>& g_core, const Eigenspaces<F>& eig, long margin = 1) {
  CoreIdentityResult res;
  const auto& alg = fa.real.alg;
  res.c_in_core = aff_core.space.contains(alg.unit(fa.c));
  res.d_in_core = aff_core.space.contains(alg.unit(fa.d));
  for (const auto& [d, idx] : alg.blocks()) {
    if (!alg.interior(d, margin)) continue;
    ++res.degrees_compared;
    const long i = d[0];
    Degree p(d.begin() + 1, d.end());
    auto expected = intersect(g_core.space.basis(p), eig.at(pos_mod(i, fa.period), p), g.alg.dim(), g.alg.zero());
    size_t want = expected.size();
    bool ok = true;
    for (const auto& v : expected) ok = ok && aff_core.space.contains(fa.element(i, v, g.alg));
    if (d == Degree(d.size(), 0)) {
      ++want;
      ok = ok && res.c_in_core;
    }
    if (aff_core.space.dim(d) != want) ok = false;
    if (!ok && res.holds) {
      res.holds = false;
      res.witness = "degree " + degree_text(d) + ": core has dimension " + std::to_string(aff_core.space.dim(d)) +
                    ", expected " + std::to_string(want);
    }
  }
  if (res.d_in_core && res.holds) {
    res.holds = false;
    res.witness = "d lies in the core";
  }
  return res;
}

struct CentralCommutator {
  bool found = false;  // some pair x, y with (x, y) != 0 fits the window
  bool holds = false;
  long k = 0;
  std::string pair;
};

// [x (x) t^k, y (x) t^-k] - [x (x) t^(k+m), y (x) t^(-k-m)] = -m (x, y) c
// for x in g_k, y in g_-k of opposite g-degrees; needs k + m <= N.
template <class F>
CentralCommutator central_commutator(const FixedAffinization<F>& fa, const Realization<F>& g, const Eigenspaces<F>& eig) {
  CentralCommutator out;
  const long m = fa.period;
  const auto& alg = fa.real.alg;
  for (long k = 1; k + m <= fa.window && !out.found; ++k)
    for (const auto& [key, xs] : eig.spaces) {
      if (key.first != pos_mod(k, m) || out.found) continue;
      const auto& ys = eig.at(pos_mod(-k, m), degree_neg(key.second));
      for (const auto& x : xs) {
        for (const auto& y : ys) {
          F f = g.alg.form(x, y);
          if (is_zero(f)) continue;
          auto a = alg.bracket(fa.element(k, x, g.alg), fa.element(-k, y, g.alg));
          auto b = alg.bracket(fa.element(k + m, x, g.alg), fa.element(-k - m, y, g.alg));
          out.found = true;
          out.k = k;
          out.pair = vector_name(g.alg, x) + ", " + vector_name(g.alg, y);
          Vec<F> expected(alg.dim(), alg.zero());
          expected[fa.c] = -scalar(m, alg.zero()) * f;
          out.holds = a && b && vsub(*a, *b) == expected;
          break;
        }
        if (out.found) break;
      }
    }
  return out;
}

// ---- the Cartan condition in its equivalent forms --------------------------------------

struct CartanConditions {
  bool i = false;    // C(h~) = h~ in Aff(g, sigma)
  bool ii = false;   // C_{g^sigma}(h^sigma) = h^sigma
  bool iii = false;  // pi(alpha) != 0 or sigma^l fixes nothing in g_alpha
  std::optional<bool> iv;  // m prime: pi(alpha) != 0 for alpha != 0
  std::string witness_i, witness_ii, witness_iii, witness_iv;
  bool agree() const { return i == ii && ii == iii && (!iv || *iv == i); }
};

template <class F>
CartanConditions cartan_conditions(const Realization<F>& g, const Automorphism<F>& s, const FixedAffinization<F>& fa,
                                   const WeightDecomposition<F>& gw, const WeightDecomposition<F>& aw,
                                   const ResidueWeights<F>& rw) {
  CartanConditions c;
  const F zero = g.alg.zero();
  // (i)
  Vec<F> aff_zero(fa.real.cartan.size(), zero);
  size_t z = aw.dim_of_weight(aff_zero);
  c.i = z == fa.real.cartan.size();
  if (!c.i) c.witness_i = "weight-0 space of Aff(g, sigma) has dimension " + std::to_string(z) + " > dim h~ = " +
                          std::to_string(fa.real.cartan.size());
  // (ii)
  Vec<F> fixed_zero(fa.cartan.vectors.size(), zero);
  size_t z2 = rw.per_residue[0].dim_of_weight(fixed_zero);
  c.ii = z2 == fa.cartan.vectors.size();
  if (!c.ii) c.witness_ii = "centralizer of h^sigma in g^sigma has dimension " + std::to_string(z2) + " > dim h^sigma = " +
                            std::to_string(fa.cartan.vectors.size());
  // (iii), (iv)
  const long m = s.period;
  const auto act = weight_action(fa.cartan);
  c.iii = true;
  bool iv = true;
  for (const auto& alpha : gw.distinct_weights()) {
    if (is_zero_vector(alpha)) continue;
    if (!is_zero_vector(restrict_weight(fa.cartan, alpha))) continue;
    if (iv) {
      iv = false;
      c.witness_iv = "pi" + weight_text(alpha) + " = 0";
    }
    long len = 1;
    for (Vec<F> b = act.apply(alpha); b != alpha; b = act.apply(b)) ++len;
    auto space = gw.space_of(alpha);
    Matrix<F> diff(g.alg.dim(), space.size(), zero);
    for (size_t j = 0; j < space.size(); ++j) {
      Vec<F> v = space[j];
      for (long t = 0; t < len; ++t) v = s.matrix.apply(v);
      for (size_t a = 0; a < g.alg.dim(); ++a) diff(a, j) = v[a] - space[j][a];
    }
    if (!kernel(diff).empty() && c.iii) {
      c.iii = false;
      c.witness_iii = "sigma^" + std::to_string(len) + " fixes a nonzero vector of g_alpha for alpha = " + weight_text(alpha);
    }
  }
  if (autoroot::is_prime(m)) {
    c.iv = iv;
  }
  return c;
}

// ---- EA axioms -------------------------------------------------------------------------

struct EaAxioms {
  CheckResult ea1, ea2, ea3, ea4;
  bool ea5a = false, ea5b = false;
  std::optional<ears::EalaRootReport> roots;
  std::string roots_error;  // set when R has no nonisotropic roots
  bool first_four() const { return ea1.holds && ea2.holds && ea3.holds && ea4.holds; }
  bool all() const { return first_four() && ea5a && ea5b; }
};

// Axioms EA1-EA5b on the window. EA3 combines direct nilpotency of ad x on the
// window with a string certificate: for nonisotropic alpha every alpha-string
// beta + k alpha leaves R within 5 steps (strings in finite, possibly
// non-reduced, root systems have at most 5 elements). EA4 is certified by a
// common denominator of R over a basis drawn from R.
template <class F>
EaAxioms ea_axioms(const Realization<F>& r, const WeightDecomposition<F>& w, const ears::RootDatum& datum) {
  EaAxioms out;
  const auto& g = r.alg;
  const F zero = g.zero();
  auto sym = check_form_symmetric(g), inv = check_invariance(g), nd = check_form_nondegenerate(g);
  out.ea1 = {sym.holds && inv.holds && nd.holds, sym.checked + inv.checked + nd.checked,
             !sym.holds ? sym.witness : !inv.holds ? inv.witness : nd.witness};
  // EA2: h abelian, ad h diagonalizable (w exists), g_0 = h
  out.ea2.holds = true;
  for (size_t a = 0; a < r.cartan.size(); ++a)
    for (size_t b = a + 1; b < r.cartan.size(); ++b) {
      ++out.ea2.checked;
      auto v = g.bracket(r.cartan[a], r.cartan[b]);
      if ((!v || !is_zero_vector(*v)) && out.ea2.holds) out.ea2 = {false, out.ea2.checked, "h is not abelian"};
    }
  size_t z = w.dim_of_weight(Vec<F>(r.cartan.size(), zero));
  ++out.ea2.checked;
  if (z != r.cartan.size() && out.ea2.holds)
    out.ea2 = {false, out.ea2.checked, "g_0 has dimension " + std::to_string(z) + " but h has dimension " + std::to_string(r.cartan.size())};
  // EA3
  const auto dual = dual_form(r);
  out.ea3.holds = true;
  auto weights = w.distinct_weights();
  std::vector<RatVector> rweights;
  for (const auto& x : weights) rweights.push_back(rational_weight(x));
  for (size_t ia = 0; ia < weights.size(); ++ia) {
    const auto& alpha = weights[ia];
    if (is_zero(bilinear(dual, alpha, alpha))) continue;
    for (const auto& beta : rweights) {
      ++out.ea3.checked;
      bool leaves = false;
      for (long k = 1; k <= 5 && !leaves; ++k) leaves = !datum.contains(vadd(beta, scale(Rational(k), rweights[ia])));
      if (!leaves && out.ea3.holds)
        out.ea3 = {false, out.ea3.checked, "the alpha-string through " + to_string(beta) + " does not end, alpha = " + to_string(rweights[ia])};
    }
    for (const auto& x : w.space_of(alpha)) {
      Sparse<F> xs = sparsify(x);
      for (size_t y = 0; y < g.dim(); ++y) {
        ++out.ea3.checked;
        Sparse<F> cur{{y, one_like(zero)}};
        for (size_t step = 0; step <= g.dim() && !cur.empty(); ++step) {
          auto next = g.bracket_sparse(xs, cur);
          if (!next) {
            cur.clear();
            break;
          }
          cur = std::move(*next);
          if (step == g.dim() && !cur.empty() && out.ea3.holds)
            out.ea3 = {false, out.ea3.checked, "ad x is not nilpotent on " + g.basis(y).name};
        }
      }
    }
  }
  // EA4
  {
    auto gens = datum.span_generators();
    auto basis = span_basis(gens, datum.dim(), Rational(0));
    Integer denom = 1;
    bool ok = true;
    for (const auto& v : gens) {
      ++out.ea4.checked;
      auto c = coordinates(basis, v, Rational(0));
      if (!c) {
        ok = false;
        continue;
      }
      for (const auto& x : *c) denom = lcm(denom, Integer(x.get_den()));
    }
    out.ea4.holds = ok;
    out.ea4.witness = ok ? "R lies in (1/" + denom.get_str() + ") Z-span of a basis of span(R)" : "span generators outside the chosen basis";
  }
  try {
    out.ea5a = ears::check_EA5a(datum);
    out.ea5b = ears::check_EA5b(datum).ok;
    out.roots = ears::report(datum);
  } catch (const Error& e) {
    out.roots_error = e.what();
  }
  return out;
}

// ---- weight spaces ---------------------------------------------------------------------

// (g_alpha, g_beta) = 0 unless alpha + beta = 0.
template <class F>
CheckResult weight_orthogonality(const Realization<F>& r, const WeightDecomposition<F>& w) {
  CheckResult out;
  const auto& g = r.alg;
  for (const auto& a : w.spaces)
    for (const auto& b : w.spaces) {
      if (degree_sum(a.degree, b.degree) != Degree(g.grading_rank(), 0)) continue;
      if (is_zero_vector(vadd(a.weight, b.weight))) continue;
      for (const auto& x : a.basis)
        for (const auto& y : b.basis) {
          ++out.checked;
          if (!is_zero(g.form(x, y)) && out.holds)
            out = {false, out.checked, "(g_alpha, g_beta) != 0 for alpha = " + weight_text(a.weight) + ", beta = " + weight_text(b.weight)};
        }
    }
  return out;
}

// dim g_alpha = 1 for every nonisotropic alpha.
template <class F>
CheckResult nonisotropic_multiplicity_one(const Realization<F>& r, const WeightDecomposition<F>& w) {
  CheckResult out;
  const auto dual = dual_form(r);
  for (const auto& alpha : w.distinct_weights()) {
    if (is_zero(bilinear(dual, alpha, alpha))) continue;
    ++out.checked;
    size_t d = w.dim_of_weight(alpha);
    if (d != 1 && out.holds) out = {false, out.checked, "dim g_alpha = " + std::to_string(d) + " for alpha = " + weight_text(alpha)};
  }
  return out;
}

// ---- the two descriptions of the core of g ------------------------------------------------

struct CoreDescriptions {
  bool applicable = false;  // some alpha with (pi alpha, pi alpha) != 0
  bool generated_by_projected = false;  // core = <g_alpha : (pi alpha, pi alpha) != 0>
  bool sum_plus_commutators = false;    // core = s + [s, s], s = sum of g_{i, pi alpha} with (pi alpha, pi alpha) != 0
  size_t degrees_compared = 0;
  std::string witness;
};

template <class F>
CoreDescriptions core_descriptions(const Realization<F>& g, const FixedAffinization<F>& fa, const WeightDecomposition<F>& gw,
                                   const ResidueWeights<F>& rw, const Core<F>& g_core, long margin = 1) {
  CoreDescriptions out;
  const auto& alg = g.alg;
  const auto fdual = fa.cartan.vectors.empty() ? Matrix<F>(0, 0, alg.zero()) : fixed_dual_form(g, fa.cartan);
  auto projected_nonisotropic = [&](const Vec<F>& restricted) {
    return !restricted.empty() && !is_zero(bilinear(fdual, restricted, restricted));
  };
  std::vector<Vec<F>> gens;
  for (const auto& s : gw.spaces)
    if (projected_nonisotropic(restrict_weight(fa.cartan, s.weight))) gens.insert(gens.end(), s.basis.begin(), s.basis.end());
  out.applicable = !gens.empty();
  if (!out.applicable) return out;
  auto generated = generated_subalgebra(alg, gens);

  GradedSubspace<F> sum(alg);
  std::vector<Vec<F>> pieces;
  for (const auto& dec : rw.per_residue)
    for (const auto& s : dec.spaces)
      if (projected_nonisotropic(s.weight))
        for (const auto& v : s.basis) {
          sum.add(v);
          pieces.push_back(v);
        }
  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = a + 1; b < pieces.size(); ++b) {
      if (!alg.in_window(degree_sum(alg.degree_of(pieces[a]), alg.degree_of(pieces[b])))) continue;
      auto v = alg.bracket(pieces[a], pieces[b]);
      if (v && !is_zero_vector(*v)) sum.add(*v);
    }

  out.generated_by_projected = true;
  out.sum_plus_commutators = true;
  for (const auto& [d, idx] : alg.blocks()) {
    if (!alg.interior(d, margin)) continue;
    ++out.degrees_compared;
    const auto core_basis = g_core.space.basis(d);
    auto same = [&](const GradedSubspace<F>& other) {
      if (other.dim(d) != core_basis.size()) return false;
      for (const auto& v : core_basis)
        if (!other.contains(v)) return false;
      return true;
    };
    if (!same(generated) && out.generated_by_projected) {
      out.generated_by_projected = false;
      out.witness = "generated subalgebra differs from the core in degree " + degree_text(d);
    }
    if (!same(sum) && out.sum_plus_commutators) {
      out.sum_plus_commutators = false;
      if (out.witness.empty()) out.witness = "s + [s, s] differs from the core in degree " + degree_text(d);
    }
  }
  return out;
}

// ---- agreement with the root-level affinization -----------------------------------------

struct RootAgreement {
  bool holds = false;
  size_t algebra_roots = 0;
  size_t datum_roots = 0;
  std::string witness;
};

// Weights of Aff(g, sigma) in the window against autoroot's R~, both written
// as values on h~ = (h^sigma basis, c, d).
template <class F>
RootAgreement root_agreement(const FixedAffinization<F>& fa, const Realization<F>& g, const WeightDecomposition<F>& aw,
                             const autoroot::RootAutomorphism& s, const ears::RootDatum& gd,
                             const ears::RootDatum& affinized) {
  RootAgreement out;
  std::set<RatVector> from_algebra;
  for (const auto& x : aw.distinct_weights()) from_algebra.insert(rational_weight(x));
  auto sp = autoroot::affinized_space(s, gd);
  // degrees of g are the values on its derivations
  std::vector<RatVector> deriv_coords;
  if (!g.derivations.empty()) {
    SpanChart<F> chart(g.cartan, g.alg.dim(), g.alg.zero());
    for (const auto& dv : g.derivations) {
      auto c = chart.coords(dv);
      if (!c) fail(ErrorCode::InvalidArgument, "derivations must lie in h");
      deriv_coords.push_back(rational_weight(*c));
    }
  }
  std::vector<RatVector> kappa;
  for (const auto& k : fa.cartan.coords) kappa.push_back(rational_weight(k));
  std::set<RatVector> from_datum;
  for (const auto& x : affinized.sample(fa.window + 1)) {
    RatVector v(gd.dim(), Rational(0));
    for (size_t l = 0; l < sp.fixed_basis.size(); ++l) v = vadd(v, scale(x[l], sp.fixed_basis[l]));
    const Rational& loop = x[sp.delta_index];
    bool inside = is_integer(loop) && abs(loop) <= fa.window;
    for (const auto& dc : deriv_coords) {
      Rational deg(0);
      for (size_t l = 0; l < dc.size(); ++l) deg += dc[l] * v[l];
      inside = inside && is_integer(deg) && abs(deg) <= fa.window;
    }
    if (!inside) continue;
    RatVector val;
    for (const auto& k : kappa) {
      Rational t(0);
      for (size_t l = 0; l < k.size(); ++l) t += k[l] * v[l];
      val.push_back(t);
    }
    val.push_back(x[sp.gamma_index]);
    val.push_back(loop);
    from_datum.insert(val);
  }
  out.algebra_roots = from_algebra.size();
  out.datum_roots = from_datum.size();
  out.holds = from_algebra == from_datum;
  if (!out.holds) {
    for (const auto& v : from_algebra)
      if (!from_datum.count(v)) {
        out.witness = "weight " + to_string(v) + " of the algebra is missing from R~";
        break;
      }
    if (out.witness.empty())
      for (const auto& v : from_datum)
        if (!from_algebra.count(v)) {
          out.witness = "root " + to_string(v) + " of R~ is not a weight of the algebra";
          break;
        }
  }
  return out;
}

// ---- everything computed for one (g, sigma, window) ----------------------------------------

template <class F>
struct Study {
  Realization<F> g;
  Automorphism<F> sigma;
  long window = 0;
  WeightDecomposition<F> g_weights;
  Eigenspaces<F> eig;
  FixedAffinization<F> aff;
  WeightDecomposition<F> aff_weights;
  ResidueWeights<F> residues;
};

template <class F>
Study<F> study(Realization<F> g, Automorphism<F> sigma, long window) {
  Study<F> s;
  s.g = std::move(g);
  s.sigma = std::move(sigma);
  s.window = window;
  s.g_weights = diagonal_weights(s.g);
  s.eig = eigenspaces(s.g.alg, s.sigma);
  s.aff = fixed_subalgebra(s.g, s.sigma, window);
  s.aff_weights = affinization_weights(s.aff, s.g_weights);
  s.residues = residue_weights(s.g, s.eig, s.aff.cartan, s.g_weights);
  return s;
}

}  // namespace eala::liealg
