#pragma once

// Extended-affine root data. A possibly infinite root set R is stored as a
// finite list of cosets
//
//     rep + sum_k (offset_k + modulus_k * Z) * delta_k
//
// over a fixed basis delta_1..delta_k of isotropic directions; modulus 0 means
// the coordinate along delta_k is exactly offset_k.

#include <optional>
#include <string>
#include <vector>

#include "eala/linalg.hpp"
#include "eala/rootsys.hpp"

namespace eala::ears {

struct Progression {
  Rational offset{0};
  long modulus = 0;

  friend bool operator==(const Progression& a, const Progression& b) {
    return a.offset == b.offset && a.modulus == b.modulus;
  }
  friend bool operator<(const Progression& a, const Progression& b) {
    if (a.modulus != b.modulus) return a.modulus < b.modulus;
    return a.offset < b.offset;
  }
};

struct Coset {
  RatVector rep;
  std::vector<Progression> progressions;  // one per isotropic generator

  friend bool operator==(const Coset& a, const Coset& b) {
    return a.rep == b.rep && a.progressions == b.progressions;
  }
  friend bool operator<(const Coset& a, const Coset& b) {
    if (a.rep != b.rep) return a.rep < b.rep;
    return a.progressions < b.progressions;
  }
};

class RootDatum {
 public:
  // Validates and canonicalizes: reps carry no component along the isotropic
  // generators (with respect to a fixed completion of them to a basis), offsets
  // are reduced modulo their modulus, cosets are sorted and deduplicated.
  // Throws NotSemidefinite (with a witness), Schema or InvalidArgument.
  static RootDatum create(RatMatrix form, std::vector<Coset> cosets, std::vector<RatVector> isotropic_basis);
  // Finite data: every root its own coset, no isotropic generators.
  static RootDatum finite(const std::vector<RatVector>& roots, const RatMatrix& form);
  static RootDatum from_system(const rootsys::FiniteRootSystem& sys);

  size_t dim() const { return form_.rows(); }
  const RatMatrix& form() const { return form_; }
  const std::vector<Coset>& cosets() const { return cosets_; }
  const std::vector<RatVector>& isotropic_basis() const { return isotropic_; }
  size_t lattice_rank() const { return isotropic_.size(); }

  Rational pair(const RatVector& x, const RatVector& y) const { return bilinear(form_, x, y); }
  Rational norm(const Coset& c) const { return pair(c.rep, c.rep); }
  bool isotropic(const Coset& c) const { return is_zero(norm(c)); }

  // Scale the form so the least nonzero (alpha, alpha) over R^x is 2.
  RootDatum normalized() const;

  bool contains(const RatVector& v) const;
  // Explicit roots with every progression index in [-bound, bound].
  std::vector<RatVector> sample(long bound) const;
  // Elements rep + sum z_k modulus_k delta_k of the coset (offsets included).
  RatVector element(const Coset& c, const std::vector<long>& z) const;

  // Generators of span(R): reps plus the directions with a nonzero modulus.
  std::vector<RatVector> span_generators() const;

  // Split of v into (component off the isotropic generators, coordinates along them).
  std::pair<RatVector, RatVector> decompose(const RatVector& v) const;

 private:
  RootDatum() = default;
  void build_chart();

  RatMatrix form_;
  std::vector<Coset> cosets_;
  std::vector<RatVector> isotropic_;
  SpanChart<Rational> chart_;  // isotropic generators first, then unit vectors
};

struct SplitRoots {
  std::vector<Coset> isotropic;
  std::vector<Coset> nonisotropic;
};

struct EA5bResult {
  bool ok = true;
  std::optional<RatVector> failing_delta;
};

struct EalaRootReport {
  int nullity = 0;
  std::optional<rootsys::TypeLabel> type;
  size_t isotropic_count = 0;
  size_t nonisotropic_count = 0;
  bool ea5a = false;
  bool ea5b = false;
  bool nondegenerate = false;
};

// Basis of V^0, the radical of the form on span(R).
std::vector<RatVector> radical(const RootDatum& d);
SplitRoots split_roots(const RootDatum& d);
// Image of R in span(R)/V^0 with the induced form. Throws NotApplicable when
// R^x is empty.
rootsys::FiniteRootSystem bar_image(const RootDatum& d);
// Image of the vectors in span/radical with the induced definite form. The
// form must be positive semidefinite on their span.
rootsys::FiniteRootSystem quotient_system(const std::vector<RatVector>& vectors, const RatMatrix& form);
bool check_EA5a(const RootDatum& d);
EA5bResult check_EA5b(const RootDatum& d);
bool check_nondegenerate(const RootDatum& d);
EalaRootReport report(const RootDatum& d);

// First element of the target coset outside R, if any.
std::optional<RatVector> coset_gap(const RootDatum& d, const Coset& target);

// Violated datum invariant (0 in R, -R = R, (R^0, R^x) = 0), if any.
std::optional<std::string> datum_violation(const RootDatum& d);

}  // namespace eala::ears
