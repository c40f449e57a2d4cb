#pragma once

// Affine generalized Cartan matrices, marks, diagram automorphisms and the
// real-root realization of the associated root datum.

#include <optional>
#include <string>
#include <vector>

#include "eala/ears.hpp"

namespace eala::gcm {

class GCM {
 public:
  // Checks a_ii = 2, a_ij <= 0 off the diagonal and a_ij = 0 iff a_ji = 0.
  static GCM create(std::vector<std::vector<long>> entries);

  size_t size() const { return a_.size(); }
  long operator()(size_t i, size_t j) const { return a_[i][j]; }
  const std::vector<std::vector<long>>& entries() const { return a_; }
  RatMatrix rational() const;
  GCM transpose() const;

 private:
  std::vector<std::vector<long>> a_;
};

struct Marks {
  std::vector<long> a;
};

struct DiagramAutomorphism {
  std::vector<int> perm;  // node i goes to perm[i]
  int period = 1;

  friend bool operator==(const DiagramAutomorphism& x, const DiagramAutomorphism& y) { return x.perm == y.perm; }
};

// Throws NotAffine unless ker A is a line spanned by a positive vector.
Marks validate_affine(const GCM& a);
// Positive rationals s with s_i a_ij symmetric, least entry 1. Throws
// NotSymmetrizable.
std::vector<Rational> symmetrizer(const GCM& a);
// Invariant form on the root lattice: (alpha_i, alpha_j) = s_i a_ij.
RatMatrix lattice_form(const GCM& a);

DiagramAutomorphism make_automorphism(const GCM& a, std::vector<int> perm);
// All node permutations preserving A, identity first, then lexicographic.
std::vector<DiagramAutomorphism> diagram_automorphisms(const GCM& a);
bool is_transitive(const DiagramAutomorphism& s);
// alpha_i -> alpha_{perm[i]} on root-lattice coordinates.
RatMatrix lattice_action(const DiagramAutomorphism& s);

struct Theorem48Verdict {
  bool empty_nonisotropic = false;
  bool tame_eala = false;
  std::optional<int> nullity;
};
Theorem48Verdict theorem_4_8_verdict(const GCM& a, const DiagramAutomorphism& s);

// Root datum of the affine algebra on root-lattice coordinates. Real roots are
// found by reflection search up to height bound * ht(delta) and compressed to
// delta-progressions; the result must agree with the one at bound + 1.
ears::RootDatum affine_root_datum(const GCM& a, int bound = 3);
// Positive real roots of height <= max_height, sorted.
std::vector<RatVector> positive_real_roots(const GCM& a, long max_height);

struct NamedGCM {
  std::string name;  // e.g. "A3(1)", "A4(2)", "D4(3)"
  GCM matrix;
};
// Untwisted and twisted affine matrices with at most max_nodes nodes.
std::vector<NamedGCM> curated_affine(size_t max_nodes);

}  // namespace eala::gcm
