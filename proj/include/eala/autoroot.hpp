#pragma once

// Finite-order automorphisms of root data and the root-level description of
// the affinization.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "eala/ears.hpp"

namespace eala::autoroot {

class RootAutomorphism {
 public:
  // Checks sigma^m = 1, form preservation, sigma(delta_k) = delta_k for every
  // isotropic generator, and sigma(R) = R. Throws InvalidAutomorphism.
  static RootAutomorphism create(RatMatrix matrix, long period, const ears::RootDatum& d);

  const RatMatrix& matrix() const { return matrix_; }
  long period() const { return period_; }
  RatVector apply(const RatVector& v) const { return matrix_.apply(v); }
  // Matrix of pi = (1/m) sum sigma^i.
  const RatMatrix& averaging() const { return pi_; }

 private:
  RootAutomorphism(RatMatrix matrix, long period);

  RatMatrix matrix_;
  long period_ = 1;
  RatMatrix pi_;
};

RatVector pi(const RootAutomorphism& s, const RatVector& alpha);
long sigma_length(const RootAutomorphism& s, const ears::RootDatum& d, const RatVector& alpha);

struct Criterion {
  bool holds = false;
  std::optional<RatVector> witness;
};
// Some alpha in R with (pi(alpha), pi(alpha)) != 0.
Criterion criterion_3_64(const RootAutomorphism& s, const ears::RootDatum& d);
// pi(alpha) != 0 for every nonzero alpha in R; the witness is a failing alpha.
Criterion condition_iv(const RootAutomorphism& s, const ears::RootDatum& d);

struct Cor365 {
  bool sufficient = false;
  // Set only when m is prime: then the verdict is decided either way.
  std::optional<bool> necessary_given_prime;
  // "tame_eala", "not_tame_eala" or "undetermined".
  std::string status;
};
Cor365 corollary_3_65_verdict(const RootAutomorphism& s, const ears::RootDatum& d);

// bar-pi(bar-R) with the induced definite form. Throws CriterionFails when
// criterion_3_64 fails.
rootsys::FiniteRootSystem affinized_bar_roots(const RootAutomorphism& s, const ears::RootDatum& d);
// Basis of (V^0)^sigma.
std::vector<RatVector> fixed_radical(const RootAutomorphism& s, const ears::RootDatum& d);
int affinized_nullity(const RootAutomorphism& s, const ears::RootDatum& d);

// Residues of the elements of each coset of R: the element with progression
// index z lies in R_i for each i in table[z mod period].
struct CosetResidues {
  std::vector<long> period;
  std::map<std::vector<long>, std::set<long>> table;
};

class ResidueAssignment {
 public:
  // Checks coverage, pi-compatibility and -R_i = R_{-i} on a sample window.
  // Throws InconsistentResidues.
  static ResidueAssignment create(const RootAutomorphism& s, const ears::RootDatum& d,
                                  std::vector<CosetResidues> per_coset);
  // sigma = id: every root in R_0.
  static ResidueAssignment trivial(const RootAutomorphism& s, const ears::RootDatum& d);
  // Tabulates fn(alpha) over one period of every coset.
  static ResidueAssignment from_function(const RootAutomorphism& s, const ears::RootDatum& d,
                                         const std::vector<std::vector<long>>& periods,
                                         const std::function<std::set<long>(const RatVector&)>& fn);

  long modulus() const { return m_; }
  const std::vector<CosetResidues>& per_coset() const { return per_coset_; }
  // Residues of a root of R (union over the cosets containing it).
  std::set<long> residues(const ears::RootDatum& d, const RatVector& alpha) const;

 private:
  long m_ = 1;
  std::vector<CosetResidues> per_coset_;
};

struct AffinizedSpace {
  std::vector<RatVector> fixed_basis;  // basis of the sigma-fixed subspace
  size_t delta_index = 0;              // coordinate of delta~
  size_t gamma_index = 0;              // coordinate of gamma~
  RatMatrix form;
  // Coordinates of a sigma-fixed vector followed by (delta~, gamma~) = (i, 0).
  RatVector embed(const RatVector& fixed_vector, const Rational& delta_coeff) const;
};
AffinizedSpace affinized_space(const RootAutomorphism& s, const ears::RootDatum& d);

// R~ = union over i of (pi(R_i) + i delta~) on fixed-space coordinates
// followed by delta~ and gamma~.
ears::RootDatum affinized_root_datum(const RootAutomorphism& s, const ears::RootDatum& d,
                                     const ResidueAssignment& residues);

struct Transfer {
  bool holds = false;
  size_t fixed_radical_dim = 0;
  size_t affinized_radical_dim = 0;
};
// Structural identity V~^0 = (V^0)^sigma + Q delta~ (direct). Throws
// NotApplicable on degenerate input.
Transfer nondegeneracy_transfer(const RootAutomorphism& s, const ears::RootDatum& d);

struct AffinizationReport {
  bool criterion_3_64 = false;
  std::optional<RatVector> witness;
  std::string verdict;  // "tame_eala" or "empty_nonisotropic"
  std::optional<rootsys::TypeLabel> type;
  std::optional<int> nullity;
  bool nondegenerate = false;
  std::optional<rootsys::FiniteRootSystem> bar_projected_roots;
  Cor365 corollary;
};
// Assumes the input comes from a tame EALA, as the verdict requires.
AffinizationReport affinization_report(const RootAutomorphism& s, const ears::RootDatum& d);

bool is_prime(long m);

}  // namespace eala::autoroot
