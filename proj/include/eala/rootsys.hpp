#pragma once

// Finite irreducible root systems, possibly non-reduced, with 0 adjoined.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eala/linalg.hpp"

namespace eala::rootsys {

enum class Family { A, B, C, D, E, F, G, BC };

struct TypeLabel {
  Family family = Family::A;
  int rank = 1;

  static TypeLabel parse(const std::string& text);  // "A2", "BC1", "E8", ...
  std::string to_string() const;
  bool admissible() const;
  // Representative under the low-rank coincidences B1 = C1 = A1, C2 = B2,
  // D3 = A3. Two labels name isomorphic systems iff their canonical forms match.
  TypeLabel canonical() const;

  friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
    TypeLabel x = a.canonical(), y = b.canonical();
    return x.family == y.family && x.rank == y.rank;
  }
  friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
};

// All canonical admissible labels with rank <= max_rank (BC included).
std::vector<TypeLabel> canonical_labels(int max_rank);

class FiniteRootSystem {
 public:
  // Validates every root-system axiom; throws Error(NotRootSystem) naming the
  // first violated one. The vectors must span the ambient space.
  static FiniteRootSystem create(std::vector<RatVector> roots, RatMatrix form);
  // Rewrites the vectors in coordinates of a basis of their span first, so the
  // input may live in a larger space with a form that is only semidefinite
  // away from that span.
  static FiniteRootSystem from_span(const std::vector<RatVector>& vectors, const RatMatrix& form);

  size_t ambient_dim() const { return form_.rows(); }
  const std::vector<RatVector>& roots() const { return roots_; }  // 0 first, sorted
  std::vector<RatVector> nonzero_roots() const;
  const RatMatrix& form() const { return form_; }
  Rational pair(const RatVector& x, const RatVector& y) const { return bilinear(form_, x, y); }
  bool contains(const RatVector& v) const;

 private:
  FiniteRootSystem(std::vector<RatVector> roots, RatMatrix form)
      : roots_(std::move(roots)), form_(std::move(form)) {}

  std::vector<RatVector> roots_;
  RatMatrix form_;
};

// Diagnostic naming the first violated axiom, or nullopt if the vectors form a
// finite irreducible root system (0 allowed) spanning the ambient space.
std::optional<std::string> root_system_violation(const std::vector<RatVector>& roots, const RatMatrix& form);

FiniteRootSystem build_finite(const TypeLabel& label);
// Symmetrized Gram matrix of the simple roots of a reduced type (not BC).
RatMatrix simple_root_gram(const TypeLabel& label);

// w_alpha(beta) = beta - 2 (beta, alpha)/(alpha, alpha) alpha.
RatVector reflect(const RatMatrix& form, const RatVector& alpha, const RatVector& beta);
inline RatVector reflect(const FiniteRootSystem& sys, const RatVector& alpha, const RatVector& beta) {
  return reflect(sys.form(), alpha, beta);
}

// Form-orthogonal projection of the ambient space onto span(Y).
class Projection {
 public:
  Projection(const RatMatrix& form, const std::vector<RatVector>& subspace);
  RatVector apply(const RatVector& x) const { return matrix_.apply(x); }
  const RatMatrix& matrix() const { return matrix_; }

 private:
  RatMatrix matrix_;
};

// p(Omega^x) as a deduplicated, sorted list (0 kept if some root projects to 0).
std::vector<RatVector> project(const FiniteRootSystem& sys, const std::vector<RatVector>& subspace);

struct ProjectionLemmaResult {
  bool part_i = false;   // every root has a visible partner it pairs with
  bool part_ii = false;  // p(Omega^x) \ {0} is orthogonality-connected
  bool visible_closure = false;  // Delta == Delta_nv
  std::vector<std::pair<RatVector, RatVector>> witnesses;  // alpha -> beta for part (i)
  std::vector<RatVector> visible;
  std::vector<RatVector> nearly_visible;
};

ProjectionLemmaResult check_projection_lemma(const FiniteRootSystem& sys,
                                             const std::vector<RatVector>& subspace);

// Graph on the vectors with an edge whenever (x, y) != 0.
bool orthogonality_connected(const std::vector<RatVector>& vectors, const RatMatrix& form);

// Type of a finite irreducible root system (0 ignored) up to isometry and
// scaling. Throws Error(NotRootSystem) with the violated axiom.
TypeLabel recognize_type(const std::vector<RatVector>& roots, const RatMatrix& form);

}  // namespace eala::rootsys
