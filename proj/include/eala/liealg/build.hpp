#pragma once

// Concrete algebras: sl_n, sl_n over a quantum torus, current (toroidal)
// algebras, loop algebras and affinizations, together with the automorphisms
// used in the examples.

#include <functional>

#include "eala/coords.hpp"
#include "eala/liealg/algebra.hpp"

namespace eala::liealg {

// An algebra with a distinguished abelian subalgebra h, and when present the
// central elements c_k and derivations d_k with [d_k, x] = deg_k(x) x and
// (c_k, d_l) = delta_kl, one per grading coordinate.
template <class F>
struct Realization {
  GradedAlgebra<F> alg;
  std::vector<Vec<F>> cartan;
  std::vector<Vec<F>> centrals;
  std::vector<Vec<F>> derivations;
};

template <class F>
struct Automorphism {
  Matrix<F> matrix;  // column j is the image of basis element j
  long period = 1;
};

// ---- sl_n over a quantum torus -------------------------------------------------

struct MatrixTerm {
  size_t row, col;
  Rational coeff;
};

struct CoordinatedSl {
  Realization<Rational> real;
  int n = 0;
  coords::QuantumTorus torus = coords::QuantumTorus::commutative(0);
  // matrix entries of each basis element of K (empty for c_k, d_k)
  std::vector<std::vector<MatrixTerm>> terms;
  std::vector<bool> in_k;
  // Coordinates in K of a homogeneous matrix {(row, col) -> coeff} of degree p.
  std::function<Sparse<Rational>(const Degree&, const std::map<std::pair<size_t, size_t>, Rational>&)> decompose;
};

// K = sl_n(A) truncated to degrees in [-N, N]^nu with (x, y) = scale * eps(tr(xy)),
// plus c_k, d_k when with_center (bracket and form of the toroidal
// construction). nu = 0 gives sl_n itself. q must be +-1.
CoordinatedSl coordinated_sl(int n, const coords::QuantumTorus& t, long window, const Rational& form_scale,
                             bool with_center);

// sl_n with (x, y) = 2n tr(xy) and h = trace-zero diagonal matrices.
CoordinatedSl sl(int n);

// x -> f(x) for a linear map f on matrices over the torus that preserves K;
// the C and D parts are fixed.
Automorphism<Rational> matrix_automorphism(const CoordinatedSl& g,
                                           const std::function<coords::TorusMatrix<Rational>(
                                               const coords::TorusMatrix<Rational>&)>& f,
                                           long period);

// x -> -x^* with (a_ij)^* = (reversal(a_{n+1-j, n+1-i})).
Automorphism<Rational> minus_star(const CoordinatedSl& g);
// Chevalley involution x -> -x^T (requires a commutative torus).
Automorphism<Rational> chevalley(const CoordinatedSl& g);
// x -> P x P^-1 for an invertible rational matrix P with P^period scalar.
Automorphism<Rational> conjugation(const CoordinatedSl& g, const RatMatrix& p, long period);

// ---- generic constructions over a finite-dimensional algebra -----------------

// gdot (x) C[t_1^+-1 .. t_nu^+-1] truncated to [-N, N]^nu, with the
// toroidal cocycle sum_k ([d_k, x], y) c_k and (c_k, d_l) = delta_kl when
// with_center. The Cartan is gdot_h (x) 1 plus C and D.
struct Current {
  Realization<Rational> real;
  size_t base_dim = 0;
  // basis element -> (index in gdot, degree) for the gdot (x) A part
  std::vector<std::optional<std::pair<size_t, Degree>>> origin;
};
Current current_algebra(const Realization<Rational>& gdot, int nu, long window, bool with_center);

// tau (x) mu: x (x) t^p -> zeta_m^{mu . p} tau(x) (x) t^p, fixing C and D.
template <class F>
Automorphism<F> toroidal_automorphism(const Current& g, const Matrix<F>& tau, const std::vector<long>& mu, long m);

// L(g): g (x) t^i for |i| <= N, loop degree first.
Realization<Rational> loop(const Realization<Rational>& g, long window);
// Aff(g) = L(g) + Q c + Q d with the affine bracket and form.
Realization<Rational> affinize(const Realization<Rational>& g, long window);

// ---- lifting to Q(zeta_m) ------------------------------------------------------

GradedAlgebra<Cyclotomic> lift(const GradedAlgebra<Rational>& g, long m);
Realization<Cyclotomic> lift(const Realization<Rational>& r, long m);
Matrix<Cyclotomic> lift(const RatMatrix& a, long m);
Vec<Cyclotomic> lift(const RatVector& v, long m);

// Identity on a Rational algebra, lifted when F is Cyclotomic.
template <class F>
Realization<F> realize_in(const Realization<Rational>& r, long m);
template <class F>
Matrix<F> matrix_in(const RatMatrix& a, long m);

// ---- automorphism checks ---------------------------------------------------------

struct AutomorphismReport {
  CheckResult period;           // sigma^m = 1
  CheckResult bracket;          // sigma[x, y] = [sigma x, sigma y] on in-window pairs
  CheckResult form;             // (sigma x, sigma y) = (x, y)
  CheckResult grading;          // sigma preserves every degree
  CheckResult cartan;           // sigma(h) = h
  bool all() const { return period.holds && bracket.holds && form.holds && grading.holds && cartan.holds; }
};
template <class F>
AutomorphismReport check_automorphism(const Realization<F>& g, const Automorphism<F>& s);

}  // namespace eala::liealg

#include "eala/liealg/build_impl.hpp"
