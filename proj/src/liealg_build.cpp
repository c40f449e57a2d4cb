#include "eala/liealg/build.hpp"

#include <map>

namespace eala::liealg {

namespace {

using coords::Exponent;
using coords::QuantumTorus;
using coords::TorusElement;
using coords::TorusMatrix;

std::vector<Degree> box(int nu, long window) {
  std::vector<Degree> out;
  Degree d(nu, -window);
  if (nu == 0) return {Degree{}};
  while (true) {
    out.push_back(d);
    int i = nu - 1;
    while (i >= 0 && d[i] == window) d[i--] = -window;
    if (i < 0) return out;
    ++d[i];
  }
}

std::string degree_suffix(const Degree& d) {
  if (d.empty()) return "";
  std::string s = " t^(";
  for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

Rational sign_of(const QuantumTorus& t, long k) { return coords::root_of_unity<Rational>(t.order(), k, Rational(0)); }

// t^p lies in [A, A] exactly when the commutator pairing with some t_k is nontrivial.
bool full_diagonal(const QuantumTorus& t, const Degree& p) {
  for (int k = 0; k < t.nu(); ++k) {
    Exponent e(t.nu(), 0);
    e[k] = 1;
    if (t.cocycle(e, p) != t.cocycle(p, e)) return true;
  }
  return false;
}

struct BlockIndex {
  bool full = false;
  std::vector<std::vector<long>> offdiag;  // [row][col] -> basis index, -1 on the diagonal
  std::vector<size_t> diag;                // e_ii (full) or h_i
};

using Entries = std::map<std::pair<size_t, size_t>, Rational>;

class SlBuilder {
 public:
  explicit SlBuilder(int n) : n_(n) {}

  void add_blocks(CoordinatedSl& g, long window) {
    const int n = n_;
    for (const Degree& p : box(g.torus.nu(), window)) {
      BlockIndex bi;
      bi.full = full_diagonal(g.torus, p);
      bi.offdiag.assign(n, std::vector<long>(n, -1));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          size_t idx = g.real.alg.add_basis("e" + std::to_string(i + 1) + std::to_string(j + 1) + degree_suffix(p), p);
          bi.offdiag[i][j] = static_cast<long>(idx);
          g.terms.push_back({{size_t(i), size_t(j), Rational(1)}});
          g.in_k.push_back(true);
        }
      if (bi.full) {
        for (int i = 0; i < n; ++i) {
          bi.diag.push_back(g.real.alg.add_basis("e" + std::to_string(i + 1) + std::to_string(i + 1) + degree_suffix(p), p));
          g.terms.push_back({{size_t(i), size_t(i), Rational(1)}});
          g.in_k.push_back(true);
        }
      } else {
        for (int i = 0; i + 1 < n; ++i) {
          bi.diag.push_back(g.real.alg.add_basis("h" + std::to_string(i + 1) + degree_suffix(p), p));
          g.terms.push_back({{size_t(i), size_t(i), Rational(1)}, {size_t(i + 1), size_t(i + 1), Rational(-1)}});
          g.in_k.push_back(true);
        }
      }
      index_.emplace(p, std::move(bi));
    }
  }

  // Coordinates of a matrix (homogeneous of degree p) in the basis of K.
  Sparse<Rational> decompose(const Degree& p, const Entries& m) const {
    auto it = index_.find(p);
    if (it == index_.end()) fail(ErrorCode::OutOfWindow, "matrix of degree" + degree_suffix(p) + " outside the window");
    const BlockIndex& bi = it->second;
    std::map<size_t, Rational> acc;
    std::vector<Rational> diag(n_, Rational(0));
    for (const auto& [rc, c] : m) {
      if (is_zero(c)) continue;
      if (rc.first != rc.second) acc[bi.offdiag[rc.first][rc.second]] += c;
      else diag[rc.first] += c;
    }
    if (bi.full) {
      for (int i = 0; i < n_; ++i) acc[bi.diag[i]] += diag[i];
    } else {
      Rational run(0);
      for (int i = 0; i + 1 < n_; ++i) {
        run += diag[i];
        acc[bi.diag[i]] += run;
      }
      if (!is_zero(run + diag[n_ - 1])) fail(ErrorCode::Internal, "matrix leaves sl_n(A): nonzero trace in a central degree");
    }
    Sparse<Rational> out;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) out.emplace_back(k, c);
    return out;
  }

 private:
  int n_;
  std::map<Degree, BlockIndex> index_;
};

Entries product(const QuantumTorus& t, const std::vector<MatrixTerm>& x, const Degree& p,
                const std::vector<MatrixTerm>& y, const Degree& q) {
  Entries out;
  Rational s = sign_of(t, t.cocycle(p, q));
  for (const auto& a : x)
    for (const auto& b : y)
      if (a.col == b.row) out[{a.row, b.col}] += s * a.coeff * b.coeff;
  return out;
}

TorusMatrix<Rational> to_torus_matrix(int n, const std::vector<MatrixTerm>& terms, const Degree& p) {
  TorusMatrix<Rational> m(n, std::vector<TorusElement<Rational>>(n));
  for (const auto& t : terms) m[t.row][t.col].add(p, t.coeff);
  return m;
}

}  // namespace

CoordinatedSl coordinated_sl(int n, const QuantumTorus& t, long window, const Rational& form_scale, bool with_center) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "sl_n needs n >= 2");
  if (!t.signs_only()) fail(ErrorCode::InvalidArgument, "sl_n(A) is built for q_ij = +-1 only");
  if (window < 0) fail(ErrorCode::InvalidArgument, "window must be nonnegative");
  const int nu = t.nu();
  CoordinatedSl g;
  g.n = n;
  g.torus = t;
  g.real.alg = GradedAlgebra<Rational>(Rational(0), nu, nu == 0 ? 0 : window);
  SlBuilder sb(n);
  sb.add_blocks(g, nu == 0 ? 0 : window);
  const size_t k_dim = g.real.alg.dim();
  std::vector<size_t> c_idx, d_idx;
  if (with_center && nu > 0) {
    for (int k = 0; k < nu; ++k) {
      c_idx.push_back(g.real.alg.add_basis("c" + std::to_string(k + 1), Degree(nu, 0)));
      g.terms.emplace_back();
      g.in_k.push_back(false);
    }
    for (int k = 0; k < nu; ++k) {
      d_idx.push_back(g.real.alg.add_basis("d" + std::to_string(k + 1), Degree(nu, 0)));
      g.terms.emplace_back();
      g.in_k.push_back(false);
    }
  }
  auto& alg = g.real.alg;
  alg.finish_basis();

  // K-form (x, y) = scale * eps(tr(xy))
  for (size_t a = 0; a < k_dim; ++a) {
    const Degree& p = alg.basis(a).degree;
    for (size_t b : alg.block(degree_neg(p))) {
      if (b < a) continue;
      Entries xy = product(t, g.terms[a], p, g.terms[b], alg.basis(b).degree);
      Rational tr(0);
      for (const auto& [rc, c] : xy)
        if (rc.first == rc.second) tr += c;
      alg.set_form(a, b, form_scale * tr);
    }
  }
  for (size_t a = 0; a < k_dim; ++a)
    for (size_t b = a + 1; b < k_dim; ++b) {
      if (!alg.bracket_defined(a, b)) continue;
      const Degree& p = alg.basis(a).degree;
      const Degree& q = alg.basis(b).degree;
      Entries xy = product(t, g.terms[a], p, g.terms[b], q);
      Entries yx = product(t, g.terms[b], q, g.terms[a], p);
      for (const auto& [rc, c] : yx) xy[rc] -= c;
      Sparse<Rational> value = sb.decompose(degree_sum(p, q), xy);
      if (with_center && nu > 0) {
        Rational f = alg.form_basis(a, b);
        if (!is_zero(f))
          for (int k = 0; k < nu; ++k)
            if (p[k] != 0) value.emplace_back(c_idx[k], Rational(p[k]) * f);
      }
      alg.set_bracket(a, b, std::move(value));
    }
  if (with_center && nu > 0) {
    for (int k = 0; k < nu; ++k) {
      alg.set_form(c_idx[k], d_idx[k], Rational(1));
      for (size_t a = 0; a < k_dim; ++a) {
        long p = alg.basis(a).degree[k];
        if (p != 0) alg.set_bracket(d_idx[k], a, {{a, Rational(p)}});
      }
    }
  }
  // h: diagonal part of degree 0, then C and D
  for (size_t a : alg.block(Degree(nu, 0)))
    if (a < k_dim && g.terms[a].size() == 2 && g.terms[a][0].row == g.terms[a][0].col)
      g.real.cartan.push_back(alg.unit(a));
  for (size_t c : c_idx) g.real.centrals.push_back(alg.unit(c));
  for (size_t d : d_idx) g.real.derivations.push_back(alg.unit(d));
  for (const auto& c : g.real.centrals) g.real.cartan.push_back(c);
  for (const auto& d : g.real.derivations) g.real.cartan.push_back(d);
  g.decompose = [sb](const Degree& p, const Entries& m) { return sb.decompose(p, m); };
  return g;
}

CoordinatedSl sl(int n) { return coordinated_sl(n, QuantumTorus::commutative(0), 0, Rational(2 * n), false); }

Automorphism<Rational> matrix_automorphism(
    const CoordinatedSl& g, const std::function<TorusMatrix<Rational>(const TorusMatrix<Rational>&)>& f, long period) {
  const auto& alg = g.real.alg;
  const size_t n = alg.dim();
  Automorphism<Rational> s{RatMatrix(n, n, Rational(0)), period};
  for (size_t a = 0; a < n; ++a) {
    if (!g.in_k[a]) {
      s.matrix(a, a) = 1;
      continue;
    }
    TorusMatrix<Rational> image = f(to_torus_matrix(g.n, g.terms[a], alg.basis(a).degree));
    std::map<Degree, Entries> by_degree;
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j)
        for (const auto& [p, c] : image[i][j].terms) by_degree[p][{size_t(i), size_t(j)}] += c;
    for (const auto& [p, m] : by_degree)
      for (const auto& [k, c] : g.decompose(p, m)) s.matrix(k, a) += c;
  }
  return s;
}

Automorphism<Rational> minus_star(const CoordinatedSl& g) {
  const QuantumTorus t = g.torus;
  return matrix_automorphism(
      g,
      [t](const TorusMatrix<Rational>& x) {
        auto star = coords::matrix_star(t, x);
        for (auto& row : star)
          for (auto& e : row) e = coords::qt_scale(Rational(-1), e);
        return star;
      },
      2);
}

Automorphism<Rational> chevalley(const CoordinatedSl& g) {
  if (!g.torus.commutative_torus()) fail(ErrorCode::InvalidArgument, "x -> -x^T is an automorphism only over a commutative torus");
  return matrix_automorphism(
      g,
      [](const TorusMatrix<Rational>& x) {
        const size_t n = x.size();
        TorusMatrix<Rational> out(n, std::vector<TorusElement<Rational>>(n));
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) out[i][j] = coords::qt_scale(Rational(-1), x[j][i]);
        return out;
      },
      2);
}

Automorphism<Rational> conjugation(const CoordinatedSl& g, const RatMatrix& p, long period) {
  auto inv = inverse(p);
  if (!inv || p.rows() != size_t(g.n)) fail(ErrorCode::InvalidArgument, "conjugation needs an invertible n x n matrix");
  const RatMatrix q = *inv;
  return matrix_automorphism(
      g,
      [p, q](const TorusMatrix<Rational>& x) {
        const size_t n = x.size();
        TorusMatrix<Rational> px(n, std::vector<TorusElement<Rational>>(n)), out = px;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) px[i][k] = coords::qt_add(px[i][k], coords::qt_scale(p(i, j), x[j][k]));
        for (size_t i = 0; i < n; ++i)
          for (size_t k = 0; k < n; ++k)
            for (size_t l = 0; l < n; ++l) out[i][l] = coords::qt_add(out[i][l], coords::qt_scale(q(k, l), px[i][k]));
        return out;
      },
      period);
}

Current current_algebra(const Realization<Rational>& gdot, int nu, long window, bool with_center) {
  const auto& base = gdot.alg;
  if (base.grading_rank() != 0) fail(ErrorCode::InvalidArgument, "current algebra needs a finite-dimensional base");
  if (nu < 1) fail(ErrorCode::InvalidArgument, "current algebra needs nu >= 1");
  Current c;
  c.base_dim = base.dim();
  auto& alg = c.real.alg;
  alg = GradedAlgebra<Rational>(Rational(0), nu, window);
  std::map<Degree, size_t> offset;
  for (const Degree& p : box(nu, window)) {
    offset[p] = alg.dim();
    for (size_t x = 0; x < base.dim(); ++x) {
      alg.add_basis(base.basis(x).name + degree_suffix(p), p);
      c.origin.push_back(std::make_pair(x, p));
    }
  }
  const size_t k_dim = alg.dim();
  std::vector<size_t> c_idx, d_idx;
  if (with_center) {
    for (int k = 0; k < nu; ++k) {
      c_idx.push_back(alg.add_basis("c" + std::to_string(k + 1), Degree(nu, 0)));
      c.origin.push_back(std::nullopt);
    }
    for (int k = 0; k < nu; ++k) {
      d_idx.push_back(alg.add_basis("d" + std::to_string(k + 1), Degree(nu, 0)));
      c.origin.push_back(std::nullopt);
    }
  }
  alg.finish_basis();
  for (size_t a = 0; a < k_dim; ++a) {
    const auto& [x, p] = *c.origin[a];
    for (size_t b = a; b < k_dim; ++b) {
      const auto& [y, q] = *c.origin[b];
      Degree s = degree_sum(p, q);
      bool central_pair = s == Degree(nu, 0);
      if (central_pair) alg.set_form(a, b, base.form_basis(x, y));
      if (b == a || !alg.bracket_defined(a, b)) continue;
      Sparse<Rational> value;
      size_t off = offset.at(s);
      for (const auto& [z, coeff] : base.bracket_basis(x, y)) value.emplace_back(off + z, coeff);
      if (with_center && central_pair) {
        Rational f = base.form_basis(x, y);
        if (!is_zero(f))
          for (int k = 0; k < nu; ++k)
            if (p[k] != 0) value.emplace_back(c_idx[k], Rational(p[k]) * f);
      }
      alg.set_bracket(a, b, std::move(value));
    }
  }
  if (with_center)
    for (int k = 0; k < nu; ++k) {
      alg.set_form(c_idx[k], d_idx[k], Rational(1));
      for (size_t a = 0; a < k_dim; ++a) {
        long p = alg.basis(a).degree[k];
        if (p != 0) alg.set_bracket(d_idx[k], a, {{a, Rational(p)}});
      }
    }
  const size_t zero_off = offset.at(Degree(nu, 0));
  for (const auto& h : gdot.cartan) {
    Vec<Rational> v(alg.dim(), Rational(0));
    for (size_t x = 0; x < base.dim(); ++x) v[zero_off + x] = h[x];
    c.real.cartan.push_back(v);
  }
  for (size_t i : c_idx) c.real.centrals.push_back(alg.unit(i));
  for (size_t i : d_idx) c.real.derivations.push_back(alg.unit(i));
  for (const auto& v : c.real.centrals) c.real.cartan.push_back(v);
  for (const auto& v : c.real.derivations) c.real.cartan.push_back(v);
  return c;
}

namespace {

// g (x) t^i for |i| <= N, then optionally c and d.
Realization<Rational> loop_like(const Realization<Rational>& g, long window, bool affine) {
  const auto& base = g.alg;
  const size_t n = base.dim();
  const size_t r = base.grading_rank();
  if (window < 1) fail(ErrorCode::InvalidArgument, "loop window must be positive");
  if (r > 0 && base.window() != window)
    fail(ErrorCode::InvalidArgument, "the loop window must equal the window of the graded algebra");
  if (affine) {
    Matrix<Rational> f(n, n, Rational(0));
    for (size_t a = 0; a < n; ++a)
      for (const auto& [b, c] : base.form_row(a)) f(a, b) = c;
    if (rank(f) != n) fail(ErrorCode::InvalidArgument, "affinization needs a nondegenerate form");
  }
  Realization<Rational> out;
  auto& alg = out.alg;
  alg = GradedAlgebra<Rational>(Rational(0), r + 1, window);
  auto lifted = [&](long i, const Degree& d) {
    Degree e{i};
    e.insert(e.end(), d.begin(), d.end());
    return e;
  };
  for (long i = -window; i <= window; ++i)
    for (size_t a = 0; a < n; ++a)
      alg.add_basis(base.basis(a).name + " (x) t^" + std::to_string(i), lifted(i, base.basis(a).degree));
  size_t c = 0, d = 0;
  if (affine) {
    c = alg.add_basis("c", Degree(r + 1, 0));
    d = alg.add_basis("d", Degree(r + 1, 0));
  }
  alg.finish_basis();
  auto index = [&](long i, size_t a) { return static_cast<size_t>((i + window) * n + a); };
  for (long i = -window; i <= window; ++i)
    for (size_t a = 0; a < n; ++a)
      for (long j = i; j <= window; ++j)
        for (size_t b = (j == i ? a : 0); b < n; ++b) {
          size_t x = index(i, a), y = index(j, b);
          if (i + j == 0) alg.set_form(x, y, base.form_basis(a, b));
          if (x == y || !alg.bracket_defined(x, y) || !base.bracket_defined(a, b)) continue;
          Sparse<Rational> value;
          for (const auto& [k, coeff] : base.bracket_basis(a, b)) value.emplace_back(index(i + j, k), coeff);
          if (affine && i + j == 0) {
            Rational f = base.form_basis(a, b);
            if (!is_zero(f) && i != 0) value.emplace_back(c, Rational(i) * f);
          }
          alg.set_bracket(x, y, std::move(value));
        }
  if (affine) {
    alg.set_form(c, d, Rational(1));
    for (long i = -window; i <= window; ++i)
      if (i != 0)
        for (size_t a = 0; a < n; ++a) alg.set_bracket(d, index(i, a), {{index(i, a), Rational(i)}});
  }
  for (const auto& h : g.cartan) {
    Vec<Rational> v(alg.dim(), Rational(0));
    for (size_t a = 0; a < n; ++a) v[index(0, a)] = h[a];
    out.cartan.push_back(v);
  }
  auto embed0 = [&](const Vec<Rational>& v) {
    Vec<Rational> e(alg.dim(), Rational(0));
    for (size_t a = 0; a < n; ++a) e[index(0, a)] = v[a];
    return e;
  };
  if (affine) {
    out.centrals.push_back(alg.unit(c));
    out.derivations.push_back(alg.unit(d));
    out.cartan.push_back(alg.unit(c));
    out.cartan.push_back(alg.unit(d));
  }
  for (const auto& v : g.centrals) out.centrals.push_back(embed0(v));
  for (const auto& v : g.derivations) out.derivations.push_back(embed0(v));
  return out;
}

}  // namespace

Realization<Rational> loop(const Realization<Rational>& g, long window) { return loop_like(g, window, false); }
Realization<Rational> affinize(const Realization<Rational>& g, long window) { return loop_like(g, window, true); }

GradedAlgebra<Cyclotomic> lift(const GradedAlgebra<Rational>& g, long m) {
  GradedAlgebra<Cyclotomic> out(Cyclotomic::zero(m), g.grading_rank(), g.window());
  for (size_t i = 0; i < g.dim(); ++i) out.add_basis(g.basis(i).name, g.basis(i).degree);
  out.finish_basis();
  for (size_t i = 0; i < g.dim(); ++i) {
    for (const auto& [j, c] : g.form_row(i))
      if (j >= i) out.set_form(i, j, Cyclotomic(m, c));
    for (size_t j = i + 1; j < g.dim(); ++j) {
      if (!g.bracket_defined(i, j)) continue;
      Sparse<Cyclotomic> v;
      for (const auto& [k, c] : g.bracket_basis(i, j)) v.emplace_back(k, Cyclotomic(m, c));
      out.set_bracket(i, j, std::move(v));
    }
  }
  return out;
}

Vec<Cyclotomic> lift(const RatVector& v, long m) {
  Vec<Cyclotomic> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(m, x);
  return out;
}

Matrix<Cyclotomic> lift(const RatMatrix& a, long m) {
  Matrix<Cyclotomic> out(a.rows(), a.cols(), Cyclotomic::zero(m));
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = Cyclotomic(m, a(i, j));
  return out;
}

Realization<Cyclotomic> lift(const Realization<Rational>& r, long m) {
  Realization<Cyclotomic> out;
  out.alg = lift(r.alg, m);
  for (const auto& h : r.cartan) out.cartan.push_back(lift(h, m));
  for (const auto& v : r.centrals) out.centrals.push_back(lift(v, m));
  for (const auto& v : r.derivations) out.derivations.push_back(lift(v, m));
  return out;
}

}  // namespace eala::liealg
