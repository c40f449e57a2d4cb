#include "eala/ears.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace eala::ears {

namespace {

Rational rmod(const Rational& x, long m) {
  Rational q = x / m;
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return x - Rational(fl) * m;
}

bool in_progression(const Rational& c, const Rational& offset, long modulus) {
  if (modulus == 0) return c == offset;
  return is_integer((c - offset) / modulus);
}

long lcm_pos(long a, long b) { return a == 0 ? b : b == 0 ? a : std::lcm(a, b); }

// Enumerates the cells of the target progressions: one representative value
// per coordinate, points for modulus 0, residue classes mod period otherwise.
void for_each_cell(const std::vector<Progression>& target, const std::vector<long>& period,
                   const std::function<bool(const RatVector&)>& visit) {
  const size_t k = target.size();
  std::vector<long> counts(k, 1);
  for (size_t i = 0; i < k; ++i)
    if (target[i].modulus > 0) counts[i] = period[i] / target[i].modulus;
  std::vector<long> idx(k, 0);
  while (true) {
    RatVector c(k);
    for (size_t i = 0; i < k; ++i) c[i] = target[i].offset + Rational(idx[i] * target[i].modulus);
    if (!visit(c)) return;
    size_t i = 0;
    while (i < k && ++idx[i] == counts[i]) idx[i++] = 0;
    if (i == k) return;
  }
}

}  // namespace

void RootDatum::build_chart() {
  const size_t n = dim();
  std::vector<RatVector> basis = isotropic_;
  for (size_t i = 0; i < n && basis.size() < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    basis.push_back(e);
    if (rank(RatMatrix::from_columns(basis, n, Rational(0))) < basis.size()) basis.pop_back();
  }
  chart_ = SpanChart<Rational>(basis, n, Rational(0));
}

std::pair<RatVector, RatVector> RootDatum::decompose(const RatVector& v) const {
  const size_t k = isotropic_.size();
  RatVector coords = *chart_.coords(v);
  RatVector c(coords.begin(), coords.begin() + k);
  RatVector u = v;
  for (size_t i = 0; i < k; ++i)
    if (!is_zero(c[i])) u = vsub(u, scale(c[i], isotropic_[i]));
  return {u, c};
}

RootDatum RootDatum::create(RatMatrix form, std::vector<Coset> cosets, std::vector<RatVector> isotropic_basis) {
  if (!form.square()) fail(ErrorCode::Schema, "root datum: form is not square");
  if (form != form.transpose()) fail(ErrorCode::Schema, "root datum: form is not symmetric");
  const size_t n = form.rows();
  const size_t k = isotropic_basis.size();
  for (const auto& d : isotropic_basis)
    if (d.size() != n) fail(ErrorCode::Schema, "root datum: isotropic generator has the wrong dimension");
  if (k > 0 && rank(RatMatrix::from_columns(isotropic_basis, n, Rational(0))) != k)
    fail(ErrorCode::Schema, "root datum: isotropic generators are dependent");
  if (cosets.empty()) fail(ErrorCode::Schema, "root datum: no cosets");
  for (const auto& c : cosets) {
    if (c.rep.size() != n) fail(ErrorCode::Schema, "root datum: coset rep " + to_string(c.rep) + " has the wrong dimension");
    if (c.progressions.size() != k)
      fail(ErrorCode::Schema, "root datum: coset " + to_string(c.rep) + " needs one progression per isotropic generator");
    for (const auto& p : c.progressions)
      if (p.modulus < 0) fail(ErrorCode::Schema, "root datum: negative modulus");
  }

  RootDatum d;
  d.form_ = std::move(form);
  d.isotropic_ = std::move(isotropic_basis);
  d.build_chart();
  for (const auto& delta : d.isotropic_) {
    for (const auto& other : d.isotropic_)
      if (!is_zero(d.pair(delta, other)))
        fail(ErrorCode::Schema, "root datum: isotropic generator " + to_string(delta) + " is not in the radical");
    for (const auto& c : cosets)
      if (!is_zero(d.pair(delta, c.rep)))
        fail(ErrorCode::Schema, "root datum: isotropic generator " + to_string(delta) + " pairs nontrivially with " +
                                    to_string(c.rep));
  }

  std::set<Coset> canon;
  for (auto& c : cosets) {
    auto [u, shift] = d.decompose(c.rep);
    Coset out{u, c.progressions};
    for (size_t i = 0; i < k; ++i) {
      out.progressions[i].offset += shift[i];
      if (out.progressions[i].modulus > 0)
        out.progressions[i].offset = rmod(out.progressions[i].offset, out.progressions[i].modulus);
    }
    canon.insert(std::move(out));
  }
  d.cosets_.assign(canon.begin(), canon.end());

  // Positive semidefinite on span(R).
  auto gens = span_basis(d.span_generators(), n, Rational(0));
  if (!gens.empty()) {
    RatMatrix gram(gens.size(), gens.size(), Rational(0));
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = 0; j < gens.size(); ++j) gram(i, j) = d.pair(gens[i], gens[j]);
    if (auto w = negative_direction(gram)) {
      RatVector v(n, Rational(0));
      for (size_t i = 0; i < gens.size(); ++i) v = vadd(v, scale((*w)[i], gens[i]));
      fail(ErrorCode::NotSemidefinite,
           "root datum: form is not positive semidefinite on span(R); witness " + to_string(v) + " has norm " +
               to_string(d.pair(v, v)));
    }
  }
  if (auto bad = datum_violation(d)) fail(ErrorCode::Schema, "root datum: " + *bad);
  return d;
}

RootDatum RootDatum::finite(const std::vector<RatVector>& roots, const RatMatrix& form) {
  std::vector<Coset> cosets;
  for (const auto& r : roots) cosets.push_back({r, {}});
  return create(form, std::move(cosets), {});
}

RootDatum RootDatum::from_system(const rootsys::FiniteRootSystem& sys) { return finite(sys.roots(), sys.form()); }

RootDatum RootDatum::normalized() const {
  std::optional<Rational> least;
  for (const auto& c : cosets_) {
    Rational q = norm(c);
    if (!is_zero(q) && (!least || q < *least)) least = q;
  }
  if (!least || *least == 2) return *this;
  RootDatum d = *this;
  Rational f = Rational(2) / *least;
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) d.form_(i, j) *= f;
  return d;
}

RatVector RootDatum::element(const Coset& c, const std::vector<long>& z) const {
  RatVector v = c.rep;
  for (size_t i = 0; i < isotropic_.size(); ++i) {
    Rational coeff = c.progressions[i].offset + Rational(z[i] * c.progressions[i].modulus);
    if (!is_zero(coeff)) v = vadd(v, scale(coeff, isotropic_[i]));
  }
  return v;
}

bool RootDatum::contains(const RatVector& v) const {
  if (v.size() != dim()) return false;
  auto [u, c] = decompose(v);
  for (const auto& cs : cosets_) {
    if (cs.rep != u) continue;
    bool ok = true;
    for (size_t i = 0; i < c.size() && ok; ++i)
      ok = in_progression(c[i], cs.progressions[i].offset, cs.progressions[i].modulus);
    if (ok) return true;
  }
  return false;
}

std::vector<RatVector> RootDatum::sample(long bound) const {
  std::set<RatVector> out;
  const size_t k = isotropic_.size();
  for (const auto& c : cosets_) {
    std::vector<long> lo(k), z(k);
    for (size_t i = 0; i < k; ++i) lo[i] = z[i] = c.progressions[i].modulus > 0 ? -bound : 0;
    while (true) {
      out.insert(element(c, z));
      size_t i = 0;
      while (i < k) {
        long hi = c.progressions[i].modulus > 0 ? bound : 0;
        if (++z[i] <= hi) break;
        z[i] = lo[i];
        ++i;
      }
      if (i == k) break;
    }
  }
  return std::vector<RatVector>(out.begin(), out.end());
}

std::vector<RatVector> RootDatum::span_generators() const {
  std::vector<RatVector> gens;
  std::vector<bool> moving(isotropic_.size(), false);
  for (const auto& c : cosets_) {
    gens.push_back(element(c, std::vector<long>(isotropic_.size(), 0)));
    for (size_t i = 0; i < isotropic_.size(); ++i)
      if (c.progressions[i].modulus > 0) moving[i] = true;
  }
  for (size_t i = 0; i < isotropic_.size(); ++i)
    if (moving[i]) gens.push_back(isotropic_[i]);
  return gens;
}

std::optional<RatVector> coset_gap(const RootDatum& d, const Coset& target) {
  auto [u, shift] = d.decompose(target.rep);
  std::vector<Progression> prog = target.progressions;
  for (size_t i = 0; i < prog.size(); ++i) prog[i].offset += shift[i];
  std::vector<const Coset*> cands;
  for (const auto& c : d.cosets())
    if (c.rep == u) cands.push_back(&c);
  std::vector<long> period(prog.size());
  for (size_t i = 0; i < prog.size(); ++i) {
    period[i] = prog[i].modulus;
    for (const Coset* c : cands)
      if (prog[i].modulus > 0) period[i] = lcm_pos(period[i], c->progressions[i].modulus);
  }
  std::optional<RatVector> missing;
  for_each_cell(prog, period, [&](const RatVector& cell) {
    for (const Coset* c : cands) {
      bool ok = true;
      for (size_t i = 0; i < prog.size() && ok; ++i) {
        const auto& p = c->progressions[i];
        if (prog[i].modulus > 0 && p.modulus == 0) ok = false;
        else ok = in_progression(cell[i], p.offset, p.modulus);
      }
      if (ok) return true;
    }
    RatVector v = u;
    for (size_t i = 0; i < prog.size(); ++i) v = vadd(v, scale(cell[i], d.isotropic_basis()[i]));
    missing = v;
    return false;
  });
  return missing;
}

std::optional<std::string> datum_violation(const RootDatum& d) {
  if (!d.contains(RatVector(d.dim(), Rational(0)))) return "0 is not a root";
  for (const auto& c : d.cosets()) {
    Coset neg{vneg(c.rep), c.progressions};
    for (auto& p : neg.progressions) p.offset = -p.offset;
    if (auto miss = coset_gap(d, neg)) return "-R != R: " + to_string(*miss) + " is missing";
  }
  auto split = split_roots(d);
  for (const auto& a : split.isotropic)
    for (const auto& b : split.nonisotropic)
      if (!is_zero(d.pair(a.rep, b.rep)))
        return "(R^0, R^x) != 0 at " + to_string(a.rep) + ", " + to_string(b.rep);
  return std::nullopt;
}

std::vector<RatVector> radical(const RootDatum& d) {
  const size_t n = d.dim();
  auto gens = span_basis(d.span_generators(), n, Rational(0));
  if (gens.empty()) return {};
  RatMatrix gram(gens.size(), gens.size(), Rational(0));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) gram(i, j) = d.pair(gens[i], gens[j]);
  if (auto w = negative_direction(gram))
    fail(ErrorCode::NotSemidefinite, "radical: form is not positive semidefinite on span(R)");
  std::vector<RatVector> out;
  for (const auto& k : kernel(gram)) {
    RatVector v(n, Rational(0));
    for (size_t i = 0; i < gens.size(); ++i)
      if (!is_zero(k[i])) v = vadd(v, scale(k[i], gens[i]));
    out.push_back(v);
  }
  return out;
}

SplitRoots split_roots(const RootDatum& d) {
  SplitRoots s;
  for (const auto& c : d.cosets()) (d.isotropic(c) ? s.isotropic : s.nonisotropic).push_back(c);
  return s;
}

rootsys::FiniteRootSystem quotient_system(const std::vector<RatVector>& vectors, const RatMatrix& form) {
  const size_t n = form.rows();
  auto gens = span_basis(vectors, n, Rational(0));
  const size_t s = gens.size();
  RatMatrix gram(s, s, Rational(0));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) gram(i, j) = bilinear(form, gens[i], gens[j]);
  auto ker = kernel(gram);
  // complement of the radical inside span coordinates, by unit vectors
  std::vector<RatVector> comp;
  std::vector<RatVector> all = ker;
  for (size_t i = 0; i < s && all.size() < s; ++i) {
    RatVector e(s, Rational(0));
    e[i] = 1;
    all.push_back(e);
    if (rank(RatMatrix::from_columns(all, s, Rational(0))) < all.size()) all.pop_back();
    else comp.push_back(e);
  }
  if (comp.empty()) fail(ErrorCode::NotApplicable, "quotient by the radical is zero: no finite root system");
  SpanChart<Rational> span_chart(gens, n, Rational(0));
  std::vector<RatVector> quot_basis = comp;
  quot_basis.insert(quot_basis.end(), ker.begin(), ker.end());
  SpanChart<Rational> quot_chart(quot_basis, s, Rational(0));
  const size_t r = comp.size();
  RatMatrix bar_form(r, r, Rational(0));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) bar_form(i, j) = bilinear(gram, comp[i], comp[j]);
  std::set<RatVector> bar;
  bar.insert(RatVector(r, Rational(0)));
  for (const auto& v : vectors) {
    RatVector q = *quot_chart.coords(*span_chart.coords(v));
    bar.insert(RatVector(q.begin(), q.begin() + r));
  }
  return rootsys::FiniteRootSystem::create(std::vector<RatVector>(bar.begin(), bar.end()), bar_form);
}

rootsys::FiniteRootSystem bar_image(const RootDatum& d) {
  auto split = split_roots(d);
  if (split.nonisotropic.empty())
    fail(ErrorCode::NotApplicable, "bar image: R^x is empty, so there is no finite root system");
  std::vector<RatVector> reps;
  for (const auto& c : d.cosets()) reps.push_back(d.element(c, std::vector<long>(d.lattice_rank(), 0)));
  for (const auto& v : d.span_generators()) reps.push_back(v);
  return quotient_system(reps, d.form());
}

bool check_EA5a(const RootDatum& d) {
  std::vector<RatVector> reps;
  for (const auto& c : split_roots(d).nonisotropic) reps.push_back(c.rep);
  return rootsys::orthogonality_connected(reps, d.form());
}

EA5bResult check_EA5b(const RootDatum& d) {
  auto split = split_roots(d);
  const size_t k = d.lattice_rank();
  for (const auto& iso : split.isotropic) {
    struct Pair {
      RatVector offset;  // o2 - o1
      std::vector<long> g;
    };
    std::vector<Pair> pairs;
    for (const auto& c1 : split.nonisotropic) {
      RatVector target = vadd(c1.rep, iso.rep);
      for (const auto& c2 : d.cosets()) {
        if (c2.rep != target) continue;
        Pair p{RatVector(k), std::vector<long>(k)};
        for (size_t i = 0; i < k; ++i) {
          p.offset[i] = c2.progressions[i].offset - c1.progressions[i].offset;
          p.g[i] = std::gcd(c1.progressions[i].modulus, c2.progressions[i].modulus);
        }
        pairs.push_back(std::move(p));
      }
    }
    std::vector<long> period(k);
    for (size_t i = 0; i < k; ++i) {
      period[i] = iso.progressions[i].modulus;
      if (period[i] > 0)
        for (const auto& p : pairs) period[i] = lcm_pos(period[i], p.g[i]);
    }
    EA5bResult res;
    for_each_cell(iso.progressions, period, [&](const RatVector& cell) {
      for (const auto& p : pairs) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i) {
          if (iso.progressions[i].modulus > 0 && p.g[i] == 0) ok = false;
          else ok = in_progression(cell[i], p.offset[i], p.g[i]);
        }
        if (ok) return true;
      }
      RatVector v = iso.rep;
      for (size_t i = 0; i < k; ++i) v = vadd(v, scale(cell[i], d.isotropic_basis()[i]));
      res.ok = false;
      res.failing_delta = v;
      return false;
    });
    if (!res.ok) return res;
  }
  return {};
}

bool check_nondegenerate(const RootDatum& d) {
  // Over rational data the span of R^0 and its rank agree; what remains is
  // that R^0 spans the radical.
  std::vector<RatVector> iso_gens;
  for (const auto& c : split_roots(d).isotropic) {
    iso_gens.push_back(d.element(c, std::vector<long>(d.lattice_rank(), 0)));
    for (size_t i = 0; i < d.lattice_rank(); ++i)
      if (c.progressions[i].modulus > 0) iso_gens.push_back(d.isotropic_basis()[i]);
  }
  auto rad = radical(d);
  SpanChart<Rational> iso_span(span_basis(iso_gens, d.dim(), Rational(0)), d.dim(), Rational(0));
  if (iso_span.rank() != rad.size()) return false;
  for (const auto& v : rad)
    if (!iso_span.contains(v)) return false;
  return true;
}

EalaRootReport report(const RootDatum& d) {
  EalaRootReport r;
  auto split = split_roots(d);
  r.isotropic_count = split.isotropic.size();
  r.nonisotropic_count = split.nonisotropic.size();
  r.nullity = static_cast<int>(radical(d).size());
  auto bar = bar_image(d);
  r.type = rootsys::recognize_type(bar.roots(), bar.form());
  r.ea5a = check_EA5a(d);
  r.ea5b = check_EA5b(d).ok;
  r.nondegenerate = check_nondegenerate(d);
  return r;
}

}  // namespace eala::ears
