#include "eala/autoroot.hpp"

#include <algorithm>

namespace eala::autoroot {

using ears::Coset;
using ears::RootDatum;

bool is_prime(long m) {
  if (m < 2) return false;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) return false;
  return true;
}

RootAutomorphism::RootAutomorphism(RatMatrix matrix, long period)
    : matrix_(std::move(matrix)), period_(period) {
  const size_t n = matrix_.rows();
  RatMatrix sum(n, n, Rational(0));
  RatMatrix power = RatMatrix::identity(n, Rational(0));
  for (long i = 0; i < period_; ++i) {
    sum = sum + power;
    power = power * matrix_;
  }
  pi_ = sum;
  Rational inv(1, period_);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) pi_(i, j) *= inv;
}

RootAutomorphism RootAutomorphism::create(RatMatrix matrix, long period, const RootDatum& d) {
  if (period < 1) fail(ErrorCode::InvalidAutomorphism, "automorphism period must be positive");
  if (!matrix.square() || matrix.rows() != d.dim())
    fail(ErrorCode::InvalidAutomorphism, "automorphism matrix does not act on the datum's space");
  if (!matrix.pow(period).is_identity())
    fail(ErrorCode::InvalidAutomorphism, "sigma^m != 1 for m = " + std::to_string(period));
  if (matrix.transpose() * d.form() * matrix != d.form())
    fail(ErrorCode::InvalidAutomorphism, "sigma does not preserve the form");
  for (const auto& delta : d.isotropic_basis())
    if (matrix.apply(delta) != delta)
      fail(ErrorCode::InvalidAutomorphism, "sigma moves the isotropic generator " + to_string(delta));
  for (const auto& c : d.cosets()) {
    Coset image{matrix.apply(c.rep), c.progressions};
    if (auto miss = ears::coset_gap(d, image))
      fail(ErrorCode::InvalidAutomorphism, "sigma(R) != R: " + to_string(*miss) + " is not a root");
  }
  return RootAutomorphism(std::move(matrix), period);
}

RatVector pi(const RootAutomorphism& s, const RatVector& alpha) { return s.averaging().apply(alpha); }

long sigma_length(const RootAutomorphism& s, const RootDatum& d, const RatVector& alpha) {
  if (!d.contains(alpha)) fail(ErrorCode::InvalidArgument, "sigma length: " + to_string(alpha) + " is not a root");
  RatVector cur = s.apply(alpha);
  long l = 1;
  while (cur != alpha) {
    cur = s.apply(cur);
    ++l;
  }
  return l;
}

namespace {

RatVector base_element(const RootDatum& d, const Coset& c) {
  return d.element(c, std::vector<long>(d.lattice_rank(), 0));
}

}  // namespace

Criterion criterion_3_64(const RootAutomorphism& s, const RootDatum& d) {
  for (const auto& c : d.cosets()) {
    RatVector a = base_element(d, c);
    RatVector p = pi(s, a);
    if (!is_zero(d.pair(p, p))) return {true, a};
  }
  return {false, std::nullopt};
}

Criterion condition_iv(const RootAutomorphism& s, const RootDatum& d) {
  const size_t k = d.lattice_rank();
  for (const auto& c : d.cosets()) {
    // pi(rep + sum c_k delta_k) = pi(rep) + sum c_k delta_k since sigma fixes delta_k
    auto [u, shift] = d.decompose(pi(s, c.rep));
    if (!is_zero_vector(u)) continue;
    bool reachable = true;
    for (size_t i = 0; i < k && reachable; ++i) {
      Rational need = -shift[i];
      const auto& p = c.progressions[i];
      reachable = p.modulus == 0 ? need == p.offset : is_integer((need - p.offset) / p.modulus);
    }
    if (!reachable) continue;
    RatVector alpha = c.rep;
    for (size_t i = 0; i < k; ++i) alpha = vadd(alpha, scale(Rational(-shift[i]), d.isotropic_basis()[i]));
    if (!is_zero_vector(alpha)) return {false, alpha};
  }
  return {true, std::nullopt};
}

Cor365 corollary_3_65_verdict(const RootAutomorphism& s, const RootDatum& d) {
  Cor365 v;
  v.sufficient = condition_iv(s, d).holds && criterion_3_64(s, d).holds;
  if (is_prime(s.period())) v.necessary_given_prime = v.sufficient;
  if (v.sufficient) v.status = "tame_eala";
  else if (v.necessary_given_prime) v.status = "not_tame_eala";
  else v.status = "undetermined";
  return v;
}

rootsys::FiniteRootSystem affinized_bar_roots(const RootAutomorphism& s, const RootDatum& d) {
  if (!criterion_3_64(s, d).holds)
    fail(ErrorCode::CriterionFails, "criterion fails: every (pi(alpha), pi(alpha)) is zero, so R~^x is empty");
  std::vector<RatVector> images;
  for (const auto& c : d.cosets()) images.push_back(pi(s, base_element(d, c)));
  for (const auto& g : d.span_generators()) images.push_back(pi(s, g));
  return ears::quotient_system(images, d.form());
}

std::vector<RatVector> fixed_radical(const RootAutomorphism& s, const RootDatum& d) {
  auto rad = ears::radical(d);
  if (rad.empty()) return {};
  const size_t n = d.dim();
  RatMatrix shifted = s.matrix() - RatMatrix::identity(n, Rational(0));
  RatMatrix v = RatMatrix::from_columns(rad, n, Rational(0));
  std::vector<RatVector> out;
  for (const auto& k : kernel(shifted * v)) out.push_back(v.apply(k));
  return out;
}

int affinized_nullity(const RootAutomorphism& s, const RootDatum& d) {
  if (!criterion_3_64(s, d).holds)
    fail(ErrorCode::CriterionFails, "affinized nullity: criterion fails, R~^x is empty");
  return static_cast<int>(fixed_radical(s, d).size()) + 1;
}

// ---- residues --------------------------------------------------------------

namespace {

long pos_mod(long x, long m) { return ((x % m) + m) % m; }

std::vector<long> period_key(const std::vector<long>& z, const std::vector<long>& period) {
  std::vector<long> key(z.size());
  for (size_t i = 0; i < z.size(); ++i) key[i] = pos_mod(z[i], period[i]);
  return key;
}

// Every index vector in the box [lo, hi) per coordinate; coordinates with
// modulus 0 stay at 0.
template <class Fn>
void for_each_index(const Coset& c, const std::vector<long>& lo, const std::vector<long>& hi, Fn fn) {
  const size_t k = lo.size();
  std::vector<long> z(k);
  std::vector<long> l(k), h(k);
  for (size_t i = 0; i < k; ++i) {
    bool moving = c.progressions[i].modulus > 0;
    l[i] = moving ? lo[i] : 0;
    h[i] = moving ? hi[i] : 1;
    z[i] = l[i];
  }
  while (true) {
    fn(z);
    size_t i = 0;
    while (i < k && ++z[i] == h[i]) z[i] = l[i], ++i;
    if (i == k) return;
  }
}

}  // namespace

std::set<long> ResidueAssignment::residues(const RootDatum& d, const RatVector& alpha) const {
  auto [u, c] = d.decompose(alpha);
  std::set<long> out;
  bool found = false;
  for (size_t j = 0; j < d.cosets().size(); ++j) {
    const Coset& cs = d.cosets()[j];
    if (cs.rep != u) continue;
    std::vector<long> z(c.size(), 0);
    bool ok = true;
    for (size_t i = 0; i < c.size() && ok; ++i) {
      const auto& p = cs.progressions[i];
      if (p.modulus == 0) {
        ok = c[i] == p.offset;
      } else {
        Rational q = (c[i] - p.offset) / p.modulus;
        ok = is_integer(q);
        if (ok) z[i] = to_long(q);
      }
    }
    if (!ok) continue;
    found = true;
    auto it = per_coset_[j].table.find(period_key(z, per_coset_[j].period));
    if (it != per_coset_[j].table.end()) out.insert(it->second.begin(), it->second.end());
  }
  if (!found) fail(ErrorCode::InvalidArgument, "residues: " + to_string(alpha) + " is not a root");
  return out;
}

ResidueAssignment ResidueAssignment::create(const RootAutomorphism& s, const RootDatum& d,
                                            std::vector<CosetResidues> per_coset) {
  const long m = s.period();
  const size_t k = d.lattice_rank();
  if (per_coset.size() != d.cosets().size())
    fail(ErrorCode::InconsistentResidues, "residue data must list every coset");
  for (size_t j = 0; j < per_coset.size(); ++j) {
    auto& cr = per_coset[j];
    if (cr.period.size() != k) fail(ErrorCode::InconsistentResidues, "residue period has the wrong length");
    for (size_t i = 0; i < k; ++i) {
      if (d.cosets()[j].progressions[i].modulus == 0) cr.period[i] = 1;
      if (cr.period[i] < 1) fail(ErrorCode::InconsistentResidues, "residue period must be positive");
    }
    for (auto& [key, set] : cr.table) {
      std::set<long> reduced;
      for (long r : set) reduced.insert(pos_mod(r, m));
      set = std::move(reduced);
    }
    std::vector<long> zero(k, 0);
    for_each_index(d.cosets()[j], zero, cr.period, [&](const std::vector<long>& z) {
      auto it = cr.table.find(z);
      if (it == cr.table.end() || it->second.empty())
        fail(ErrorCode::InconsistentResidues, "root " + to_string(d.element(d.cosets()[j], z)) +
                                                  " lies in no R_i, so the R_i do not cover R");
    });
  }
  ResidueAssignment ra;
  ra.m_ = m;
  ra.per_coset_ = std::move(per_coset);

  // pi-compatibility and -R_i = R_{-i} on a window of two periods each way
  std::map<RatVector, std::pair<RatVector, std::set<long>>> by_pi;
  for (size_t j = 0; j < d.cosets().size(); ++j) {
    const auto& cr = ra.per_coset_[j];
    std::vector<long> lo(k), hi(k);
    for (size_t i = 0; i < k; ++i) lo[i] = -2 * cr.period[i], hi[i] = 2 * cr.period[i];
    for_each_index(d.cosets()[j], lo, hi, [&](const std::vector<long>& z) {
      RatVector alpha = d.element(d.cosets()[j], z);
      std::set<long> mine = ra.residues(d, alpha);
      std::set<long> negated;
      for (long r : mine) negated.insert(pos_mod(-r, m));
      if (ra.residues(d, vneg(alpha)) != negated)
        fail(ErrorCode::InconsistentResidues, "-R_i != R_{-i} at " + to_string(alpha));
      RatVector p = pi(s, alpha);
      auto [it, fresh] = by_pi.emplace(p, std::make_pair(alpha, mine));
      if (!fresh && it->second.second != mine)
        fail(ErrorCode::InconsistentResidues, "pi(" + to_string(alpha) + ") = pi(" + to_string(it->second.first) +
                                                  ") but their residue sets differ");
    });
  }
  return ra;
}

ResidueAssignment ResidueAssignment::trivial(const RootAutomorphism& s, const RootDatum& d) {
  std::vector<CosetResidues> per;
  for (size_t j = 0; j < d.cosets().size(); ++j) {
    CosetResidues cr{std::vector<long>(d.lattice_rank(), 1), {}};
    cr.table[std::vector<long>(d.lattice_rank(), 0)] = {0};
    per.push_back(std::move(cr));
  }
  if (s.period() != 1) fail(ErrorCode::InconsistentResidues, "trivial residues need sigma of period 1");
  return create(s, d, std::move(per));
}

ResidueAssignment ResidueAssignment::from_function(const RootAutomorphism& s, const RootDatum& d,
                                                   const std::vector<std::vector<long>>& periods,
                                                   const std::function<std::set<long>(const RatVector&)>& fn) {
  std::vector<CosetResidues> per;
  for (size_t j = 0; j < d.cosets().size(); ++j) {
    CosetResidues cr{periods.at(j), {}};
    for (size_t i = 0; i < d.lattice_rank(); ++i)
      if (d.cosets()[j].progressions[i].modulus == 0) cr.period[i] = 1;
    std::vector<long> zero(d.lattice_rank(), 0);
    for_each_index(d.cosets()[j], zero, cr.period,
                   [&](const std::vector<long>& z) { cr.table[z] = fn(d.element(d.cosets()[j], z)); });
    per.push_back(std::move(cr));
  }
  return create(s, d, std::move(per));
}

// ---- the affinized datum ---------------------------------------------------

RatVector AffinizedSpace::embed(const RatVector& fixed_vector, const Rational& delta_coeff) const {
  SpanChart<Rational> chart(fixed_basis, fixed_vector.size(), Rational(0));
  auto c = chart.coords(fixed_vector);
  if (!c) fail(ErrorCode::Internal, "affinized space: vector " + to_string(fixed_vector) + " is not sigma-fixed");
  RatVector out = *c;
  out.push_back(delta_coeff);
  out.push_back(Rational(0));
  return out;
}

AffinizedSpace affinized_space(const RootAutomorphism& s, const RootDatum& d) {
  AffinizedSpace sp;
  sp.fixed_basis = fixed_subspace(s.matrix());
  const size_t f = sp.fixed_basis.size();
  sp.delta_index = f;
  sp.gamma_index = f + 1;
  sp.form = RatMatrix(f + 2, f + 2, Rational(0));
  for (size_t i = 0; i < f; ++i)
    for (size_t j = 0; j < f; ++j) sp.form(i, j) = d.pair(sp.fixed_basis[i], sp.fixed_basis[j]);
  sp.form(f, f + 1) = 1;
  sp.form(f + 1, f) = 1;
  return sp;
}

RootDatum affinized_root_datum(const RootAutomorphism& s, const RootDatum& d, const ResidueAssignment& residues) {
  const long m = s.period();
  const size_t k = d.lattice_rank();
  AffinizedSpace sp = affinized_space(s, d);
  std::vector<RatVector> iso;
  for (const auto& delta : d.isotropic_basis()) iso.push_back(sp.embed(delta, 0));
  RatVector dt(sp.form.rows(), Rational(0));
  dt[sp.delta_index] = 1;
  iso.push_back(dt);

  std::vector<Coset> cosets;
  for (size_t j = 0; j < d.cosets().size(); ++j) {
    const Coset& c = d.cosets()[j];
    const auto& cr = residues.per_coset()[j];
    for (const auto& [z, set] : cr.table) {
      RatVector rep = sp.embed(pi(s, d.element(c, z)), 0);
      for (long r : set) {
        Coset out{rep, {}};
        for (size_t i = 0; i < k; ++i) out.progressions.push_back({Rational(0), c.progressions[i].modulus * cr.period[i]});
        out.progressions.push_back({Rational(r), m});
        cosets.push_back(std::move(out));
      }
    }
  }
  return RootDatum::create(sp.form, std::move(cosets), std::move(iso));
}

namespace {

std::vector<RatVector> radical_of(const std::vector<RatVector>& vectors, const RatMatrix& form) {
  const size_t n = form.rows();
  auto gens = span_basis(vectors, n, Rational(0));
  if (gens.empty()) return {};
  RatMatrix gram(gens.size(), gens.size(), Rational(0));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < gens.size(); ++j) gram(i, j) = bilinear(form, gens[i], gens[j]);
  std::vector<RatVector> out;
  for (const auto& kv : kernel(gram)) {
    RatVector v(n, Rational(0));
    for (size_t i = 0; i < gens.size(); ++i) v = vadd(v, scale(kv[i], gens[i]));
    out.push_back(v);
  }
  return out;
}

}  // namespace

Transfer nondegeneracy_transfer(const RootAutomorphism& s, const RootDatum& d) {
  if (!ears::check_nondegenerate(d))
    fail(ErrorCode::NotApplicable, "non-degeneracy transfer: the input datum is degenerate");
  AffinizedSpace sp = affinized_space(s, d);
  const size_t n = sp.form.rows();
  // span(R~) = pi(span R) + Q delta~ whatever the residues are
  std::vector<RatVector> gens;
  for (const auto& c : d.cosets()) gens.push_back(sp.embed(pi(s, base_element(d, c)), 0));
  for (const auto& g : d.span_generators()) gens.push_back(sp.embed(pi(s, g), 0));
  RatVector dt(n, Rational(0));
  dt[sp.delta_index] = 1;
  gens.push_back(dt);
  auto rad = radical_of(gens, sp.form);

  std::vector<RatVector> expected;
  for (const auto& v : fixed_radical(s, d)) expected.push_back(sp.embed(v, 0));
  const size_t fixed_dim = expected.size();
  expected.push_back(dt);

  Transfer t;
  t.fixed_radical_dim = fixed_dim;
  t.affinized_radical_dim = rad.size();
  bool direct = rank(RatMatrix::from_columns(expected, n, Rational(0))) == fixed_dim + 1;
  bool same_dim = rad.size() == expected.size();
  bool contained = true;
  if (!rad.empty()) {
    SpanChart<Rational> chart(rad, n, Rational(0));
    for (const auto& v : expected) contained = contained && chart.contains(v);
  } else {
    contained = false;
  }
  t.holds = direct && same_dim && contained;
  return t;
}

AffinizationReport affinization_report(const RootAutomorphism& s, const RootDatum& d) {
  AffinizationReport r;
  auto crit = criterion_3_64(s, d);
  r.criterion_3_64 = crit.holds;
  r.witness = crit.witness;
  r.corollary = corollary_3_65_verdict(s, d);
  if (!crit.holds) {
    r.verdict = "empty_nonisotropic";
    return r;
  }
  r.verdict = "tame_eala";
  r.bar_projected_roots = affinized_bar_roots(s, d);
  r.type = rootsys::recognize_type(r.bar_projected_roots->roots(), r.bar_projected_roots->form());
  r.nullity = affinized_nullity(s, d);
  r.nondegenerate = ears::check_nondegenerate(d) && nondegeneracy_transfer(s, d).holds;
  return r;
}

}  // namespace eala::autoroot
