#include "eala/json_io.hpp"

namespace eala::json_io {

bool Node::has(const std::string& key) const { return object().contains(key); }

Node Node::at(const std::string& key) const {
  const auto& o = object();
  auto it = o.find(key);
  if (it == o.end()) Node(*v_, ptr_ + "/" + key).error("missing required field");
  return Node(*it, ptr_ + "/" + key);
}

Node Node::at(size_t i) const {
  const auto& a = array();
  if (i >= a.size()) error("index out of range");
  return Node(a[i], ptr_ + "/" + std::to_string(i));
}

size_t Node::size() const { return array().size(); }

void Node::error(const std::string& what) const {
  fail(ErrorCode::Schema, (ptr_.empty() ? std::string("/") : ptr_) + ": " + what);
}

const Json& Node::object() const {
  if (!v_->is_object()) error("expected an object");
  return *v_;
}

const Json& Node::array() const {
  if (!v_->is_array()) error("expected an array");
  return *v_;
}

std::string Node::string() const {
  if (!v_->is_string()) error("expected a string");
  return v_->get<std::string>();
}

long Node::integer() const {
  if (!v_->is_number_integer()) error("expected an integer");
  return v_->get<long>();
}

bool Node::boolean() const {
  if (!v_->is_boolean()) error("expected true or false");
  return v_->get<bool>();
}

Rational Node::rational() const {
  if (v_->is_number_integer()) return Rational(v_->get<long>());
  if (v_->is_string()) {
    try {
      return parse_rational(v_->get<std::string>());
    } catch (const Error&) {
      error("not a rational number");
    }
  }
  error("expected an integer or a \"p/q\" string");
}

RatVector Node::vector() const {
  RatVector out;
  for (size_t i = 0; i < size(); ++i) out.push_back(at(i).rational());
  return out;
}

RatMatrix Node::matrix() const {
  const size_t rows = size();
  if (rows == 0) return RatMatrix(0, 0, Rational(0));
  std::vector<RatVector> r;
  for (size_t i = 0; i < rows; ++i) {
    r.push_back(at(i).vector());
    if (r.back().size() != r.front().size()) at(i).error("rows have different lengths");
  }
  return RatMatrix::from_rows(r, r.front().size(), Rational(0));
}

std::vector<long> Node::integers() const {
  std::vector<long> out;
  for (size_t i = 0; i < size(); ++i) out.push_back(at(i).integer());
  return out;
}

std::vector<std::vector<long>> Node::integer_matrix() const {
  std::vector<std::vector<long>> out;
  for (size_t i = 0; i < size(); ++i) out.push_back(at(i).integers());
  return out;
}

OJson write(const Rational& x) {
  if (is_integer(x) && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return to_string(x);
}

OJson write(const RatVector& v) {
  OJson a = OJson::array();
  for (const auto& x : v) a.push_back(write(x));
  return a;
}

OJson write(const RatMatrix& m) {
  OJson a = OJson::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    RatVector row;
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    a.push_back(write(row));
  }
  return a;
}

ears::RootDatum read_root_datum(const Node& n) {
  const long dim = n.at("dim").integer();
  if (dim < 0) n.at("dim").error("negative dimension");
  RatMatrix form = n.at("form").matrix();
  if (form.rows() != size_t(dim) || form.cols() != size_t(dim)) n.at("form").error("form must be dim x dim");
  std::vector<RatVector> iso;
  if (n.has("isotropic_basis")) {
    Node b = n.at("isotropic_basis");
    for (size_t i = 0; i < b.size(); ++i) {
      iso.push_back(b.at(i).vector());
      if (iso.back().size() != size_t(dim)) b.at(i).error("vector length differs from dim");
    }
  }
  std::vector<ears::Coset> cosets;
  Node cs = n.at("cosets");
  for (size_t i = 0; i < cs.size(); ++i) {
    Node c = cs.at(i);
    ears::Coset coset;
    coset.rep = c.at("rep").vector();
    if (coset.rep.size() != size_t(dim)) c.at("rep").error("vector length differs from dim");
    if (c.has("progressions")) {
      Node ps = c.at("progressions");
      for (size_t k = 0; k < ps.size(); ++k) {
        Node p = ps.at(k);
        long mod = p.at("modulus").integer();
        if (mod < 0) p.at("modulus").error("modulus must be non-negative");
        coset.progressions.push_back({p.at("offset").rational(), mod});
      }
    } else {
      coset.progressions.assign(iso.size(), ears::Progression{Rational(0), 1});
    }
    if (coset.progressions.size() != iso.size()) c.error("need one progression per isotropic generator");
    cosets.push_back(std::move(coset));
  }
  try {
    return ears::RootDatum::create(form, std::move(cosets), std::move(iso)).normalized();
  } catch (const Error& e) {
    n.error(e.what());
  }
}

OJson write_root_datum(const ears::RootDatum& d) {
  OJson o;
  o["dim"] = d.dim();
  o["form"] = write(d.form());
  OJson cs = OJson::array();
  for (const auto& c : d.cosets()) {
    OJson co;
    co["rep"] = write(c.rep);
    OJson ps = OJson::array();
    for (const auto& p : c.progressions) {
      OJson po;
      po["offset"] = write(p.offset);
      po["modulus"] = p.modulus;
      ps.push_back(po);
    }
    co["progressions"] = ps;
    cs.push_back(co);
  }
  o["cosets"] = cs;
  OJson iso = OJson::array();
  for (const auto& v : d.isotropic_basis()) iso.push_back(write(v));
  o["isotropic_basis"] = iso;
  return o;
}

OJson write_report(const autoroot::AffinizationReport& r) {
  OJson o;
  o["verdict"] = r.verdict;
  o["criterion_3_64"] = r.criterion_3_64;
  o["criterion_witness"] = r.witness ? write(*r.witness) : OJson(nullptr);
  o["type"] = r.type ? OJson(r.type->to_string()) : OJson(nullptr);
  o["nullity"] = r.nullity ? OJson(*r.nullity) : OJson(nullptr);
  o["nondegenerate"] = r.nondegenerate;
  OJson c;
  c["sufficient"] = r.corollary.sufficient;
  c["necessary_given_prime"] = r.corollary.necessary_given_prime ? OJson(*r.corollary.necessary_given_prime) : OJson(nullptr);
  c["status"] = r.corollary.status;
  o["corollary_3_65"] = c;
  return o;
}

}  // namespace eala::json_io
