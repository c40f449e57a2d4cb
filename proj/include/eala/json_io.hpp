#pragma once

// JSON encodings of rationals, vectors, matrices and root data. Rationals are
// written as integers when integral and as "p/q" strings otherwise. Reading
// errors carry the JSON pointer of the offending value.

#include <string>
#include <vector>

#include "json.hpp"

#include "eala/autoroot.hpp"
#include "eala/ears.hpp"

namespace eala::json_io {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

// A value together with its JSON pointer, for diagnostics.
class Node {
 public:
  Node(const Json& value, std::string pointer) : v_(&value), ptr_(std::move(pointer)) {}

  const Json& value() const { return *v_; }
  const std::string& pointer() const { return ptr_; }

  bool has(const std::string& key) const;
  Node at(const std::string& key) const;   // required member
  Node at(size_t i) const;
  size_t size() const;                     // arrays only

  [[noreturn]] void error(const std::string& what) const;

  const Json& object() const;
  const Json& array() const;
  std::string string() const;
  long integer() const;
  bool boolean() const;
  Rational rational() const;
  RatVector vector() const;
  RatMatrix matrix() const;
  std::vector<long> integers() const;
  std::vector<std::vector<long>> integer_matrix() const;

 private:
  const Json* v_;
  std::string ptr_;
};

OJson write(const Rational& x);
OJson write(const RatVector& v);
OJson write(const RatMatrix& m);

ears::RootDatum read_root_datum(const Node& n);
OJson write_root_datum(const ears::RootDatum& d);

OJson write_report(const autoroot::AffinizationReport& r);

}  // namespace eala::json_io
