#pragma once

// Scenario files, the check registry and report assembly.
//
// A scenario names a source (root_datum, affine_gcm, toroidal, quantum_sl,
// sl / sl_loop), an automorphism, a window and a list of checks. Sources sl,
// toroidal with params.n, and quantum_sl with params.algebra = true build the
// Lie algebra itself; the others work with root data only.

#include <optional>
#include <string>
#include <vector>

#include "eala/json_io.hpp"

namespace eala::scenario {

using json_io::Json;
using json_io::OJson;

enum class Outcome { Pass, Fail, Undetermined };
std::string outcome_name(Outcome o);

struct CheckInfo {
  std::string name;
  bool needs_algebra = false;
  std::string summary;
};
// Every check, in report order.
const std::vector<CheckInfo>& check_registry();

struct Scenario {
  std::string id;
  std::string source;  // sl_loop is stored as sl
  Json params;
  Json automorphism;
  long window = 4;
  std::vector<std::string> checks;
  Json expect;  // optional {verdict, type, nullity}
  bool algebra_backed = false;
};

// Validates the shape of one scenario object. Throws Error(Schema).
Scenario parse_scenario(const Json& j, const std::string& pointer = "");
// A file holds one scenario object or an array of them. Ids must be unique.
std::vector<Scenario> parse_scenarios(const std::string& text);

struct RunOptions {
  std::optional<long> window;  // overrides the scenario window
  bool timing = false;         // timing breaks byte-identical output, so it is opt-in
};

struct CheckOutcome {
  std::string name;
  Outcome outcome = Outcome::Undetermined;
  std::string witness;
  OJson details;
};

struct Result {
  std::string id;
  std::vector<CheckOutcome> checks;
  OJson report;
  bool any_fail() const;
};

// Builds the scenario's objects and runs its checks. Input problems
// (unresolvable automorphisms, bad parameters) throw Error.
Result run(const Scenario& s, const RunOptions& opt = {});
// Runs scenarios concurrently; results are ordered by id.
std::vector<Result> run_all(const std::vector<Scenario>& s, const RunOptions& opt = {});
OJson batch_report(const std::vector<Result>& results);

struct Theorem48Table {
  OJson rows;
  bool all_agree = true;
  size_t pairs = 0;
};
// Every curated affine matrix with at most max_rank + 1 nodes, every diagram
// automorphism: the verdict computed from roots against the theorem.
Theorem48Table theorem48_table(int max_rank);
std::string render_theorem48(const Theorem48Table& t);

}  // namespace eala::scenario
