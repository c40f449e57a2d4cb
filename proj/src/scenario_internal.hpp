#pragma once

#include <memory>
#include <optional>

#include "eala/autoroot.hpp"
#include "eala/gcm.hpp"
#include "eala/scenario.hpp"

namespace eala::scenario::detail {

// Root-level view of a scenario: the datum of g, the induced automorphism and,
// when known, the eigenvalue residues of the root spaces.
struct RootContext {
  std::optional<ears::RootDatum> datum;
  std::optional<autoroot::RootAutomorphism> sigma;
  std::optional<autoroot::ResidueAssignment> residues;
  std::string residues_note;  // why residues are missing
  bool identity = false;
  std::optional<gcm::GCM> matrix;  // affine_gcm only
  std::optional<gcm::DiagramAutomorphism> diagram;
};

CheckOutcome outcome(const std::string& name, Outcome o, std::string witness, OJson details = OJson::object());
inline CheckOutcome pass_if(const std::string& name, bool ok, std::string witness, OJson details = OJson::object()) {
  return outcome(name, ok ? Outcome::Pass : Outcome::Fail, std::move(witness), std::move(details));
}

class AlgebraBackend {
 public:
  virtual ~AlgebraBackend() = default;
  virtual const RootContext& roots() const = 0;
  virtual CheckOutcome check(const std::string& name, const autoroot::AffinizationReport& rep) = 0;
  virtual OJson summary() const = 0;
  // Aff(g, sigma) satisfies EA1-EA5b on the window and is tame.
  virtual bool aff_tame_eala() = 0;
};

std::unique_ptr<AlgebraBackend> make_algebra_backend(const Scenario& s, long window);

}  // namespace eala::scenario::detail
