#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "doxepi/formula.hpp"
#include "doxepi/group.hpp"
#include "doxepi/signature.hpp"

namespace doxepi {

/// A formula mentions an atom or agent label the model does not define.
class UnresolvedName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// {s | every r-successor of s lies in x}.
StateSet box(const Relation& r, const StateSet& x);

/// Bottom-up evaluator with a memo table keyed on subformula identity.
/// Not thread-safe; use one per thread.
class Evaluator {
 public:
  explicit Evaluator(const Model& model) : model_(model) {}

  /// Throws UnresolvedName.
  const StateSet& extension(const FormulaPtr& phi);

  /// Accessibility relation behind a modal node.
  const Relation& relation(const Formula& modal);

  const Model& model() const noexcept { return model_; }

 private:
  const Model& model_;
  std::unordered_map<const Formula*, std::pair<FormulaPtr, StateSet>> memo_;
  std::map<std::string, Relation> group_cache_;
};

struct Extension {
  FormulaPtr formula;
  StateSet states;
};

Extension extension(const Model& model, const FormulaPtr& phi);

struct Validity {
  bool valid = false;
  /// First state outside the extension.
  std::optional<std::size_t> counterexample;
};

Validity valid_in_model(const Model& model, const FormulaPtr& phi);

/// Formulas up to a depth, one representative per distinct extension.
struct PoolEntry {
  FormulaPtr formula;
  StateSet extension;
};

/// Closes {atoms, ⊥} under ¬, ∧, B[a], K[a] up to `depth`, keeping the
/// first (shallowest) formula for each extension. Every formula of depth
/// ≤ depth over the model's atoms and labels has its extension in the pool,
/// unless the pool was cut off at `max_entries`.
std::vector<PoolEntry> formula_pool(const Model& model, std::size_t depth, std::size_t max_entries = 4096);

struct Counterexample {
  std::string state;
  /// Instantiating formulas (or valuations, for frame-level checks).
  std::vector<std::string> instances;
};

struct LawReport {
  std::string id;
  std::string agent;
  std::string claim;
  /// Asserted laws must hold; unasserted ones are probes reported for information.
  bool asserted = true;
  bool holds = true;
  std::size_t instances_checked = 0;
  std::optional<Counterexample> counterexample;

  const char* status() const noexcept { return holds ? "valid-in-model" : "falsified"; }
};

struct LawSuiteOptions {
  std::size_t depth = 3;
  /// Extra random formulas of depth ≤ `depth` checked per law instance slot.
  std::size_t sampled_formulas = 0;
  std::uint64_t seed = 0;
  std::size_t max_pool = 4096;
};

/// KD45 laws for every belief label, S5 laws for every knowledge label, and
/// the modality conditionals under their detected side conditions (probed
/// unasserted where the side condition fails), followed by
/// iff_condition_checks() and unasserted group-modality probes.
std::vector<LawReport> law_suite(const Model& model, const LawSuiteOptions& options = {});

/// Biconditionals between a semantic side (validity over every valuation of
/// the schematic variable) and a functional side, per label:
///   bias-cancellation                      K↔B valid      ⇔ g = id on Im(f)
///   injective-bias-is-identity             g injective    ⇔ g = id on Im(f)
///   negation-complete-knowledge            ¬K→K¬ valid    ⇔ g injective   (f = id_S)
///   negation-complete-is-perfect-knowledge ¬K→K¬ valid    ⇔ E = id_S      (f = id_S)
std::vector<LawReport> iff_condition_checks(const Model& model);

/// Candidate valuations for frame-level checks: every subset when the space
/// has at most `exhaustive_limit` states, otherwise the successor sets of
/// `relations`, singletons, co-singletons, ∅ and the full set. The reduced
/// family is complete for the two schemata used by iff_condition_checks().
std::vector<StateSet> frame_valuations(std::size_t states, const std::vector<const Relation*>& relations,
                                       std::size_t exhaustive_limit = 12);

/// Every asserted law holds.
bool all_asserted_hold(const std::vector<LawReport>& reports);

std::string laws_to_json(const std::vector<LawReport>& reports, const LawSuiteOptions& options);
std::string laws_to_text(const std::vector<LawReport>& reports);

}  // namespace doxepi
