#pragma once

#include <memory>
#include <string>
#include <vector>

#include "doxepi/funcpair.hpp"
#include "doxepi/relation.hpp"
#include "doxepi/state_function.hpp"

namespace doxepi {

/// All action traces of length ≤ depth over an agent alphabet.
/// A trace is written "0" followed by ".a" for each action in the order the
/// actions happened, so α_b(α_a(0)) is "0.a.b". States are ordered by length,
/// then lexicographically by agent position; the empty trace is state 0.
class TraceSpace {
 public:
  /// Throws std::invalid_argument on an empty or duplicated agent list, or
  /// labels containing '.'.
  TraceSpace(std::vector<std::string> agents, std::size_t depth);

  /// Agents labelled "1".."count".
  static TraceSpace numbered(std::size_t count, std::size_t depth);

  const std::vector<std::string>& agents() const noexcept { return agents_; }
  std::size_t depth() const noexcept { return depth_; }
  const SpacePtr& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return traces_.size(); }

  /// Throws std::out_of_range for an unknown agent.
  std::size_t agent_index(const std::string& agent) const;

  /// Agent positions, oldest action first.
  const std::vector<std::size_t>& actions(std::size_t state) const { return traces_.at(state); }
  std::size_t length(std::size_t state) const { return actions(state).size(); }

  /// Index of an action sequence; kUndefined-like SIZE_MAX if longer than depth.
  std::size_t index_of(const std::vector<std::size_t>& actions) const;

  /// α_a(s), or StateFunction::kUndefined when s is already at full depth.
  std::size_t act(std::size_t agent, std::size_t state) const;

  /// Traces shorter than depth.
  StateSet interior() const;

 private:
  std::vector<std::string> agents_;
  std::size_t depth_;
  SpacePtr space_;
  std::vector<std::vector<std::size_t>> traces_;
};

/// π_a(s): the subsequence of agent a's actions.
std::size_t project(const TraceSpace& space, const std::string& agent, std::size_t state);

/// π_a as a total function on the trace space.
StateFunction projection(const TraceSpace& space, const std::string& agent);

/// s ≡_a s' iff π_a(s) = π_a(s').
Relation indistinguishability(const TraceSpace& space, const std::string& agent);

/// α_a as a partial function, undefined on full-depth traces.
StateFunction action_function(const TraceSpace& space, const std::string& agent);

struct IndistReport {
  std::string agent;
  /// (π_a, id on Im π_a) passed validate_pair.
  bool pair_valid = false;
  /// epistemic(pair) = ≡_a
  bool epistemic_matches = false;
  /// kernel(π_a) = ≡_a
  bool kernel_matches = false;
  std::vector<Relation::Pair> missing;
  std::vector<Relation::Pair> extra;

  bool pass() const noexcept { return pair_valid && epistemic_matches && kernel_matches; }
};

IndistReport verify_indist_correspondence(const TraceSpace& space, const std::string& agent);

/// Action terms over primitive agent actions.
struct ActionTerm;
using ActionPtr = std::shared_ptr<const ActionTerm>;

struct ActionTerm {
  enum class Kind { kPrim, kConverse, kUnion, kStar, kPower, kId };
  Kind kind;
  std::string agent;
  std::size_t exponent = 0;
  std::vector<ActionPtr> children;
};

namespace act {
ActionPtr prim(std::string agent);
ActionPtr converse(ActionPtr a);
ActionPtr unite(ActionPtr a, ActionPtr b);
ActionPtr star(ActionPtr a);
ActionPtr power(ActionPtr a, std::size_t n);
ActionPtr id();
}  // namespace act

std::string render(const ActionTerm& term);

/// Relation semantics over the bounded space. Primitive edges that would
/// leave the space are dropped.
Relation pdl_relation(const TraceSpace& space, const ActionTerm& term);

struct PdlReport {
  std::string agent;
  /// id ∪ (G ∪ G⁻¹)⁺ for G the graph of α_a.
  Relation left;
  /// R of (α_a ∪ α_a⁻¹)*.
  Relation right;
  /// Agreement on pairs between traces shorter than depth.
  bool interior_equal = false;
  /// Agreement on pairs touching a full-depth trace. Informational.
  bool boundary_equal = false;
  std::vector<Relation::Pair> interior_differences;

  bool pass() const noexcept { return interior_equal; }
};

PdlReport verify_pdl_correspondence(const TraceSpace& space, const std::string& agent);

}  // namespace doxepi
