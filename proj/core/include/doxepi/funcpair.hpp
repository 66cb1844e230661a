#pragma once

#include "doxepi/diagnostics.hpp"
#include "doxepi/relation.hpp"
#include "doxepi/state_function.hpp"

namespace doxepi {

/// A visibility function f on the whole space together with an idempotent
/// bias g on Im(f). Only validate_pair() creates these.
///
/// g may be defined beyond Im(f); everything here looks at g restricted to
/// Im(f) only.
class FunctionPair {
 public:
  const StateFunction& visibility() const noexcept { return f_; }
  const StateFunction& bias() const noexcept { return g_; }
  const SpacePtr& space() const noexcept { return f_.space(); }
  /// Im(f).
  const StateSet& visible() const noexcept { return image_; }

  bool operator==(const FunctionPair& other) const { return f_ == other.f_ && g_ == other.g_; }

 private:
  friend Outcome<FunctionPair> validate_pair(StateFunction f, StateFunction g);
  FunctionPair(StateFunction f, StateFunction g, StateSet image)
      : f_(std::move(f)), g_(std::move(g)), image_(std::move(image)) {}

  StateFunction f_;
  StateFunction g_;
  StateSet image_;
};

/// Diagnostic codes emitted by validate_pair().
namespace pair_error {
inline constexpr const char* kVisibilityNotTotal = "visibility-not-total";
inline constexpr const char* kBiasUndefined = "bias-undefined-on-image";
inline constexpr const char* kBiasNotClosed = "bias-not-closed";
inline constexpr const char* kBiasNotIdempotent = "bias-not-idempotent";
inline constexpr const char* kFirstConstraint = "first-constraint-violated";
inline constexpr const char* kConstraintDisagreement = "constraint-disagreement";
}  // namespace pair_error

/// Checks that f is total, that g is defined on and closed over Im(f), and
/// both defining constraints: idempotency of g on Im(f), and
///   g(f(s)) = f(s')  ⇒  g(f(s')) = f(s')   for all s, s'.
/// The two constraints are equivalent for well-typed g; if they ever
/// disagree a kConstraintDisagreement diagnostic is added.
Outcome<FunctionPair> validate_pair(StateFunction f, StateFunction g);

/// s D s'  iff  g(f(s)) = f(s').  Serial, transitive and Euclidean.
Relation doxastic(const FunctionPair& pair);

/// (D ∪ D⁻¹)⁺. An equivalence relation containing D.
Relation epistemic(const FunctionPair& pair);

/// g is the identity on Im(f).
bool is_unbiased(const FunctionPair& pair);

/// The doxastic construction applied to arbitrary functions, with no pair
/// guarantees: s D s' iff f(s), g(f(s)) and f(s') are defined and equal.
Relation doxastic_of(const StateFunction& f, const StateFunction& g);

/// (doxastic_of(f, g) ∪ converse)⁺ for arbitrary functions.
Relation epistemic_of(const StateFunction& f, const StateFunction& g);

}  // namespace doxepi
