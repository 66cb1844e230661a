#pragma once

#include <string>
#include <vector>

#include "doxepi/diagnostics.hpp"
#include "doxepi/funcpair.hpp"
#include "doxepi/relation.hpp"

namespace doxepi {

/// Representative choice for the classes of an equivalence on a subset of
/// the space. Each class is represented by its minimum-index member.
struct CanonicalChoice {
  /// representative[s] for s in the covered subset, StateFunction::kUndefined elsewhere.
  std::vector<std::size_t> representative;

  static CanonicalChoice min_index(const Relation& equivalence, const StateSet& carrier);
  std::size_t of(std::size_t s) const { return representative.at(s); }
};

namespace synthesis_error {
inline constexpr const char* kEmpty = "empty-relation";
inline constexpr const char* kNotSerial = "not-serial";
inline constexpr const char* kNotTransitive = "not-transitive";
inline constexpr const char* kNotEuclidean = "not-euclidean";
inline constexpr const char* kNotReflexive = "not-reflexive";
inline constexpr const char* kNotSymmetric = "not-symmetric";
}  // namespace synthesis_error

/// {(s, s') ∈ r | s ∈ Im(r)}: the equivalence on Im(r) that a KD45 relation induces.
Relation image_equivalence(const Relation& r);

/// Builds (f, g) with doxastic(f, g) = r from a non-empty serial, transitive,
/// Euclidean relation. f sends states of Im(r) to their class representative
/// and fixes the rest; g fixes Im(r) and sends any other state to the
/// representative of its (minimum-index) successor's class.
Outcome<FunctionPair> from_kd45(const Relation& r);

/// Builds (π, id on Im(π)) with epistemic = doxastic = e from a non-empty
/// equivalence relation; π collapses each class to its representative.
Outcome<FunctionPair> from_equivalence(const Relation& e);

struct RoundtripReport {
  bool kd45 = false;
  bool equivalence = false;
  bool kd45_roundtrip = false;
  bool equivalence_roundtrip = false;
  /// Why a branch did not apply or what differed.
  std::vector<std::string> notes;

  /// Every applicable branch round-tripped, and at least one applied.
  bool pass() const noexcept {
    return (kd45 || equivalence) && (!kd45 || kd45_roundtrip) && (!equivalence || equivalence_roundtrip);
  }
};

RoundtripReport roundtrip_check(const Relation& r);

}  // namespace doxepi
