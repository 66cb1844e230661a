#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doxepi/diagnostics.hpp"
#include "doxepi/funcpair.hpp"
#include "doxepi/relation.hpp"
#include "doxepi/state_function.hpp"

namespace doxepi {

/// Name of the type interpreted as the whole state space.
inline constexpr const char* kStateType = "S";

/// Diagnostic codes emitted while loading a model document.
namespace model_error {
inline constexpr const char* kMalformed = "malformed-document";
inline constexpr const char* kUnknownState = "unknown-state";
inline constexpr const char* kUnknownName = "unknown-name";
inline constexpr const char* kTypeMismatch = "type-mismatch";
inline constexpr const char* kPartialFunction = "partial-function";
inline constexpr const char* kNonIdempotentBias = "non-idempotent-bias";
inline constexpr const char* kIdentityOverridden = "identity-overridden";
inline constexpr const char* kInvalidLabelPair = "invalid-label-pair";
inline constexpr const char* kNoAtoms = "no-atoms";
inline constexpr const char* kBadName = "bad-name";
}  // namespace model_error

/// Declared type of a function name, T → T'.
struct FunctionType {
  std::string domain;
  std::string codomain;
  bool operator==(const FunctionType&) const = default;
};

/// A (visibility name, bias name) modality label.
struct LabelNames {
  std::string visibility;
  std::string bias;
  bool operator==(const LabelNames&) const = default;
};

/// The name-level signature: atoms, types, bias names (𝒢), visibility names
/// (ℱ), and the belief/knowledge label sets keyed by agent label.
/// Only names actually declared or used are listed; identities id_T are
/// implicit members of 𝒢 (and id_S of ℱ).
struct SimilarityType {
  std::set<std::string> atoms;
  std::set<std::string> types;
  std::map<std::string, FunctionType> bias_names;
  std::map<std::string, FunctionType> visibility_names;
  std::map<std::string, LabelNames> belief_labels;
  std::map<std::string, LabelNames> knowledge_labels;

  bool operator==(const SimilarityType&) const = default;
};

/// A function name's interpretation together with its declared type.
struct TypedFunction {
  FunctionType type;
  StateFunction function;
  /// Set for {"compose": [outer, inner]} declarations.
  std::optional<std::pair<std::string, std::string>> composite;
  /// Member of 𝒢 (and therefore required to be idempotent).
  bool bias = false;

  bool operator==(const TypedFunction&) const = default;
};

/// ι: types to state subsets and function names to functions.
class Instantiation {
 public:
  Instantiation(SpacePtr space, std::map<std::string, StateSet> types,
                std::map<std::string, TypedFunction> functions);

  const SpacePtr& space() const noexcept { return space_; }
  const std::map<std::string, StateSet>& types() const noexcept { return types_; }
  /// Explicitly declared functions (identities and dotted composites not included).
  const std::map<std::string, TypedFunction>& functions() const noexcept { return functions_; }

  /// Interpretation of a type name; nullptr if undeclared.
  const StateSet* type(std::string_view name) const;

  /// Resolves a function name: declared names directly, `id_T` to the
  /// identity on ι(T), and dotted names "h.f" to ι(h) ∘ ι(f), right to left.
  Outcome<TypedFunction> interpret(std::string_view name) const;

  bool operator==(const Instantiation& other) const;

 private:
  SpacePtr space_;
  std::map<std::string, StateSet> types_;
  std::map<std::string, TypedFunction> functions_;
};

enum class Modality { kBelief, kKnowledge };

/// A resolved label: the names, the validated pair, and the accessibility
/// relation (D for belief labels, E for knowledge labels).
struct LabelBinding {
  LabelNames names;
  FunctionPair pair;
  Relation relation;
  /// Relation was replaced via Model::override_relation().
  bool overridden = false;

  /// ι(g) = id on Im(ι(f)).
  bool unbiased() const { return is_unbiased(pair); }
  /// ι(f) = id_S.
  bool visibility_is_identity() const;
  /// ι(g) restricted to Im(ι(f)) is injective.
  bool bias_injective() const;
};

class Model {
 public:
  Model(SimilarityType signature, Instantiation instantiation, std::map<std::string, StateSet> valuation,
        std::map<std::string, LabelBinding> belief, std::map<std::string, LabelBinding> knowledge);

  const SpacePtr& space() const noexcept { return instantiation_.space(); }
  const SimilarityType& signature() const noexcept { return signature_; }
  const Instantiation& instantiation() const noexcept { return instantiation_; }
  const std::map<std::string, StateSet>& valuation() const noexcept { return valuation_; }
  const std::map<std::string, LabelBinding>& belief_labels() const noexcept { return belief_; }
  const std::map<std::string, LabelBinding>& knowledge_labels() const noexcept { return knowledge_; }

  /// nullptr if the label is absent.
  const LabelBinding* label(Modality modality, std::string_view agent) const;

  /// Replaces the accessibility relation of one label, bypassing the
  /// constructive guarantee. Used for fault injection.
  /// Throws std::out_of_range for an unknown label, SpaceMismatch for a
  /// relation over another space.
  void override_relation(Modality modality, const std::string& agent, Relation relation);

  bool operator==(const Model& other) const;

 private:
  SimilarityType signature_;
  Instantiation instantiation_;
  std::map<std::string, StateSet> valuation_;
  std::map<std::string, LabelBinding> belief_;
  std::map<std::string, LabelBinding> knowledge_;
};

/// Parses and validates a JSON model document.
Outcome<Model> load_model(std::string_view document);
Outcome<Model> load_model_file(const std::filesystem::path& path);

/// JSON document that load_model() reads back to an equal model.
/// Overridden relations are not representable and are dropped.
std::string serialize_model(const Model& model);

/// Relation file: {"states": [...], "pairs": [["s0","s1"], ...]}.
Outcome<Relation> load_relation(std::string_view document);
Outcome<Relation> load_relation_file(const std::filesystem::path& path);
/// Reads pairs against an existing space (states key optional but must match).
Outcome<Relation> load_relation(std::string_view document, const SpacePtr& space);
std::string serialize_relation(const Relation& relation);

}  // namespace doxepi
