#pragma once

#include <string>
#include <vector>

#include "doxepi/funcpair.hpp"
#include "doxepi/relation.hpp"

namespace doxepi {

/// Distributed/common belief (DD/CD) and knowledge (DE/CE).
enum class GroupKind { kDistributedBelief, kCommonBelief, kDistributedKnowledge, kCommonKnowledge };

const char* to_string(GroupKind kind) noexcept;

/// Agents bound to validated pairs over one shared state space.
class Community {
 public:
  struct Member {
    std::string label;
    FunctionPair pair;
  };

  /// Throws std::invalid_argument for an empty member list or duplicate
  /// labels, SpaceMismatch for mixed state spaces.
  explicit Community(std::vector<Member> members);

  const std::vector<Member>& members() const noexcept { return members_; }
  const SpacePtr& space() const noexcept { return members_.front().pair.space(); }

 private:
  std::vector<Member> members_;
};

/// DD = ⋂ D_a, CD = (⋃ D_a)⁺, DE = ⋂ E_a, CE = (⋃ E_a)*.
Relation group_relation(const Community& community, GroupKind kind);

/// Same constructions over relations already computed per member: doxastic
/// ones for the belief kinds, epistemic ones for the knowledge kinds.
/// Throws std::invalid_argument for an empty list.
Relation group_relation(const std::vector<Relation>& members, GroupKind kind);

}  // namespace doxepi
