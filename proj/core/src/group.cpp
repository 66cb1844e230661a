#include "doxepi/group.hpp"

#include <set>
#include <stdexcept>

namespace doxepi {

const char* to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::kDistributedBelief: return "DD";
    case GroupKind::kCommonBelief: return "CD";
    case GroupKind::kDistributedKnowledge: return "DE";
    case GroupKind::kCommonKnowledge: return "CE";
  }
  return "?";
}

Community::Community(std::vector<Member> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("community must have at least one member");
  std::set<std::string> labels;
  for (const auto& m : members_) {
    if (!labels.insert(m.label).second) {
      throw std::invalid_argument("duplicate agent label '" + m.label + "' in community");
    }
    require_same_space(members_.front().pair.space(), m.pair.space(), "community");
  }
}

Relation group_relation(const std::vector<Relation>& members, GroupKind kind) {
  if (members.empty()) throw std::invalid_argument("group relation over an empty community");
  Relation acc = members.front();
  const bool distributed =
      kind == GroupKind::kDistributedBelief || kind == GroupKind::kDistributedKnowledge;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (distributed) {
      acc &= members[i];
    } else {
      acc |= members[i];
    }
  }
  switch (kind) {
    case GroupKind::kCommonBelief: return closure(acc, ClosureKind::kTransitive);
    case GroupKind::kCommonKnowledge: return closure(acc, ClosureKind::kReflexiveTransitive);
    default: return acc;
  }
}

Relation group_relation(const Community& community, GroupKind kind) {
  const bool belief = kind == GroupKind::kDistributedBelief || kind == GroupKind::kCommonBelief;
  std::vector<Relation> relations;
  relations.reserve(community.members().size());
  for (const auto& m : community.members()) {
    relations.push_back(belief ? doxastic(m.pair) : epistemic(m.pair));
  }
  return group_relation(relations, kind);
}

}  // namespace doxepi
