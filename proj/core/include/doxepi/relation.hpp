#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doxepi/state_function.hpp"
#include "doxepi/state_space.hpp"

namespace doxepi {

/// Binary relation over one state space, stored as a dense bit matrix
/// (one successor set per state).
class Relation {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  explicit Relation(SpacePtr space);

  static Relation identity(SpacePtr space);
  static Relation identity_on(SpacePtr space, const StateSet& subset);
  static Relation full(SpacePtr space);
  /// Throws std::out_of_range on an index outside the space.
  static Relation from_pairs(SpacePtr space, const std::vector<Pair>& pairs);
  /// Graph {(s, h(s))} of a function over its domain.
  static Relation graph(const StateFunction& h);
  /// One successor set per state.
  static Relation from_rows(SpacePtr space, std::vector<StateSet> rows);

  const SpacePtr& space() const noexcept { return space_; }
  std::size_t states() const noexcept { return rows_.size(); }

  bool contains(std::size_t s, std::size_t t) const noexcept {
    return s < rows_.size() && rows_[s].contains(t);
  }
  void insert(std::size_t s, std::size_t t);
  void erase(std::size_t s, std::size_t t);

  const StateSet& successors(std::size_t s) const { return rows_.at(s); }
  StateSet predecessors(std::size_t t) const;

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<Pair> pairs() const;

  bool is_subset_of(const Relation& other) const;
  Relation& operator|=(const Relation& other);
  Relation& operator&=(const Relation& other);
  friend Relation operator|(Relation a, const Relation& b) { return a |= b; }
  friend Relation operator&(Relation a, const Relation& b) { return a &= b; }

  /// Pairs whose endpoints both lie in `subset`.
  Relation restricted_to(const StateSet& subset) const;

  bool operator==(const Relation& other) const;

 private:
  SpacePtr space_;
  std::vector<StateSet> rows_;
};

enum class ClosureKind { kTransitive, kReflexiveTransitive };

/// Frame conditions checked by classify().
enum class FrameCondition {
  kSerial,
  kReflexive,
  kSymmetric,
  kTransitive,
  kEuclidean,
  kFunctional,
};

const char* to_string(FrameCondition c) noexcept;

struct PropertyReport {
  bool serial = false;
  bool transitive = false;
  bool euclidean = false;
  bool symmetric = false;
  bool reflexive = false;
  bool functional = false;
  bool equivalence = false;

  bool kd45() const noexcept { return serial && transitive && euclidean; }
  bool operator==(const PropertyReport&) const = default;
};

/// Concrete states falsifying a frame condition, e.g. {s} for seriality,
/// {s, s', s''} for transitivity and Euclideanness.
struct FrameWitness {
  FrameCondition condition;
  std::vector<std::size_t> states;
};

Relation converse(const Relation& r);

/// (s, s'') in the result iff s r1 s' and s' r2 s'' for some s'.
/// Throws SpaceMismatch for relations over different spaces.
Relation compose(const Relation& first, const Relation& second);

Relation closure(const Relation& r, ClosureKind kind);

StateSet image(const Relation& r);

/// {(s, s') | h(s) = h(s')} over h's domain.
Relation kernel(const StateFunction& h);

PropertyReport classify(const Relation& r);

/// First violation of `condition` in state order, if any.
std::optional<FrameWitness> find_violation(const Relation& r, FrameCondition condition);

/// Smallest equivalence relation containing r: (r ∪ r⁻¹ ∪ id)*.
Relation smallest_equivalence(const Relation& r);

/// Human-readable "{(a,b), ...}" using state names.
std::string format_relation(const Relation& r);

/// Pairs in `a` but not in `b`.
std::vector<Relation::Pair> difference(const Relation& a, const Relation& b);

}  // namespace doxepi
