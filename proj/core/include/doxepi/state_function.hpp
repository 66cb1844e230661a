#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "doxepi/state_space.hpp"

namespace doxepi {

/// A total map from a declared domain (a subset of a state space) into the
/// same state space. Carrier of visibility, bias and projection functions.
class StateFunction {
 public:
  static constexpr std::size_t kUndefined = std::numeric_limits<std::size_t>::max();

  /// `map` has one slot per state of `space`; slots outside `domain` must be
  /// kUndefined and slots inside must hold a valid state index.
  /// Throws std::invalid_argument otherwise.
  StateFunction(SpacePtr space, StateSet domain, std::vector<std::size_t> map);

  /// Total function on the full space.
  static StateFunction total(SpacePtr space, std::vector<std::size_t> map);
  static StateFunction identity(SpacePtr space);
  static StateFunction identity(SpacePtr space, StateSet domain);
  static StateFunction constant(SpacePtr space, std::size_t value);

  const SpacePtr& space() const noexcept { return space_; }
  const StateSet& domain() const noexcept { return domain_; }
  bool defined_at(std::size_t s) const noexcept { return domain_.contains(s); }

  /// Throws std::out_of_range outside the domain.
  std::size_t operator()(std::size_t s) const;

  /// Raw slot access; kUndefined outside the domain.
  std::size_t at_or_undefined(std::size_t s) const noexcept {
    return s < map_.size() ? map_[s] : kUndefined;
  }

  StateSet image() const;
  StateSet image_of(const StateSet& subset) const;

  /// Restriction to domain() ∩ subset.
  StateFunction restricted_to(const StateSet& subset) const;

  bool is_total() const noexcept { return domain_.count() == space_->size(); }
  bool is_identity_on(const StateSet& subset) const;
  bool is_idempotent() const;
  bool is_injective() const;

  /// Pointwise composition outer ∘ inner, defined on the part of inner's
  /// domain that inner maps into outer's domain.
  friend StateFunction compose(const StateFunction& outer, const StateFunction& inner);

  bool operator==(const StateFunction& other) const;

 private:
  SpacePtr space_;
  StateSet domain_;
  std::vector<std::size_t> map_;
};

StateFunction compose(const StateFunction& outer, const StateFunction& inner);

}  // namespace doxepi
