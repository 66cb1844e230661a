#include "doxepi/state_function.hpp"

#include <stdexcept>
#include <string>

namespace doxepi {

StateFunction::StateFunction(SpacePtr space, StateSet domain, std::vector<std::size_t> map)
    : space_(std::move(space)), domain_(std::move(domain)), map_(std::move(map)) {
  if (!space_) throw std::invalid_argument("state function needs a state space");
  const std::size_t n = space_->size();
  if (domain_.universe() != n || map_.size() != n) {
    throw std::invalid_argument("state function sized for a different state space");
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (domain_.contains(s)) {
      if (map_[s] >= n) {
        throw std::invalid_argument("state function is undefined at domain state '" +
                                    space_->name(s) + "'");
      }
    } else if (map_[s] != kUndefined) {
      throw std::invalid_argument("state function maps '" + space_->name(s) +
                                  "' which lies outside its domain");
    }
  }
}

StateFunction StateFunction::total(SpacePtr space, std::vector<std::size_t> map) {
  const std::size_t n = space->size();
  return StateFunction(std::move(space), StateSet::full(n), std::move(map));
}

StateFunction StateFunction::identity(SpacePtr space) {
  const std::size_t n = space->size();
  return identity(std::move(space), StateSet::full(n));
}

StateFunction StateFunction::identity(SpacePtr space, StateSet domain) {
  std::vector<std::size_t> map(space->size(), kUndefined);
  domain.for_each([&](std::size_t s) { map[s] = s; });
  return StateFunction(std::move(space), std::move(domain), std::move(map));
}

StateFunction StateFunction::constant(SpacePtr space, std::size_t value) {
  std::vector<std::size_t> map(space->size(), value);
  return total(std::move(space), std::move(map));
}

std::size_t StateFunction::operator()(std::size_t s) const {
  if (!domain_.contains(s)) {
    throw std::out_of_range("state function applied outside its domain");
  }
  return map_[s];
}

StateSet StateFunction::image() const { return image_of(domain_); }

StateSet StateFunction::image_of(const StateSet& subset) const {
  StateSet out(space_->size());
  (subset & domain_).for_each([&](std::size_t s) { out.insert(map_[s]); });
  return out;
}

StateFunction StateFunction::restricted_to(const StateSet& subset) const {
  StateSet dom = domain_ & subset;
  std::vector<std::size_t> map(space_->size(), kUndefined);
  dom.for_each([&](std::size_t s) { map[s] = map_[s]; });
  return StateFunction(space_, std::move(dom), std::move(map));
}

bool StateFunction::is_identity_on(const StateSet& subset) const {
  bool ok = subset.is_subset_of(domain_);
  if (ok) subset.for_each([&](std::size_t s) { ok = ok && map_[s] == s; });
  return ok;
}

bool StateFunction::is_idempotent() const {
  bool ok = true;
  domain_.for_each([&](std::size_t s) {
    const std::size_t t = map_[s];
    ok = ok && domain_.contains(t) && map_[t] == t;
  });
  return ok;
}

bool StateFunction::is_injective() const {
  StateSet hit(space_->size());
  bool ok = true;
  domain_.for_each([&](std::size_t s) {
    if (hit.contains(map_[s])) ok = false;
    hit.insert(map_[s]);
  });
  return ok;
}

StateFunction compose(const StateFunction& outer, const StateFunction& inner) {
  require_same_space(outer.space_, inner.space_, "compose");
  const std::size_t n = inner.space_->size();
  StateSet dom(n);
  std::vector<std::size_t> map(n, StateFunction::kUndefined);
  inner.domain_.for_each([&](std::size_t s) {
    const std::size_t mid = inner.map_[s];
    if (outer.domain_.contains(mid)) {
      dom.insert(s);
      map[s] = outer.map_[mid];
    }
  });
  return StateFunction(inner.space_, std::move(dom), std::move(map));
}

bool StateFunction::operator==(const StateFunction& other) const {
  return same_space(space_, other.space_) && domain_ == other.domain_ && map_ == other.map_;
}

}  // namespace doxepi
