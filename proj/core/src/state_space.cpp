#include "doxepi/state_space.hpp"

#include <bit>

namespace doxepi {

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);
}

std::shared_ptr<const StateSpace> StateSpace::make(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("state space must not be empty");
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!seen.emplace(names[i], i).second) {
      throw std::invalid_argument("duplicate state name '" + names[i] + "'");
    }
  }
  return std::shared_ptr<const StateSpace>(new StateSpace(std::move(names)));
}

std::shared_ptr<const StateSpace> StateSpace::numbered(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return make(std::move(names));
}

std::optional<std::size_t> StateSpace::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_space(const SpacePtr& a, const SpacePtr& b, std::string_view what) {
  if (!same_space(a, b)) {
    throw SpaceMismatch(std::string(what) + ": operands live in different state spaces");
  }
}

// ---------------------------------------------------------------------------

StateSet::StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

StateSet StateSet::full(std::size_t universe) {
  StateSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim();
  return s;
}

StateSet StateSet::of(std::size_t universe, std::initializer_list<std::size_t> members) {
  StateSet s(universe);
  for (auto m : members) s.insert(m);
  return s;
}

std::size_t StateSet::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool StateSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

void StateSet::insert(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("state index out of range");
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

void StateSet::erase(std::size_t i) {
  if (i >= universe_) throw std::out_of_range("state index out of range");
  words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
}

std::optional<std::size_t> StateSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return std::nullopt;
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

StateSet StateSet::complement() const {
  StateSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool StateSet::is_subset_of(const StateSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool StateSet::intersects(const StateSet& other) const {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

StateSet& StateSet::operator|=(const StateSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

StateSet& StateSet::operator&=(const StateSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

StateSet& StateSet::operator-=(const StateSet& other) {
  check_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

void StateSet::check_universe(const StateSet& other) const {
  if (universe_ != other.universe_) throw SpaceMismatch("state sets over different universes");
}

void StateSet::trim() noexcept {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

std::string format_set(const StateSpace& space, const StateSet& set) {
  std::string out = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) out += ", ";
    first = false;
    out += space.name(i);
  });
  return out + "}";
}

}  // namespace doxepi
