#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace doxepi {

/// Raised when two values built over different state spaces are combined.
class SpaceMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite, ordered, non-empty set of named states. States are addressed by
/// their position; iteration order is the declaration order.
class StateSpace {
 public:
  /// Throws std::invalid_argument on an empty list or duplicate names.
  static std::shared_ptr<const StateSpace> make(std::vector<std::string> names);

  /// Space with states named "0", "1", ... "n-1".
  static std::shared_ptr<const StateSpace> numbered(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t index) const { return names_.at(index); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool operator==(const StateSpace& other) const noexcept { return names_ == other.names_; }

 private:
  explicit StateSpace(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<const StateSpace>;

/// Same space by identity or by content.
bool same_space(const SpacePtr& a, const SpacePtr& b) noexcept;

/// Throws SpaceMismatch unless same_space(a, b).
void require_same_space(const SpacePtr& a, const SpacePtr& b, std::string_view what);

/// Dense subset of a universe {0, ..., n-1}.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe);

  static StateSet full(std::size_t universe);
  static StateSet of(std::size_t universe, std::initializer_list<std::size_t> members);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool contains(std::size_t i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1u) != 0;
  }
  void insert(std::size_t i);
  void erase(std::size_t i);

  /// Smallest member, if any.
  std::optional<std::size_t> first() const noexcept;
  std::vector<std::size_t> members() const;

  StateSet complement() const;
  bool is_subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  StateSet& operator|=(const StateSet& other);
  StateSet& operator&=(const StateSet& other);
  StateSet& operator-=(const StateSet& other);
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  bool operator==(const StateSet& other) const noexcept = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t word = words_[w];
      while (word != 0) {
        const int bit = __builtin_ctzll(word);
        fn(w * 64 + static_cast<std::size_t>(bit));
        word &= word - 1;
      }
    }
  }

 private:
  void check_universe(const StateSet& other) const;
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Renders a set as "{a, b}" using the space's state names.
std::string format_set(const StateSpace& space, const StateSet& set);

}  // namespace doxepi
