#include "doxepi/relation.hpp"

#include <stdexcept>

namespace doxepi {

Relation::Relation(SpacePtr space) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("relation needs a state space");
  rows_.assign(space_->size(), StateSet(space_->size()));
}

Relation Relation::identity(SpacePtr space) {
  const std::size_t n = space->size();
  return identity_on(std::move(space), StateSet::full(n));
}

Relation Relation::identity_on(SpacePtr space, const StateSet& subset) {
  Relation r(std::move(space));
  subset.for_each([&](std::size_t s) { r.insert(s, s); });
  return r;
}

Relation Relation::full(SpacePtr space) {
  Relation r(std::move(space));
  for (auto& row : r.rows_) row = StateSet::full(r.rows_.size());
  return r;
}

Relation Relation::from_pairs(SpacePtr space, const std::vector<Pair>& pairs) {
  Relation r(std::move(space));
  for (const auto& [s, t] : pairs) r.insert(s, t);
  return r;
}

Relation Relation::graph(const StateFunction& h) {
  Relation r(h.space());
  h.domain().for_each([&](std::size_t s) { r.insert(s, h(s)); });
  return r;
}

Relation Relation::from_rows(SpacePtr space, std::vector<StateSet> rows) {
  Relation r(std::move(space));
  if (rows.size() != r.rows_.size()) throw std::invalid_argument("row count differs from space size");
  for (const auto& row : rows) {
    if (row.universe() != r.rows_.size()) throw std::invalid_argument("row sized for another space");
  }
  r.rows_ = std::move(rows);
  return r;
}

void Relation::insert(std::size_t s, std::size_t t) {
  if (s >= rows_.size() || t >= rows_.size()) throw std::out_of_range("relation pair out of range");
  rows_[s].insert(t);
}

void Relation::erase(std::size_t s, std::size_t t) {
  if (s >= rows_.size() || t >= rows_.size()) throw std::out_of_range("relation pair out of range");
  rows_[s].erase(t);
}

StateSet Relation::predecessors(std::size_t t) const {
  StateSet out(rows_.size());
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    if (rows_[s].contains(t)) out.insert(s);
  }
  return out;
}

std::size_t Relation::size() const noexcept {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

bool Relation::empty() const noexcept {
  for (const auto& row : rows_) {
    if (!row.empty()) return false;
  }
  return true;
}

std::vector<Relation::Pair> Relation::pairs() const {
  std::vector<Pair> out;
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    rows_[s].for_each([&](std::size_t t) { out.emplace_back(s, t); });
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  require_same_space(space_, other.space_, "relation inclusion");
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    if (!rows_[s].is_subset_of(other.rows_[s])) return false;
  }
  return true;
}

Relation& Relation::operator|=(const Relation& other) {
  require_same_space(space_, other.space_, "relation union");
  for (std::size_t s = 0; s < rows_.size(); ++s) rows_[s] |= other.rows_[s];
  return *this;
}

Relation& Relation::operator&=(const Relation& other) {
  require_same_space(space_, other.space_, "relation intersection");
  for (std::size_t s = 0; s < rows_.size(); ++s) rows_[s] &= other.rows_[s];
  return *this;
}

Relation Relation::restricted_to(const StateSet& subset) const {
  Relation r(space_);
  subset.for_each([&](std::size_t s) { r.rows_[s] = rows_[s] & subset; });
  return r;
}

bool Relation::operator==(const Relation& other) const {
  return same_space(space_, other.space_) && rows_ == other.rows_;
}

// ---------------------------------------------------------------------------

const char* to_string(FrameCondition c) noexcept {
  switch (c) {
    case FrameCondition::kSerial: return "seriality";
    case FrameCondition::kReflexive: return "reflexivity";
    case FrameCondition::kSymmetric: return "symmetry";
    case FrameCondition::kTransitive: return "transitivity";
    case FrameCondition::kEuclidean: return "euclideanness";
    case FrameCondition::kFunctional: return "functionality";
  }
  return "?";
}

Relation converse(const Relation& r) {
  Relation out(r.space());
  for (std::size_t s = 0; s < r.states(); ++s) {
    r.successors(s).for_each([&](std::size_t t) { out.insert(t, s); });
  }
  return out;
}

Relation compose(const Relation& first, const Relation& second) {
  require_same_space(first.space(), second.space(), "compose");
  std::vector<StateSet> rows;
  rows.reserve(first.states());
  for (std::size_t s = 0; s < first.states(); ++s) {
    StateSet row(first.states());
    first.successors(s).for_each([&](std::size_t mid) { row |= second.successors(mid); });
    rows.push_back(std::move(row));
  }
  return Relation::from_rows(first.space(), std::move(rows));
}

Relation closure(const Relation& r, ClosureKind kind) {
  const std::size_t n = r.states();
  std::vector<StateSet> rows;
  rows.reserve(n);
  for (std::size_t s = 0; s < n; ++s) rows.push_back(r.successors(s));
  // Warshall: after round k, rows hold paths whose interior uses states < k+1.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      if (rows[s].contains(k)) rows[s] |= rows[k];
    }
  }
  if (kind == ClosureKind::kReflexiveTransitive) {
    for (std::size_t s = 0; s < n; ++s) rows[s].insert(s);
  }
  return Relation::from_rows(r.space(), std::move(rows));
}

StateSet image(const Relation& r) {
  StateSet out(r.states());
  for (std::size_t s = 0; s < r.states(); ++s) out |= r.successors(s);
  return out;
}

Relation kernel(const StateFunction& h) {
  Relation out(h.space());
  const StateSet& dom = h.domain();
  dom.for_each([&](std::size_t s) {
    dom.for_each([&](std::size_t t) {
      if (h(s) == h(t)) out.insert(s, t);
    });
  });
  return out;
}

std::optional<FrameWitness> find_violation(const Relation& r, FrameCondition condition) {
  const std::size_t n = r.states();
  using W = std::optional<FrameWitness>;
  switch (condition) {
    case FrameCondition::kSerial:
      for (std::size_t s = 0; s < n; ++s) {
        if (r.successors(s).empty()) return W{FrameWitness{condition, {s}}};
      }
      return std::nullopt;
    case FrameCondition::kReflexive:
      for (std::size_t s = 0; s < n; ++s) {
        if (!r.contains(s, s)) return W{FrameWitness{condition, {s}}};
      }
      return std::nullopt;
    case FrameCondition::kFunctional:
      for (std::size_t s = 0; s < n; ++s) {
        if (r.successors(s).count() != 1) return W{FrameWitness{condition, {s}}};
      }
      return std::nullopt;
    case FrameCondition::kSymmetric:
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          if (r.contains(s, t) && !r.contains(t, s)) return W{FrameWitness{condition, {s, t}}};
        }
      }
      return std::nullopt;
    case FrameCondition::kTransitive:
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          if (!r.contains(s, t)) continue;
          for (std::size_t u = 0; u < n; ++u) {
            if (r.contains(t, u) && !r.contains(s, u)) return W{FrameWitness{condition, {s, t, u}}};
          }
        }
      }
      return std::nullopt;
    case FrameCondition::kEuclidean:
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = 0; t < n; ++t) {
          if (!r.contains(s, t)) continue;
          for (std::size_t u = 0; u < n; ++u) {
            if (r.contains(s, u) && !r.contains(t, u)) return W{FrameWitness{condition, {s, t, u}}};
          }
        }
      }
      return std::nullopt;
  }
  return std::nullopt;
}

PropertyReport classify(const Relation& r) {
  PropertyReport p;
  p.serial = !find_violation(r, FrameCondition::kSerial);
  p.reflexive = !find_violation(r, FrameCondition::kReflexive);
  p.symmetric = !find_violation(r, FrameCondition::kSymmetric);
  p.transitive = !find_violation(r, FrameCondition::kTransitive);
  p.euclidean = !find_violation(r, FrameCondition::kEuclidean);
  p.functional = !find_violation(r, FrameCondition::kFunctional);
  p.equivalence = p.reflexive && p.transitive && p.symmetric;
  return p;
}

Relation smallest_equivalence(const Relation& r) {
  return closure(r | converse(r), ClosureKind::kReflexiveTransitive);
}

std::string format_relation(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& [s, t] : r.pairs()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + r.space()->name(s) + "," + r.space()->name(t) + ")";
  }
  return out + "}";
}

std::vector<Relation::Pair> difference(const Relation& a, const Relation& b) {
  require_same_space(a.space(), b.space(), "relation difference");
  std::vector<Relation::Pair> out;
  for (const auto& [s, t] : a.pairs()) {
    if (!b.contains(s, t)) out.emplace_back(s, t);
  }
  return out;
}

}  // namespace doxepi
