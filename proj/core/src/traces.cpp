#include "doxepi/traces.hpp"

#include <limits>
#include <set>
#include <stdexcept>

namespace doxepi {

TraceSpace::TraceSpace(std::vector<std::string> agents, std::size_t depth)
    : agents_(std::move(agents)), depth_(depth) {
  if (agents_.empty()) throw std::invalid_argument("trace space needs at least one agent");
  std::set<std::string> seen;
  for (const auto& a : agents_) {
    if (a.empty() || a.find('.') != std::string::npos) {
      throw std::invalid_argument("bad agent label '" + a + "'");
    }
    if (!seen.insert(a).second) throw std::invalid_argument("duplicate agent label '" + a + "'");
  }

  const std::size_t m = agents_.size();
  traces_.push_back({});
  std::size_t level_start = 0;
  for (std::size_t k = 1; k <= depth_; ++k) {
    const std::size_t level_end = traces_.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (std::size_t a = 0; a < m; ++a) {
        auto t = traces_[i];
        t.push_back(a);
        traces_.push_back(std::move(t));
      }
    }
    level_start = level_end;
  }

  std::vector<std::string> names;
  names.reserve(traces_.size());
  for (const auto& t : traces_) {
    std::string name = "0";
    for (std::size_t a : t) name += "." + agents_[a];
    names.push_back(std::move(name));
  }
  space_ = StateSpace::make(std::move(names));
}

TraceSpace TraceSpace::numbered(std::size_t count, std::size_t depth) {
  std::vector<std::string> agents;
  for (std::size_t i = 1; i <= count; ++i) agents.push_back(std::to_string(i));
  return TraceSpace(std::move(agents), depth);
}

std::size_t TraceSpace::agent_index(const std::string& agent) const {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (agents_[i] == agent) return i;
  }
  throw std::out_of_range("unknown agent '" + agent + "'");
}

std::size_t TraceSpace::index_of(const std::vector<std::size_t>& actions) const {
  if (actions.size() > depth_) return StateFunction::kUndefined;
  const std::size_t m = agents_.size();
  std::size_t offset = 0, width = 1;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    offset += width;
    width *= m;
  }
  std::size_t rank = 0;
  for (std::size_t a : actions) rank = rank * m + a;
  return offset + rank;
}

std::size_t TraceSpace::act(std::size_t agent, std::size_t state) const {
  auto t = actions(state);
  t.push_back(agent);
  return index_of(t);
}

StateSet TraceSpace::interior() const {
  StateSet out(size());
  for (std::size_t s = 0; s < size(); ++s) {
    if (length(s) < depth_) out.insert(s);
  }
  return out;
}

std::size_t project(const TraceSpace& space, const std::string& agent, std::size_t state) {
  const std::size_t a = space.agent_index(agent);
  std::vector<std::size_t> kept;
  for (std::size_t b : space.actions(state)) {
    if (b == a) kept.push_back(b);
  }
  return space.index_of(kept);
}

StateFunction projection(const TraceSpace& space, const std::string& agent) {
  std::vector<std::size_t> map(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) map[s] = project(space, agent, s);
  return StateFunction::total(space.space(), std::move(map));
}

Relation indistinguishability(const TraceSpace& space, const std::string& agent) {
  std::vector<std::size_t> proj(space.size());
  for (std::size_t s = 0; s < space.size(); ++s) proj[s] = project(space, agent, s);
  Relation r(space.space());
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (std::size_t t = 0; t < space.size(); ++t) {
      if (proj[s] == proj[t]) r.insert(s, t);
    }
  }
  return r;
}

StateFunction action_function(const TraceSpace& space, const std::string& agent) {
  const std::size_t a = space.agent_index(agent);
  const StateSet domain = space.interior();
  std::vector<std::size_t> map(space.size(), StateFunction::kUndefined);
  domain.for_each([&](std::size_t s) { map[s] = space.act(a, s); });
  return StateFunction(space.space(), domain, std::move(map));
}

IndistReport verify_indist_correspondence(const TraceSpace& space, const std::string& agent) {
  IndistReport report;
  report.agent = agent;
  const StateFunction pi = projection(space, agent);
  const Relation target = indistinguishability(space, agent);
  report.kernel_matches = kernel(pi) == target;

  auto pair = validate_pair(pi, StateFunction::identity(space.space(), pi.image()));
  report.pair_valid = pair.ok();
  if (pair) {
    const Relation e = epistemic(*pair);
    report.epistemic_matches = e == target;
    report.missing = difference(target, e);
    report.extra = difference(e, target);
  }
  return report;
}

namespace act {
namespace {
ActionPtr make(ActionTerm::Kind kind, std::vector<ActionPtr> children, std::string agent = {}, std::size_t n = 0) {
  for (const auto& c : children) {
    if (!c) throw std::invalid_argument("null action term");
  }
  return std::make_shared<const ActionTerm>(ActionTerm{kind, std::move(agent), n, std::move(children)});
}
}  // namespace
ActionPtr prim(std::string agent) { return make(ActionTerm::Kind::kPrim, {}, std::move(agent)); }
ActionPtr converse(ActionPtr a) { return make(ActionTerm::Kind::kConverse, {std::move(a)}); }
ActionPtr unite(ActionPtr a, ActionPtr b) { return make(ActionTerm::Kind::kUnion, {std::move(a), std::move(b)}); }
ActionPtr star(ActionPtr a) { return make(ActionTerm::Kind::kStar, {std::move(a)}); }
ActionPtr power(ActionPtr a, std::size_t n) { return make(ActionTerm::Kind::kPower, {std::move(a)}, {}, n); }
ActionPtr id() { return make(ActionTerm::Kind::kId, {}); }
}  // namespace act

std::string render(const ActionTerm& term) {
  switch (term.kind) {
    case ActionTerm::Kind::kPrim: return "a_" + term.agent;
    case ActionTerm::Kind::kConverse: return "(" + render(*term.children[0]) + ")^-1";
    case ActionTerm::Kind::kUnion: return "(" + render(*term.children[0]) + " u " + render(*term.children[1]) + ")";
    case ActionTerm::Kind::kStar: return "(" + render(*term.children[0]) + ")*";
    case ActionTerm::Kind::kPower:
      return "(" + render(*term.children[0]) + ")^" + std::to_string(term.exponent);
    case ActionTerm::Kind::kId: return "id";
  }
  return {};
}

Relation pdl_relation(const TraceSpace& space, const ActionTerm& term) {
  switch (term.kind) {
    case ActionTerm::Kind::kPrim: return Relation::graph(action_function(space, term.agent));
    case ActionTerm::Kind::kConverse: return converse(pdl_relation(space, *term.children[0]));
    case ActionTerm::Kind::kUnion:
      return pdl_relation(space, *term.children[0]) | pdl_relation(space, *term.children[1]);
    case ActionTerm::Kind::kStar:
      return closure(pdl_relation(space, *term.children[0]), ClosureKind::kReflexiveTransitive);
    case ActionTerm::Kind::kPower: {
      const Relation base = pdl_relation(space, *term.children[0]);
      Relation out = Relation::identity(space.space());
      for (std::size_t i = 0; i < term.exponent; ++i) out = compose(out, base);
      return out;
    }
    case ActionTerm::Kind::kId: return Relation::identity(space.space());
  }
  throw std::logic_error("unknown action term");
}

PdlReport verify_pdl_correspondence(const TraceSpace& space, const std::string& agent) {
  const StateFunction alpha = action_function(space, agent);
  Relation left = epistemic_of(StateFunction::identity(space.space()), alpha) | Relation::identity(space.space());
  const auto a = act::prim(agent);
  Relation right = pdl_relation(space, *act::star(act::unite(a, act::converse(a))));

  const StateSet inner = space.interior();
  PdlReport report{agent, std::move(left), std::move(right), true, true, {}};
  for (std::size_t s = 0; s < space.size(); ++s) {
    for (std::size_t t = 0; t < space.size(); ++t) {
      if (report.left.contains(s, t) == report.right.contains(s, t)) continue;
      if (inner.contains(s) && inner.contains(t)) {
        report.interior_equal = false;
        report.interior_differences.emplace_back(s, t);
      } else {
        report.boundary_equal = false;
      }
    }
  }
  return report;
}

}  // namespace doxepi
