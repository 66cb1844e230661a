#include "doxepi/synthesis.hpp"

#include <stdexcept>

namespace doxepi {
namespace {

std::string witness_text(const StateSpace& space, const FrameWitness& w) {
  std::string out;
  for (std::size_t i = 0; i < w.states.size(); ++i) {
    if (i != 0) out += ", ";
    out += space.name(w.states[i]);
  }
  return out;
}

void require_condition(const Relation& r, FrameCondition condition, const char* code,
                       std::vector<Diagnostic>& problems) {
  if (auto w = find_violation(r, condition)) {
    std::vector<std::string> names;
    for (auto s : w->states) names.push_back(r.space()->name(s));
    problems.push_back({code,
                        std::string(to_string(condition)) + " fails at " + witness_text(*r.space(), *w),
                        std::move(names)});
  }
}

std::string format_pairs(const StateSpace& space, const std::vector<Relation::Pair>& pairs) {
  std::string out;
  for (const auto& [s, t] : pairs) {
    if (!out.empty()) out += ", ";
    out += "(" + space.name(s) + "," + space.name(t) + ")";
  }
  return "{" + out + "}";
}

}  // namespace

CanonicalChoice CanonicalChoice::min_index(const Relation& equivalence, const StateSet& carrier) {
  CanonicalChoice choice;
  choice.representative.assign(equivalence.states(), StateFunction::kUndefined);
  carrier.for_each([&](std::size_t s) {
    auto rep = (equivalence.successors(s) & carrier).first();
    if (!rep) throw std::logic_error("equivalence is not reflexive on its carrier");
    choice.representative[s] = *rep;
  });
  return choice;
}

Relation image_equivalence(const Relation& r) {
  Relation out(r.space());
  image(r).for_each([&](std::size_t s) {
    r.successors(s).for_each([&](std::size_t t) { out.insert(s, t); });
  });
  return out;
}

Outcome<FunctionPair> from_kd45(const Relation& r) {
  std::vector<Diagnostic> problems;
  if (r.empty()) problems.push_back({synthesis_error::kEmpty, "relation is empty", {}});
  require_condition(r, FrameCondition::kSerial, synthesis_error::kNotSerial, problems);
  require_condition(r, FrameCondition::kTransitive, synthesis_error::kNotTransitive, problems);
  require_condition(r, FrameCondition::kEuclidean, synthesis_error::kNotEuclidean, problems);
  if (!problems.empty()) return problems;

  const SpacePtr& space = r.space();
  const std::size_t n = space->size();
  const StateSet reached = image(r);
  const CanonicalChoice choice = CanonicalChoice::min_index(image_equivalence(r), reached);

  std::vector<std::size_t> f_map(n);
  for (std::size_t s = 0; s < n; ++s) f_map[s] = reached.contains(s) ? choice.of(s) : s;
  StateFunction f = StateFunction::total(space, std::move(f_map));

  const StateSet visible = f.image();
  std::vector<std::size_t> g_map(n, StateFunction::kUndefined);
  visible.for_each([&](std::size_t s) {
    if (reached.contains(s)) {
      g_map[s] = s;
      return;
    }
    const StateSet& next = r.successors(s);
    const std::size_t rep = choice.of(*next.first());
    // Every successor of s lies in one class, so the choice of successor is immaterial.
    next.for_each([&](std::size_t t) {
      if (choice.of(t) != rep) throw std::logic_error("successors of a KD45 state span two classes");
    });
    g_map[s] = rep;
  });
  StateFunction g(space, visible, std::move(g_map));

  return validate_pair(std::move(f), std::move(g));
}

Outcome<FunctionPair> from_equivalence(const Relation& e) {
  std::vector<Diagnostic> problems;
  if (e.empty()) problems.push_back({synthesis_error::kEmpty, "relation is empty", {}});
  require_condition(e, FrameCondition::kReflexive, synthesis_error::kNotReflexive, problems);
  require_condition(e, FrameCondition::kSymmetric, synthesis_error::kNotSymmetric, problems);
  require_condition(e, FrameCondition::kTransitive, synthesis_error::kNotTransitive, problems);
  if (!problems.empty()) return problems;

  const SpacePtr& space = e.space();
  const CanonicalChoice choice = CanonicalChoice::min_index(e, StateSet::full(space->size()));
  StateFunction projection = StateFunction::total(space, choice.representative);
  StateFunction bias = StateFunction::identity(space, projection.image());
  return validate_pair(std::move(projection), std::move(bias));
}

RoundtripReport roundtrip_check(const Relation& r) {
  RoundtripReport report;
  const SpacePtr& space = r.space();

  auto kd45 = from_kd45(r);
  report.kd45 = kd45.ok();
  if (!kd45) {
    report.notes.push_back("not KD45: " + join(kd45.diagnostics(), "; "));
  } else {
    const Relation rebuilt = doxastic(*kd45);
    report.kd45_roundtrip = rebuilt == r;
    if (!report.kd45_roundtrip) {
      report.notes.push_back("KD45 round trip differs: missing " +
                             format_pairs(*space, difference(r, rebuilt)) + ", extra " +
                             format_pairs(*space, difference(rebuilt, r)));
    }
  }

  auto eq = from_equivalence(r);
  report.equivalence = eq.ok();
  if (!eq) {
    report.notes.push_back("not an equivalence: " + join(eq.diagnostics(), "; "));
  } else {
    const Relation rebuilt = epistemic(*eq);
    report.equivalence_roundtrip = rebuilt == r && doxastic(*eq) == r;
    if (!report.equivalence_roundtrip) {
      report.notes.push_back("equivalence round trip differs: missing " +
                             format_pairs(*space, difference(r, rebuilt)) + ", extra " +
                             format_pairs(*space, difference(rebuilt, r)));
    }
  }
  return report;
}

}  // namespace doxepi
