#include "doxepi/funcpair.hpp"

#include <optional>

namespace doxepi {
namespace {

std::string name_of(const StateFunction& h, std::size_t s) { return h.space()->name(s); }

}  // namespace

Outcome<FunctionPair> validate_pair(StateFunction f, StateFunction g) {
  require_same_space(f.space(), g.space(), "validate_pair");
  const StateSpace& space = *f.space();
  const std::size_t n = space.size();
  std::vector<Diagnostic> problems;

  for (std::size_t s = 0; s < n; ++s) {
    if (!f.defined_at(s)) {
      problems.push_back({pair_error::kVisibilityNotTotal,
                          "visibility function is undefined at '" + space.name(s) + "'",
                          {space.name(s)}});
      break;
    }
  }

  const StateSet visible = f.image();
  bool well_typed = problems.empty();
  visible.for_each([&](std::size_t t) {
    if (!g.defined_at(t)) {
      if (well_typed) {
        problems.push_back({pair_error::kBiasUndefined,
                            "bias is undefined at visible state '" + space.name(t) + "'",
                            {space.name(t)}});
      }
      well_typed = false;
    } else if (!visible.contains(g(t))) {
      if (well_typed) {
        problems.push_back({pair_error::kBiasNotClosed,
                            "bias maps visible state '" + space.name(t) + "' to '" +
                                name_of(g, g(t)) + "' outside Im(f)",
                            {space.name(t)}});
      }
      well_typed = false;
    }
  });

  // Idempotency on Im(f), reported at the first state s whose view f(s) breaks it.
  bool idempotent = true;
  f.domain().for_each([&](std::size_t s) {
    if (!idempotent) return;
    const std::size_t view = f(s);
    if (!g.defined_at(view)) return;
    const std::size_t once = g(view);
    const std::size_t twice = g.at_or_undefined(once);
    if (twice != once) {
      idempotent = false;
      problems.push_back(
          {pair_error::kBiasNotIdempotent,
           "g(g(f(" + space.name(s) + "))) = " +
               (twice == StateFunction::kUndefined ? std::string("undefined") : space.name(twice)) +
               " differs from g(f(" + space.name(s) + ")) = " + space.name(once),
           {space.name(s)}});
    }
  });

  // First constraint, checked independently of idempotency.
  bool first_constraint = true;
  if (well_typed) {
    for (std::size_t s = 0; s < n && first_constraint; ++s) {
      const std::size_t target = g.at_or_undefined(f.at_or_undefined(s));
      if (target == StateFunction::kUndefined) continue;
      for (std::size_t t = 0; t < n; ++t) {
        if (f.at_or_undefined(t) != target) continue;
        if (g.at_or_undefined(target) != target) {
          first_constraint = false;
          problems.push_back({pair_error::kFirstConstraint,
                              "g(f(" + space.name(s) + ")) = f(" + space.name(t) +
                                  ") but g(f(" + space.name(t) + ")) != f(" + space.name(t) + ")",
                              {space.name(s), space.name(t)}});
          break;
        }
      }
    }
  }

  if (well_typed && f.is_total() && idempotent != first_constraint) {
    problems.push_back({pair_error::kConstraintDisagreement,
                        "idempotency and the first constraint disagree on a well-typed pair",
                        {}});
  }

  if (!problems.empty()) return problems;
  return FunctionPair(std::move(f), std::move(g), visible);
}

Relation doxastic_of(const StateFunction& f, const StateFunction& g) {
  require_same_space(f.space(), g.space(), "doxastic");
  const std::size_t n = f.space()->size();
  // preimage[v] = {s' | f(s') = v}
  std::vector<StateSet> preimage(n, StateSet(n));
  f.domain().for_each([&](std::size_t s) { preimage[f(s)].insert(s); });
  std::vector<StateSet> rows(n, StateSet(n));
  f.domain().for_each([&](std::size_t s) {
    const std::size_t target = g.at_or_undefined(f(s));
    if (target != StateFunction::kUndefined) rows[s] = preimage[target];
  });
  return Relation::from_rows(f.space(), std::move(rows));
}

Relation epistemic_of(const StateFunction& f, const StateFunction& g) {
  const Relation d = doxastic_of(f, g);
  return closure(d | converse(d), ClosureKind::kTransitive);
}

Relation doxastic(const FunctionPair& pair) { return doxastic_of(pair.visibility(), pair.bias()); }

Relation epistemic(const FunctionPair& pair) { return epistemic_of(pair.visibility(), pair.bias()); }

bool is_unbiased(const FunctionPair& pair) { return pair.bias().is_identity_on(pair.visible()); }

}  // namespace doxepi
