#include "doxepi/checker.hpp"

#include <functional>
#include <random>
#include <set>

#include "json.hpp"

namespace doxepi {

StateSet box(const Relation& r, const StateSet& x) {
  StateSet out(r.states());
  for (std::size_t s = 0; s < r.states(); ++s) {
    if (r.successors(s).is_subset_of(x)) out.insert(s);
  }
  return out;
}

const Relation& Evaluator::relation(const Formula& modal) {
  auto lookup = [&](Modality modality, const std::string& agent) -> const Relation& {
    const LabelBinding* binding = model_.label(modality, agent);
    if (!binding) {
      throw UnresolvedName(std::string(modality == Modality::kBelief ? "belief" : "knowledge") + " label '" +
                           agent + "' is not defined by the model");
    }
    return binding->relation;
  };
  switch (modal.kind) {
    case Formula::Kind::kBelief: return lookup(Modality::kBelief, modal.labels.front());
    case Formula::Kind::kKnowledge: return lookup(Modality::kKnowledge, modal.labels.front());
    default: break;
  }
  if (!modal.is_group()) throw std::invalid_argument("relation() needs a modal formula");

  const GroupKind kind = modal.kind == Formula::Kind::kDistBelief     ? GroupKind::kDistributedBelief
                         : modal.kind == Formula::Kind::kCommonBelief ? GroupKind::kCommonBelief
                         : modal.kind == Formula::Kind::kDistKnowledge ? GroupKind::kDistributedKnowledge
                                                                       : GroupKind::kCommonKnowledge;
  std::string key = to_string(kind);
  for (const auto& l : modal.labels) key += "," + l;
  if (auto it = group_cache_.find(key); it != group_cache_.end()) return it->second;

  const Modality modality = kind == GroupKind::kDistributedBelief || kind == GroupKind::kCommonBelief
                                ? Modality::kBelief
                                : Modality::kKnowledge;
  std::vector<Relation> members;
  for (const auto& l : modal.labels) members.push_back(lookup(modality, l));
  return group_cache_.emplace(key, group_relation(members, kind)).first->second;
}

const StateSet& Evaluator::extension(const FormulaPtr& phi) {
  if (auto it = memo_.find(phi.get()); it != memo_.end()) return it->second.second;

  const std::size_t n = model_.space()->size();
  const Formula& f = *phi;
  StateSet result(n);
  switch (f.kind) {
    case Formula::Kind::kAtom: {
      auto it = model_.valuation().find(f.atom);
      if (it == model_.valuation().end()) throw UnresolvedName("atom '" + f.atom + "' is not defined by the model");
      result = it->second;
      break;
    }
    case Formula::Kind::kBottom: break;
    case Formula::Kind::kNot: result = extension(f.children[0]).complement(); break;
    case Formula::Kind::kAnd: result = extension(f.children[0]) & extension(f.children[1]); break;
    case Formula::Kind::kOr: result = extension(f.children[0]) | extension(f.children[1]); break;
    case Formula::Kind::kImplies:
      result = extension(f.children[0]).complement() | extension(f.children[1]);
      break;
    case Formula::Kind::kIff: {
      const StateSet& a = extension(f.children[0]);
      const StateSet& b = extension(f.children[1]);
      result = (a & b) | (a.complement() & b.complement());
      break;
    }
    default: result = box(relation(f), extension(f.children[0])); break;
  }
  return memo_.emplace(phi.get(), std::make_pair(phi, std::move(result))).first->second.second;
}

Extension extension(const Model& model, const FormulaPtr& phi) {
  Evaluator ev(model);
  return Extension{phi, ev.extension(phi)};
}

Validity valid_in_model(const Model& model, const FormulaPtr& phi) {
  const StateSet ext = extension(model, phi).states;
  Validity v;
  v.counterexample = ext.complement().first();
  v.valid = !v.counterexample.has_value();
  return v;
}

std::vector<PoolEntry> formula_pool(const Model& model, std::size_t depth, std::size_t max_entries) {
  const std::size_t n = model.space()->size();
  std::vector<PoolEntry> pool;
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](FormulaPtr phi, StateSet ext) {
    if (pool.size() >= max_entries) return;
    if (seen.insert(ext.members()).second) pool.push_back({std::move(phi), std::move(ext)});
  };

  add(fml::bottom(), StateSet(n));
  for (const auto& [atom, states] : model.valuation()) add(fml::atom(atom), states);

  for (std::size_t level = 1; level <= depth; ++level) {
    const std::size_t before = pool.size();
    for (std::size_t i = 0; i < before; ++i) {
      const PoolEntry e = pool[i];
      add(fml::neg(e.formula), e.extension.complement());
      for (const auto& [agent, binding] : model.belief_labels()) {
        add(fml::belief(agent, e.formula), box(binding.relation, e.extension));
      }
      for (const auto& [agent, binding] : model.knowledge_labels()) {
        add(fml::knowledge(agent, e.formula), box(binding.relation, e.extension));
      }
    }
    for (std::size_t i = 0; i < before; ++i) {
      for (std::size_t j = i + 1; j < before; ++j) {
        add(fml::conj(pool[i].formula, pool[j].formula), pool[i].extension & pool[j].extension);
      }
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------

namespace {

using Args = std::vector<FormulaPtr>;

struct Schema {
  std::string id;
  std::string claim;
  int arity = 1;
  std::function<FormulaPtr(const Args&)> build;
  /// Only instances whose single argument is valid count (necessitation).
  bool requires_valid_argument = false;
};

class RandomFormulas {
 public:
  RandomFormulas(const Model& model, std::uint64_t seed) : rng_(seed) {
    for (const auto& [atom, _] : model.valuation()) atoms_.push_back(atom);
    for (const auto& [agent, _] : model.belief_labels()) belief_.push_back(agent);
    for (const auto& [agent, _] : model.knowledge_labels()) knowledge_.push_back(agent);
  }

  FormulaPtr generate(std::size_t depth) {
    if (depth == 0 || pick(4) == 0) {
      return pick(atoms_.size() + 1) == 0 ? fml::bottom() : fml::atom(atoms_[pick(atoms_.size())]);
    }
    switch (pick(7)) {
      case 0: return fml::neg(generate(depth - 1));
      case 1: return fml::conj(generate(depth - 1), generate(depth - 1));
      case 2: return fml::disj(generate(depth - 1), generate(depth - 1));
      case 3: return fml::implies(generate(depth - 1), generate(depth - 1));
      case 4: return fml::iff(generate(depth - 1), generate(depth - 1));
      case 5:
        if (!belief_.empty()) return fml::belief(belief_[pick(belief_.size())], generate(depth - 1));
        return fml::neg(generate(depth - 1));
      default:
        if (!knowledge_.empty()) return fml::knowledge(knowledge_[pick(knowledge_.size())], generate(depth - 1));
        return fml::neg(generate(depth - 1));
    }
  }

 private:
  std::size_t pick(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
  std::vector<std::string> belief_;
  std::vector<std::string> knowledge_;
};

LawReport check_schema(Evaluator& ev, const Schema& schema, const std::string& agent, bool asserted,
                       const Args& instances) {
  LawReport report{schema.id, agent, schema.claim, asserted, true, 0, std::nullopt};
  const StateSpace& space = *ev.model().space();
  const StateSet all = StateSet::full(space.size());

  auto check = [&](const Args& args) {
    if (schema.requires_valid_argument && ev.extension(args.front()) != all) return true;
    ++report.instances_checked;
    const StateSet& ext = ev.extension(schema.build(args));
    if (auto bad = ext.complement().first()) {
      report.holds = false;
      Counterexample cex{space.name(*bad), {}};
      for (const auto& a : args) cex.instances.push_back(render(*a));
      report.counterexample = std::move(cex);
      return false;
    }
    return true;
  };

  if (schema.arity == 0) {
    check({});
  } else if (schema.arity == 1) {
    for (const auto& phi : instances) {
      if (!check({phi})) break;
    }
  } else {
    for (std::size_t i = 0; i < instances.size() && report.holds; ++i) {
      for (std::size_t j = 0; j < instances.size(); ++j) {
        if (!check({instances[i], instances[j]})) break;
      }
    }
  }
  return report;
}

std::vector<Schema> belief_schemata(const std::string& a) {
  using namespace fml;
  auto B = [a](FormulaPtr p) { return belief(a, std::move(p)); };
  return {
      {"belief.K", "B(p -> q) -> (B p -> B q)", 2,
       [=](const Args& x) { return implies(B(implies(x[0], x[1])), implies(B(x[0]), B(x[1]))); }},
      {"belief.D", "~B false", 0, [=](const Args&) { return neg(B(bottom())); }},
      {"belief.D-dual", "B p -> ~B ~p", 1, [=](const Args& x) { return implies(B(x[0]), neg(B(neg(x[0])))); }},
      {"belief.4", "B p -> B B p", 1, [=](const Args& x) { return implies(B(x[0]), B(B(x[0]))); }},
      {"belief.5", "~B p -> B ~B p", 1, [=](const Args& x) { return implies(neg(B(x[0])), B(neg(B(x[0])))); }},
      {"belief.N", "p valid => B p valid", 1, [=](const Args& x) { return B(x[0]); }, true},
  };
}

std::vector<Schema> knowledge_schemata(const std::string& a) {
  using namespace fml;
  auto K = [a](FormulaPtr p) { return knowledge(a, std::move(p)); };
  return {
      {"knowledge.K", "K(p -> q) -> (K p -> K q)", 2,
       [=](const Args& x) { return implies(K(implies(x[0], x[1])), implies(K(x[0]), K(x[1]))); }},
      {"knowledge.T", "K p -> p", 1, [=](const Args& x) { return implies(K(x[0]), x[0]); }},
      {"knowledge.4", "K p -> K K p", 1, [=](const Args& x) { return implies(K(x[0]), K(K(x[0]))); }},
      {"knowledge.5", "~K p -> K ~K p", 1,
       [=](const Args& x) { return implies(neg(K(x[0])), K(neg(K(x[0])))); }},
      {"knowledge.N", "p valid => K p valid", 1, [=](const Args& x) { return K(x[0]); }, true},
  };
}

Schema k_iff_b(const std::string& id, const std::string& a, const std::string& side) {
  return {id, "K p <-> B p  (" + side + ")", 1,
          [=](const Args& x) { return fml::iff(fml::knowledge(a, x[0]), fml::belief(a, x[0])); }};
}

std::vector<LawReport> group_probes(Evaluator& ev, const Model& model, const Args& instances) {
  std::vector<LawReport> out;
  std::vector<std::string> believers, knowers;
  for (const auto& [agent, _] : model.belief_labels()) believers.push_back(agent);
  for (const auto& [agent, _] : model.knowledge_labels()) knowers.push_back(agent);
  std::string everyone_b, everyone_k;
  for (const auto& a : believers) everyone_b += (everyone_b.empty() ? "" : ",") + a;
  for (const auto& a : knowers) everyone_k += (everyone_k.empty() ? "" : ",") + a;

  using namespace fml;
  auto probe = [&](Formula::Kind kind, const std::vector<std::string>& labels, const char* name,
                   const std::string& who, bool knowledge_kind) {
    const std::string prefix = std::string("group.") + name;
    auto X = [kind, labels](FormulaPtr p) { return group(kind, labels, std::move(p)); };
    std::vector<Schema> schemata;
    if (knowledge_kind) {
      schemata.push_back({prefix + ".T", std::string(name) + " p -> p", 1,
                          [=](const Args& x) { return implies(X(x[0]), x[0]); }});
    } else {
      schemata.push_back({prefix + ".D", std::string("~") + name + " false", 0,
                          [=](const Args&) { return neg(X(bottom())); }});
    }
    schemata.push_back({prefix + ".4", std::string(name) + " p -> " + name + " " + name + " p", 1,
                        [=](const Args& x) { return implies(X(x[0]), X(X(x[0]))); }});
    schemata.push_back({prefix + ".5", std::string("~") + name + " p -> " + name + " ~" + name + " p", 1,
                        [=](const Args& x) { return implies(neg(X(x[0])), X(neg(X(x[0])))); }});
    for (const auto& s : schemata) out.push_back(check_schema(ev, s, who, false, instances));
  };
  if (!believers.empty()) {
    probe(Formula::Kind::kDistBelief, believers, "DB", everyone_b, false);
    probe(Formula::Kind::kCommonBelief, believers, "CB", everyone_b, false);
  }
  if (!knowers.empty()) {
    probe(Formula::Kind::kDistKnowledge, knowers, "DK", everyone_k, true);
    probe(Formula::Kind::kCommonKnowledge, knowers, "CK", everyone_k, true);
  }
  return out;
}

/// First (valuation, state) where `schema` fails, over the candidate valuations.
std::optional<std::pair<StateSet, std::size_t>> frame_counterexample(
    const std::vector<StateSet>& valuations, const std::function<StateSet(const StateSet&)>& schema) {
  for (const auto& x : valuations) {
    if (auto bad = schema(x).complement().first()) return std::make_pair(x, *bad);
  }
  return std::nullopt;
}

}  // namespace

std::vector<StateSet> frame_valuations(std::size_t states, const std::vector<const Relation*>& relations,
                                       std::size_t exhaustive_limit) {
  std::vector<StateSet> out;
  if (states <= exhaustive_limit) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << states); ++mask) {
      StateSet x(states);
      for (std::size_t i = 0; i < states; ++i) {
        if ((mask >> i) & 1u) x.insert(i);
      }
      out.push_back(std::move(x));
    }
    return out;
  }
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](StateSet x) {
    if (seen.insert(x.members()).second) out.push_back(std::move(x));
  };
  add(StateSet(states));
  add(StateSet::full(states));
  for (std::size_t t = 0; t < states; ++t) {
    StateSet single(states);
    single.insert(t);
    add(single.complement());
    add(std::move(single));
  }
  for (const Relation* r : relations) {
    for (std::size_t s = 0; s < states; ++s) add(r->successors(s));
  }
  return out;
}

std::vector<LawReport> iff_condition_checks(const Model& model) {
  std::vector<LawReport> out;
  const SpacePtr& space = model.space();
  const std::size_t n = space->size();
  const Relation identity = Relation::identity(space);

  std::set<std::string> agents;
  for (const auto& [a, _] : model.belief_labels()) agents.insert(a);
  for (const auto& [a, _] : model.knowledge_labels()) agents.insert(a);

  auto yes_no = [](bool b) { return b ? "true" : "false"; };

  for (const auto& agent : agents) {
    const LabelBinding* b = model.label(Modality::kBelief, agent);
    const LabelBinding* k = model.label(Modality::kKnowledge, agent);
    const LabelBinding& binding = b ? *b : *k;
    const Relation d = b && (!k || k->pair == b->pair) ? b->relation : doxastic(binding.pair);
    const Relation e = k && (!b || k->pair == b->pair) ? k->relation : epistemic(binding.pair);
    const auto valuations = frame_valuations(n, {&d, &e});

    const bool unbiased = binding.unbiased();
    const bool injective = binding.bias_injective();

    auto report = [&](std::string id, std::string claim, bool lhs, bool rhs,
                      const std::optional<std::pair<StateSet, std::size_t>>& cex) {
      LawReport r{std::move(id), agent, std::move(claim), true, lhs == rhs, valuations.size(), std::nullopt};
      if (cex) r.counterexample = Counterexample{space->name(cex->second), {"p := " + format_set(*space, cex->first)}};
      out.push_back(std::move(r));
    };

    const auto k_iff_b_fails = frame_counterexample(valuations, [&](const StateSet& x) {
      const StateSet kx = box(e, x);
      const StateSet bx = box(d, x);
      return (kx & bx) | (kx.complement() & bx.complement());
    });
    report("bias-cancellation",
           std::string("K p <-> B p valid for every valuation (") + yes_no(!k_iff_b_fails) +
               ") iff g = id on Im(f) (" + yes_no(unbiased) + ")",
           !k_iff_b_fails, unbiased, k_iff_b_fails);

    report("injective-bias-is-identity",
           std::string("g injective on Im(f) (") + yes_no(injective) + ") iff g = id on Im(f) (" + yes_no(unbiased) +
               ")",
           injective, unbiased, std::nullopt);

    if (binding.visibility_is_identity()) {
      const auto negation_incomplete = frame_counterexample(valuations, [&](const StateSet& x) {
        return box(e, x) | box(e, x.complement());  // ~K p -> K ~p
      });
      report("negation-complete-knowledge",
             std::string("~K p -> K ~p valid for every valuation (") + yes_no(!negation_incomplete) +
                 ") iff g injective (" + yes_no(injective) + ")",
             !negation_incomplete, injective, negation_incomplete);
      const bool perfect = e == identity;
      report("negation-complete-is-perfect-knowledge",
             std::string("~K p -> K ~p valid for every valuation (") + yes_no(!negation_incomplete) +
                 ") iff E = id_S (" + yes_no(perfect) + ")",
             !negation_incomplete, perfect, negation_incomplete);
    }
  }
  return out;
}

std::vector<LawReport> law_suite(const Model& model, const LawSuiteOptions& options) {
  Evaluator ev(model);
  const auto pool = formula_pool(model, options.depth, options.max_pool);
  Args instances;
  for (const auto& e : pool) instances.push_back(e.formula);
  if (options.sampled_formulas > 0) {
    RandomFormulas gen(model, options.seed);
    for (std::size_t i = 0; i < options.sampled_formulas; ++i) instances.push_back(gen.generate(options.depth));
  }

  std::vector<LawReport> out;
  for (const auto& [agent, _] : model.belief_labels()) {
    for (const auto& s : belief_schemata(agent)) out.push_back(check_schema(ev, s, agent, true, instances));
  }
  for (const auto& [agent, _] : model.knowledge_labels()) {
    for (const auto& s : knowledge_schemata(agent)) out.push_back(check_schema(ev, s, agent, true, instances));
  }

  using namespace fml;
  for (const auto& [agent, b] : model.belief_labels()) {
    const bool unbiased = b.unbiased();
    out.push_back(check_schema(
        ev,
        {"unbiased-belief-is-true", "B p -> p  (g = id on Im(f))", 1,
         [a = agent](const Args& x) { return implies(belief(a, x[0]), x[0]); }},
        agent, unbiased, instances));
    out.push_back(check_schema(
        ev,
        {"negation-complete-belief", "~B p -> B ~p  (f = id_S)", 1,
         [a = agent](const Args& x) { return implies(neg(belief(a, x[0])), belief(a, neg(x[0]))); }},
        agent, b.visibility_is_identity(), instances));
  }
  for (const auto& [agent, k] : model.knowledge_labels()) {
    const bool perfect = k.visibility_is_identity() && k.pair.bias().is_identity_on(StateSet::full(model.space()->size()));
    out.push_back(check_schema(
        ev,
        {"perfect-knowledge", "p -> K p  (f = g = id_S)", 1,
         [a = agent](const Args& x) { return implies(x[0], knowledge(a, x[0])); }},
        agent, perfect, instances));

    const LabelBinding* b = model.label(Modality::kBelief, agent);
    if (!b || !(b->pair == k.pair)) continue;
    out.push_back(check_schema(
        ev,
        {"knowledge-implies-belief", "K p -> B p", 1,
         [a = agent](const Args& x) { return implies(knowledge(a, x[0]), belief(a, x[0])); }},
        agent, true, instances));
    out.push_back(check_schema(ev, k_iff_b("unbiased-knowledge-is-belief", agent, "g = id on Im(f)"), agent,
                               k.unbiased(), instances));
    out.push_back(check_schema(ev, k_iff_b("perfect-knowledge-is-precise-belief", agent, "f = g = id_S"), agent,
                               perfect, instances));
  }

  for (auto& r : iff_condition_checks(model)) out.push_back(std::move(r));
  for (auto& r : group_probes(ev, model, instances)) out.push_back(std::move(r));
  return out;
}

bool all_asserted_hold(const std::vector<LawReport>& reports) {
  for (const auto& r : reports) {
    if (r.asserted && !r.holds) return false;
  }
  return true;
}

std::string laws_to_json(const std::vector<LawReport>& reports, const LawSuiteOptions& options) {
  (void)options;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j;
    j["law"] = r.id;
    j["agent"] = r.agent;
    j["claim"] = r.claim;
    j["asserted"] = r.asserted;
    j["status"] = r.status();
    j["instances"] = r.instances_checked;
    if (r.counterexample) {
      j[r.holds ? "witness" : "counterexample"] = {{"state", r.counterexample->state},
                                                   {"instances", r.counterexample->instances}};
    }
    if (!j.contains("counterexample")) j["counterexample"] = nullptr;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

std::string laws_to_text(const std::vector<LawReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    const char* tag = r.asserted ? (r.holds ? "[ok]   " : "[FAIL] ") : (r.holds ? "[probe] holds  " : "[probe] fails  ");
    out += tag + r.id + " " + r.agent + ": " + r.claim + "  (" + std::to_string(r.instances_checked) + " instances)";
    if (r.counterexample) {
      out += std::string("\n         ") + (r.holds ? "witness at " : "counterexample at ") + r.counterexample->state;
      for (const auto& i : r.counterexample->instances) out += "  [" + i + "]";
    }
    out += "\n";
  }
  return out;
}

}  // namespace doxepi
