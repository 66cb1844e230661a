#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "doxepi/doxepi.hpp"
#include "json.hpp"

namespace doxepi::cli {
namespace {

using nlohmann::json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Model load_or_throw(const std::string& path) {
  auto model = load_model_file(path);
  if (!model) throw InputError(path + ":\n" + join(model.diagnostics()));
  return std::move(model).value();
}

std::vector<std::string> names_of(const StateSpace& space, const StateSet& set) {
  std::vector<std::string> out;
  set.for_each([&](std::size_t s) { out.push_back(space.name(s)); });
  return out;
}

// ---------------------------------------------------------------------------

struct CheckConfig {
  std::string model;
  std::vector<std::string> formulas;
  std::string formula_file;
  bool satisfiable = false;
  std::string format = "text";
};

int cmd_check(const CheckConfig& cfg, std::ostream& out) {
  const Model model = load_or_throw(cfg.model);
  std::vector<FormulaPtr> formulas;
  try {
    for (const auto& f : cfg.formulas) formulas.push_back(parse(f));
    if (!cfg.formula_file.empty()) {
      for (auto& f : parse_formula_lines(read_text(cfg.formula_file))) formulas.push_back(std::move(f));
    }
  } catch (const ParseError& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
  if (formulas.empty()) throw InputError("no formulas given (use -f or --formulas)");

  Evaluator ev(model);
  const StateSpace& space = *model.space();
  bool all_pass = true;
  json report = json::array();
  std::ostringstream text;
  for (const auto& phi : formulas) {
    StateSet ext(space.size());
    try {
      ext = ev.extension(phi);
    } catch (const UnresolvedName& e) {
      throw InputError(e.what());
    }
    const bool valid = ext.count() == space.size();
    const bool satisfiable = !ext.empty();
    const bool pass = cfg.satisfiable ? satisfiable : valid;
    all_pass = all_pass && pass;

    json entry{{"formula", render(*phi)},
               {"extension", names_of(space, ext)},
               {"valid", valid},
               {"satisfiable", satisfiable}};
    if (auto bad = ext.complement().first()) {
      entry["counterexample"] = space.name(*bad);
    } else {
      entry["counterexample"] = nullptr;
    }
    report.push_back(std::move(entry));

    text << (pass ? "pass " : "FAIL ") << render(*phi) << "\n  extension " << format_set(space, ext);
    text << (valid ? "  valid" : satisfiable ? "  satisfiable" : "  unsatisfiable");
    if (!valid) text << "  (fails at " << space.name(*ext.complement().first()) << ")";
    text << "\n";
  }
  if (cfg.format == "json") {
    out << report.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all_pass ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct LawsConfig {
  std::string model;
  std::size_t depth = 3;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t sample = 0;
  std::vector<std::string> overrides;
};

void apply_override(Model& model, const std::string& arg) {
  const auto colon = arg.find(':');
  const auto eq = arg.find('=', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || eq == std::string::npos) {
    throw InputError("--override-relation expects belief:AGENT=PATH or knowledge:AGENT=PATH, got '" + arg + "'");
  }
  const std::string kind = arg.substr(0, colon);
  const std::string agent = arg.substr(colon + 1, eq - colon - 1);
  const std::string path = arg.substr(eq + 1);
  Modality modality;
  if (kind == "belief") {
    modality = Modality::kBelief;
  } else if (kind == "knowledge") {
    modality = Modality::kKnowledge;
  } else {
    throw InputError("unknown modality '" + kind + "' in --override-relation");
  }
  if (!model.label(modality, agent)) throw InputError("no " + kind + " label '" + agent + "' to override");
  auto rel = load_relation(read_text(path), model.space());
  if (!rel) throw InputError(path + ":\n" + join(rel.diagnostics()));
  model.override_relation(modality, agent, std::move(rel).value());
}

int cmd_laws(const LawsConfig& cfg, std::ostream& out, std::ostream& err) {
  Model model = load_or_throw(cfg.model);
  for (const auto& o : cfg.overrides) apply_override(model, o);

  LawSuiteOptions options;
  options.depth = cfg.depth;
  options.seed = cfg.seed;
  options.sampled_formulas = cfg.sample;
  const auto reports = law_suite(model, options);
  if (cfg.format == "json") {
    out << laws_to_json(reports, options) << "\n";
  } else {
    out << laws_to_text(reports);
  }
  for (const auto& r : reports) {
    if (r.asserted && !r.holds) {
      err << "law " << r.id << " fails for " << r.agent;
      if (r.counterexample) {
        err << " at state " << r.counterexample->state;
        for (const auto& i : r.counterexample->instances) err << " [" << i << "]";
      }
      err << "\n";
      return kExitFailed;
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

json pair_fragment(const FunctionPair& pair, const std::string& f_name, const std::string& g_name,
                   const std::string& type, json& types) {
  const StateSpace& space = *pair.space();
  const StateSet visible = pair.visible();
  types[type] = names_of(space, visible);
  json functions = json::object();
  json f_map = json::object();
  for (std::size_t s = 0; s < space.size(); ++s) f_map[space.name(s)] = space.name(pair.visibility()(s));
  functions[f_name] = {{"kind", "F"}, {"domain", kStateType}, {"codomain", type}, {"map", f_map}};
  if (!g_name.empty()) {
    json g_map = json::object();
    visible.for_each([&](std::size_t s) { g_map[space.name(s)] = space.name(pair.bias()(s)); });
    functions[g_name] = {{"kind", "G"}, {"domain", type}, {"codomain", type}, {"map", g_map}};
  }
  return functions;
}

int cmd_synthesize(const std::string& path, std::ostream& out, std::ostream& err) {
  auto rel = load_relation_file(path);
  if (!rel) throw InputError(path + ":\n" + join(rel.diagnostics()));
  const Relation& r = *rel;

  auto kd45 = from_kd45(r);
  if (!kd45) {
    err << "relation is neither KD45 nor an equivalence\n" << join(kd45.diagnostics()) << "\n";
    return kExitFailed;
  }
  const RoundtripReport report = roundtrip_check(r);

  json doc;
  doc["states"] = r.space()->names();
  json types = json::object();
  json functions = pair_fragment(*kd45, "f", "g", "V", types);
  doc["belief_labels"] = {{"a", {"f", "g"}}};
  if (report.equivalence) {
    auto eq = from_equivalence(r);
    if (eq) {
      const json extra = pair_fragment(*eq, "pi", "", "W", types);
      for (const auto& [k, v] : extra.items()) functions[k] = v;
      doc["knowledge_labels"] = {{"a", {"pi", "id_W"}}};
    }
  }
  doc["types"] = std::move(types);
  doc["functions"] = std::move(functions);
  doc["valuation"] = {{"p", json::array()}};
  doc["verdict"] = {{"kd45", report.kd45},
                    {"equivalence", report.equivalence},
                    {"roundtrip", report.pass() ? "PASS" : "FAIL"},
                    {"notes", report.notes}};
  out << doc.dump(2) << "\n";
  return report.pass() ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

struct TracesConfig {
  std::string agents = "2";
  std::size_t depth = 2;
  std::string verify;
};

TraceSpace make_trace_space(const TracesConfig& cfg) {
  std::vector<std::string> agents;
  const bool numeric = !cfg.agents.empty() && cfg.agents.find_first_not_of("0123456789") == std::string::npos;
  try {
    if (numeric && cfg.agents.find(',') == std::string::npos) {
      return TraceSpace::numbered(std::stoul(cfg.agents), cfg.depth);
    }
    std::stringstream ss(cfg.agents);
    for (std::string a; std::getline(ss, a, ',');) agents.push_back(a);
    return TraceSpace(std::move(agents), cfg.depth);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--agents: ") + e.what());
  }
}

int cmd_traces(const TracesConfig& cfg, std::ostream& out) {
  const TraceSpace ts = make_trace_space(cfg);
  out << ts.size() << " traces over " << ts.agents().size() << " agents, depth " << ts.depth() << "\n";
  bool ok = true;
  for (const auto& a : ts.agents()) {
    if (cfg.verify.empty() || cfg.verify == "indist") {
      const auto r = verify_indist_correspondence(ts, a);
      ok = ok && r.pass();
      out << (r.pass() ? "pass" : "FAIL") << " indist agent " << a << ": pair "
          << (r.pair_valid ? "valid" : "invalid") << ", epistemic " << (r.epistemic_matches ? "=" : "!=")
          << " indistinguishability, kernel " << (r.kernel_matches ? "=" : "!=") << " indistinguishability\n";
    }
    if (cfg.verify.empty() || cfg.verify == "pdl") {
      const auto r = verify_pdl_correspondence(ts, a);
      ok = ok && r.pass();
      out << (r.pass() ? "pass" : "FAIL") << " pdl agent " << a << ": interior "
          << (r.interior_equal ? "equal" : "differs") << ", boundary " << (r.boundary_equal ? "equal" : "differs")
          << "\n";
      for (const auto& [s, t] : r.interior_differences) {
        out << "  (" << ts.space()->name(s) << ", " << ts.space()->name(t) << ")\n";
      }
    }
  }
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& path, std::ostream& out) {
  const Model model = load_or_throw(path);
  const StateSpace& space = *model.space();
  out << "ok " << path << ": " << space.size() << " states, " << model.valuation().size() << " atoms, "
      << model.belief_labels().size() << " belief labels, " << model.knowledge_labels().size()
      << " knowledge labels\n";
  for (auto [kind, table] : {std::pair{"B", &model.belief_labels()}, std::pair{"K", &model.knowledge_labels()}}) {
    for (const auto& [agent, b] : *table) {
      out << "  " << kind << "[" << agent << "] = (" << b.names.visibility << ", " << b.names.bias << ")"
          << (b.unbiased() ? " unbiased" : " biased") << (b.visibility_is_identity() ? ", f = id_S" : "")
          << (b.bias_injective() ? ", g injective" : "") << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Doxastic and epistemic model checker built on visibility/bias function pairs", "doxepi"};
  app.require_subcommand(1);

  CheckConfig check;
  auto* c = app.add_subcommand("check", "evaluate formulas in a model");
  c->add_option("-m,--model", check.model, "model JSON")->required();
  c->add_option("-f,--formula", check.formulas, "formula (repeatable)");
  c->add_option("--formulas", check.formula_file, "file with one formula per line");
  c->add_flag("--satisfiable", check.satisfiable, "pass when the extension is non-empty");
  c->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));

  LawsConfig laws;
  auto* l = app.add_subcommand("laws", "run the modal law suite");
  l->add_option("-m,--model", laws.model, "model JSON")->required();
  l->add_option("--depth", laws.depth, "formula depth bound")->capture_default_str();
  l->add_option("--format", laws.format)->check(CLI::IsMember({"text", "json"}));
  l->add_option("--seed", laws.seed, "seed for --sample")->capture_default_str();
  l->add_option("--sample", laws.sample, "extra random formulas per law");
  l->add_option("--override-relation", laws.overrides, "belief:AGENT=PATH or knowledge:AGENT=PATH");

  std::string relation_path;
  auto* s = app.add_subcommand("synthesize", "build a function pair from a relation");
  s->add_option("-r,--relation", relation_path, "relation JSON")->required();

  TracesConfig traces;
  auto* t = app.add_subcommand("traces", "check correspondences on action-trace spaces");
  t->add_option("--agents", traces.agents, "agent count or comma-separated labels")->capture_default_str();
  t->add_option("--depth", traces.depth, "maximum trace length")->capture_default_str();
  t->add_option("--verify", traces.verify)->check(CLI::IsMember({"indist", "pdl"}));

  std::string validate_path;
  auto* v = app.add_subcommand("validate", "load a model and report its labels");
  v->add_option("-m,--model", validate_path, "model JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (l->parsed()) return cmd_laws(laws, out, err);
    if (s->parsed()) return cmd_synthesize(relation_path, out, err);
    if (t->parsed()) return cmd_traces(traces, out);
    if (v->parsed()) return cmd_validate(validate_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const UnresolvedName& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace doxepi::cli
