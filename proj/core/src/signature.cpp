#include "doxepi/signature.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace doxepi {

using nlohmann::json;

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

bool is_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

std::optional<std::string> identity_type(std::string_view name) {
  if (name.size() > 3 && name.substr(0, 3) == "id_") return std::string(name.substr(3));
  return std::nullopt;
}

/// Shared by Instantiation::interpret and the loader (which resolves
/// composites before the Instantiation exists).
Outcome<TypedFunction> resolve(const SpacePtr& space, const std::map<std::string, StateSet>& types,
                               const std::map<std::string, TypedFunction>& functions, std::string_view name) {
  if (auto it = functions.find(std::string(name)); it != functions.end()) return it->second;
  if (auto t = identity_type(name)) {
    if (auto ty = types.find(*t); ty != types.end()) {
      return TypedFunction{{*t, *t}, StateFunction::identity(space, ty->second), std::nullopt, true};
    }
  }
  const std::size_t dot = name.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == name.size()) {
    return Diagnostic{model_error::kUnknownName, "undeclared function name '" + std::string(name) + "'",
                      {}};
  }
  const std::string outer_name(name.substr(0, dot));
  const std::string inner_name(name.substr(dot + 1));
  auto outer = resolve(space, types, functions, outer_name);
  if (!outer) return outer.diagnostics();
  auto inner = resolve(space, types, functions, inner_name);
  if (!inner) return inner.diagnostics();
  if (inner->type.codomain != outer->type.domain) {
    return Diagnostic{model_error::kTypeMismatch,
                      "cannot compose '" + outer_name + "' : " + outer->type.domain + " -> " +
                          outer->type.codomain + " after '" + inner_name + "' : " + inner->type.domain +
                          " -> " + inner->type.codomain,
                      {}};
  }
  return TypedFunction{{inner->type.domain, outer->type.codomain},
                       compose(outer->function, inner->function),
                       std::make_pair(outer_name, inner_name),
                       false};
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {}

  Outcome<Model> run() {
    if (!load_states()) return problems_;
    load_types();
    if (!problems_.empty()) return problems_;
    load_functions();
    if (!problems_.empty()) return problems_;
    auto belief = load_labels("belief_labels", Modality::kBelief);
    auto knowledge = load_labels("knowledge_labels", Modality::kKnowledge);
    check_biases();
    auto valuation = load_valuation();
    if (!problems_.empty()) return problems_;

    signature_.types.insert(kStateType);
    for (const auto& [name, _] : types_) signature_.types.insert(name);
    for (const auto& [name, tf] : functions_) {
      if (tf.bias) signature_.bias_names[name] = tf.type;
      if (tf.type.domain == kStateType) signature_.visibility_names[name] = tf.type;
    }
    for (const auto& [atom, _] : valuation) signature_.atoms.insert(atom);

    Model model(std::move(signature_), Instantiation(space_, std::move(types_), std::move(functions_)),
                std::move(valuation), std::move(belief), std::move(knowledge));
    for (const auto& [label, binding] : model.belief_labels()) {
      if (!classify(binding.relation).kd45()) throw std::logic_error("belief relation of " + label + " is not KD45");
    }
    for (const auto& [label, binding] : model.knowledge_labels()) {
      if (!classify(binding.relation).equivalence) {
        throw std::logic_error("knowledge relation of " + label + " is not an equivalence");
      }
    }
    return model;
  }

 private:
  void problem(const char* code, std::string message, std::vector<std::string> witness = {}) {
    problems_.push_back({code, std::move(message), std::move(witness)});
  }

  bool load_states() {
    const auto it = doc_.find("states");
    if (it == doc_.end() || !it->is_array() || it->empty()) {
      problem(model_error::kMalformed, "'states' must be a non-empty array of state names");
      return false;
    }
    std::vector<std::string> names;
    for (const auto& s : *it) {
      if (!s.is_string()) {
        problem(model_error::kMalformed, "state names must be strings");
        return false;
      }
      names.push_back(s.get<std::string>());
    }
    try {
      space_ = StateSpace::make(std::move(names));
    } catch (const std::invalid_argument& e) {
      problem(model_error::kBadName, e.what());
      return false;
    }
    return true;
  }

  std::optional<std::size_t> state(const json& j, const std::string& context) {
    if (!j.is_string()) {
      problem(model_error::kMalformed, context + ": state names must be strings");
      return std::nullopt;
    }
    auto idx = space_->index_of(j.get<std::string>());
    if (!idx) {
      problem(model_error::kUnknownState, context + ": unknown state '" + j.get<std::string>() + "'",
              {j.get<std::string>()});
    }
    return idx;
  }

  std::optional<StateSet> state_array(const json& j, const std::string& context) {
    if (!j.is_array()) {
      problem(model_error::kMalformed, context + " must be an array of state names");
      return std::nullopt;
    }
    StateSet out(space_->size());
    bool ok = true;
    for (const auto& s : j) {
      if (auto idx = state(s, context)) {
        out.insert(*idx);
      } else {
        ok = false;
      }
    }
    if (!ok) return std::nullopt;
    return out;
  }

  void load_types() {
    const StateSet all = StateSet::full(space_->size());
    types_[kStateType] = all;
    const auto it = doc_.find("types");
    if (it == doc_.end()) return;
    if (!it->is_object()) {
      problem(model_error::kMalformed, "'types' must be an object");
      return;
    }
    for (const auto& [name, members] : it->items()) {
      if (!is_identifier(name)) {
        problem(model_error::kBadName, "type name '" + name + "' is not an identifier");
        continue;
      }
      auto set = state_array(members, "type '" + name + "'");
      if (!set) continue;
      if (name == kStateType && *set != all) {
        problem(model_error::kTypeMismatch, "type 'S' must contain every state");
        continue;
      }
      types_[name] = *set;
    }
  }

  std::optional<FunctionType> declared_type(const std::string& fname, const json& entry) {
    FunctionType type;
    for (auto [key, slot] : {std::pair{"domain", &type.domain}, std::pair{"codomain", &type.codomain}}) {
      auto it = entry.find(key);
      if (it == entry.end() || !it->is_string()) {
        problem(model_error::kMalformed, "function '" + fname + "' needs a string '" + key + "'");
        return std::nullopt;
      }
      *slot = it->get<std::string>();
      if (!types_.count(*slot)) {
        problem(model_error::kUnknownName, "function '" + fname + "' uses undeclared type '" + *slot + "'");
        return std::nullopt;
      }
    }
    return type;
  }

  void load_base_function(const std::string& fname, const json& entry) {
    auto type = declared_type(fname, entry);
    if (!type) return;
    const auto map_it = entry.find("map");
    if (map_it == entry.end() || !map_it->is_object()) {
      problem(model_error::kMalformed, "function '" + fname + "' needs a 'map' object or a 'compose' pair");
      return;
    }
    const StateSet& domain = types_.at(type->domain);
    const StateSet& codomain = types_.at(type->codomain);
    std::vector<std::size_t> map(space_->size(), StateFunction::kUndefined);
    const std::string context = "function '" + fname + "'";
    for (const auto& [from_name, to] : map_it->items()) {
      auto from = space_->index_of(from_name);
      if (!from) {
        problem(model_error::kUnknownState, context + ": unknown state '" + from_name + "'", {from_name});
        continue;
      }
      auto target = state(to, context);
      if (!target) continue;
      if (!domain.contains(*from)) {
        problem(model_error::kTypeMismatch,
                context + " maps '" + from_name + "' outside its domain '" + type->domain + "'", {from_name});
        continue;
      }
      if (!codomain.contains(*target)) {
        problem(model_error::kTypeMismatch,
                context + " sends '" + from_name + "' to '" + space_->name(*target) + "' outside its codomain '" +
                    type->codomain + "'",
                {from_name});
        continue;
      }
      map[*from] = *target;
    }
    bool total = true;
    domain.for_each([&](std::size_t s) {
      if (map[s] == StateFunction::kUndefined && total) {
        total = false;
        problem(model_error::kPartialFunction, context + " is undefined at '" + space_->name(s) + "'",
                {space_->name(s)});
      }
    });
    if (!total) return;

    if (auto t = identity_type(fname)) {
      if (type->domain != *t || type->codomain != *t || !StateFunction(space_, domain, map).is_identity_on(domain)) {
        problem(model_error::kIdentityOverridden, "'" + fname + "' must be the identity on '" + *t + "'");
      }
      return;  // identities stay implicit
    }
    functions_.emplace(fname, TypedFunction{*type, StateFunction(space_, domain, std::move(map)), std::nullopt,
                                            explicit_bias_.count(fname) > 0});
  }

  void load_functions() {
    const auto it = doc_.find("functions");
    if (it == doc_.end()) return;
    if (!it->is_object()) {
      problem(model_error::kMalformed, "'functions' must be an object");
      return;
    }
    std::map<std::string, std::pair<std::string, std::string>> pending;
    for (const auto& [fname, entry] : it->items()) {
      if (!entry.is_object()) {
        problem(model_error::kMalformed, "function '" + fname + "' must be an object");
        continue;
      }
      if (auto kind = entry.find("kind"); kind != entry.end()) {
        if (*kind == "G") {
          explicit_bias_.insert(fname);
        } else if (*kind == "F") {
          explicit_visibility_.insert(fname);
        } else {
          problem(model_error::kMalformed, "function '" + fname + "': 'kind' must be \"F\" or \"G\"");
          continue;
        }
      }
      if (auto comp = entry.find("compose"); comp != entry.end()) {
        if (!comp->is_array() || comp->size() != 2 || !(*comp)[0].is_string() || !(*comp)[1].is_string()) {
          problem(model_error::kMalformed, "function '" + fname + "': 'compose' must be [outer, inner]");
          continue;
        }
        pending[fname] = {(*comp)[0].get<std::string>(), (*comp)[1].get<std::string>()};
        continue;
      }
      if (fname.empty() || fname.find('.') != std::string::npos) {
        problem(model_error::kBadName, "function name '" + fname + "' may not contain '.'");
        continue;
      }
      load_base_function(fname, entry);
    }
    if (!problems_.empty()) return;

    // Composites may refer to each other; resolve until no progress.
    bool progress = true;
    while (!pending.empty() && progress) {
      progress = false;
      for (auto p = pending.begin(); p != pending.end();) {
        const auto& [outer, inner] = p->second;
        auto resolved = resolve(space_, types_, functions_, outer + "." + inner);
        if (resolved) {
          TypedFunction tf = std::move(resolved).value();
          tf.composite = p->second;
          tf.bias = explicit_bias_.count(p->first) > 0;
          functions_.emplace(p->first, std::move(tf));
          p = pending.erase(p);
          progress = true;
        } else if (resolved.has(model_error::kTypeMismatch)) {
          for (auto d : resolved.diagnostics()) {
            d.message = "composite '" + p->first + "': " + d.message;
            problems_.push_back(std::move(d));
          }
          p = pending.erase(p);
        } else {
          ++p;
        }
      }
    }
    for (const auto& [fname, parts] : pending) {
      problem(model_error::kUnknownName, "composite '" + fname + "' refers to undeclared or cyclic names '" +
                                             parts.first + "', '" + parts.second + "'");
    }

    for (auto& [fname, tf] : functions_) {
      if (tf.type.domain != kStateType) {
        if (explicit_visibility_.count(fname)) {
          problem(model_error::kTypeMismatch,
                  "visibility function '" + fname + "' must have domain 'S', not '" + tf.type.domain + "'");
        }
        tf.bias = true;  // only bias names may have a source other than S
      }
    }
  }

  std::map<std::string, LabelBinding> load_labels(const char* key, Modality modality) {
    std::map<std::string, LabelBinding> out;
    const auto it = doc_.find(key);
    if (it == doc_.end()) return out;
    if (!it->is_object()) {
      problem(model_error::kMalformed, std::string("'") + key + "' must be an object");
      return out;
    }
    for (const auto& [agent, names] : it->items()) {
      const std::string context = std::string(key) + " '" + agent + "'";
      if (!is_label(agent)) {
        problem(model_error::kBadName, context + ": agent labels are alphanumeric");
        continue;
      }
      if (!names.is_array() || names.size() != 2 || !names[0].is_string() || !names[1].is_string()) {
        problem(model_error::kMalformed, context + " must be [visibility, bias]");
        continue;
      }
      LabelNames label{names[0].get<std::string>(), names[1].get<std::string>()};
      auto f = resolve(space_, types_, functions_, label.visibility);
      auto g = resolve(space_, types_, functions_, label.bias);
      if (!f || !g) {
        for (const auto* r : {&f, &g}) {
          for (auto d : r->diagnostics()) {
            d.message = context + ": " + d.message;
            problems_.push_back(std::move(d));
          }
        }
        continue;
      }
      if (f->type.domain != kStateType) {
        problem(model_error::kTypeMismatch, context + ": visibility '" + label.visibility + "' must have domain 'S'");
        continue;
      }
      if (g->type.domain != f->type.codomain) {
        problem(model_error::kTypeMismatch, context + ": bias '" + label.bias + "' expects '" + g->type.domain +
                                                "' but visibility '" + label.visibility + "' yields '" +
                                                f->type.codomain + "'");
        continue;
      }
      used_biases_.emplace(label.bias, *g);
      auto pair = validate_pair(f->function, g->function);
      if (!pair) {
        for (const auto& d : pair.diagnostics()) {
          problem(model_error::kInvalidLabelPair, context + ": " + d.message, d.witness);
        }
        continue;
      }
      Relation relation = modality == Modality::kBelief ? doxastic(*pair) : epistemic(*pair);
      out.emplace(agent, LabelBinding{std::move(label), std::move(pair).value(), std::move(relation), false});
      if (modality == Modality::kBelief) {
        signature_.belief_labels[agent] = out.at(agent).names;
      } else {
        signature_.knowledge_labels[agent] = out.at(agent).names;
      }
    }
    return out;
  }

  void check_idempotent(const std::string& fname, const StateFunction& h) {
    bool reported = false;
    h.domain().for_each([&](std::size_t s) {
      if (reported) return;
      const std::size_t once = h(s);
      if (h.at_or_undefined(once) != once) {
        reported = true;
        problem(model_error::kNonIdempotentBias,
                "bias function '" + fname + "' is not idempotent at '" + space_->name(s) + "'", {space_->name(s)});
      }
    });
  }

  void check_biases() {
    for (auto& [fname, tf] : used_biases_) {
      if (auto it = functions_.find(fname); it != functions_.end()) it->second.bias = true;
    }
    for (const auto& [fname, tf] : functions_) {
      if (tf.bias) check_idempotent(fname, tf.function);
    }
    for (const auto& [fname, tf] : used_biases_) {
      if (!functions_.count(fname)) check_idempotent(fname, tf.function);  // dotted or identity names
    }
  }

  std::map<std::string, StateSet> load_valuation() {
    std::map<std::string, StateSet> out;
    const auto it = doc_.find("valuation");
    if (it == doc_.end() || !it->is_object() || it->empty()) {
      problem(model_error::kNoAtoms, "'valuation' must map at least one atomic proposition to states");
      return out;
    }
    for (const auto& [atom, states] : it->items()) {
      if (!is_identifier(atom) || atom == "false") {
        problem(model_error::kBadName, "atom name '" + atom + "' is not an identifier");
        continue;
      }
      if (auto set = state_array(states, "valuation of '" + atom + "'")) out.emplace(atom, *set);
    }
    return out;
  }

  const json& doc_;
  std::vector<Diagnostic> problems_;
  SpacePtr space_;
  std::map<std::string, StateSet> types_;
  std::map<std::string, TypedFunction> functions_;
  std::set<std::string> explicit_bias_;
  std::set<std::string> explicit_visibility_;
  std::map<std::string, TypedFunction> used_biases_;
  SimilarityType signature_;
};

std::string read_file(const std::filesystem::path& path, std::vector<Diagnostic>& problems) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    problems.push_back({model_error::kMalformed, "cannot read '" + path.string() + "'", {}});
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json state_names(const StateSpace& space, const StateSet& set) {
  json arr = json::array();
  set.for_each([&](std::size_t s) { arr.push_back(space.name(s)); });
  return arr;
}

}  // namespace

// ---------------------------------------------------------------------------

Instantiation::Instantiation(SpacePtr space, std::map<std::string, StateSet> types,
                             std::map<std::string, TypedFunction> functions)
    : space_(std::move(space)), types_(std::move(types)), functions_(std::move(functions)) {
  types_[kStateType] = StateSet::full(space_->size());
}

const StateSet* Instantiation::type(std::string_view name) const {
  auto it = types_.find(std::string(name));
  return it == types_.end() ? nullptr : &it->second;
}

Outcome<TypedFunction> Instantiation::interpret(std::string_view name) const {
  return resolve(space_, types_, functions_, name);
}

bool Instantiation::operator==(const Instantiation& other) const {
  return same_space(space_, other.space_) && types_ == other.types_ && functions_ == other.functions_;
}

bool LabelBinding::visibility_is_identity() const {
  return pair.visibility().is_identity_on(StateSet::full(pair.space()->size()));
}

bool LabelBinding::bias_injective() const { return pair.bias().restricted_to(pair.visible()).is_injective(); }

Model::Model(SimilarityType signature, Instantiation instantiation, std::map<std::string, StateSet> valuation,
             std::map<std::string, LabelBinding> belief, std::map<std::string, LabelBinding> knowledge)
    : signature_(std::move(signature)),
      instantiation_(std::move(instantiation)),
      valuation_(std::move(valuation)),
      belief_(std::move(belief)),
      knowledge_(std::move(knowledge)) {}

const LabelBinding* Model::label(Modality modality, std::string_view agent) const {
  const auto& table = modality == Modality::kBelief ? belief_ : knowledge_;
  auto it = table.find(std::string(agent));
  return it == table.end() ? nullptr : &it->second;
}

void Model::override_relation(Modality modality, const std::string& agent, Relation relation) {
  auto& table = modality == Modality::kBelief ? belief_ : knowledge_;
  auto it = table.find(agent);
  if (it == table.end()) throw std::out_of_range("no such label '" + agent + "'");
  require_same_space(space(), relation.space(), "override_relation");
  it->second.relation = std::move(relation);
  it->second.overridden = true;
}

bool Model::operator==(const Model& other) const {
  auto same_labels = [](const std::map<std::string, LabelBinding>& a, const std::map<std::string, LabelBinding>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, v] : a) {
      auto it = b.find(k);
      if (it == b.end() || !(it->second.names == v.names) || !(it->second.pair == v.pair) ||
          !(it->second.relation == v.relation)) {
        return false;
      }
    }
    return true;
  };
  return signature_ == other.signature_ && instantiation_ == other.instantiation_ &&
         valuation_ == other.valuation_ && same_labels(belief_, other.belief_) &&
         same_labels(knowledge_, other.knowledge_);
}

Outcome<Model> load_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    return Diagnostic{model_error::kMalformed, std::string("invalid JSON: ") + e.what(), {}};
  }
  if (!doc.is_object()) return Diagnostic{model_error::kMalformed, "model document must be a JSON object", {}};
  return Loader(doc).run();
}

Outcome<Model> load_model_file(const std::filesystem::path& path) {
  std::vector<Diagnostic> problems;
  const std::string text = read_file(path, problems);
  if (!problems.empty()) return problems;
  return load_model(text);
}

std::string serialize_model(const Model& model) {
  const StateSpace& space = *model.space();
  json doc;
  doc["states"] = space.names();
  json types = json::object();
  for (const auto& [name, set] : model.instantiation().types()) {
    if (name != kStateType) types[name] = state_names(space, set);
  }
  doc["types"] = std::move(types);

  json functions = json::object();
  for (const auto& [name, tf] : model.instantiation().functions()) {
    json entry;
    entry["kind"] = tf.bias ? "G" : "F";
    if (tf.composite) {
      entry["compose"] = {tf.composite->first, tf.composite->second};
    } else {
      entry["domain"] = tf.type.domain;
      entry["codomain"] = tf.type.codomain;
      json map = json::object();
      tf.function.domain().for_each([&](std::size_t s) { map[space.name(s)] = space.name(tf.function(s)); });
      entry["map"] = std::move(map);
    }
    functions[name] = std::move(entry);
  }
  doc["functions"] = std::move(functions);

  for (auto [key, table] : {std::pair{"belief_labels", &model.belief_labels()},
                            std::pair{"knowledge_labels", &model.knowledge_labels()}}) {
    json labels = json::object();
    for (const auto& [agent, binding] : *table) labels[agent] = {binding.names.visibility, binding.names.bias};
    doc[key] = std::move(labels);
  }

  json valuation = json::object();
  for (const auto& [atom, set] : model.valuation()) valuation[atom] = state_names(space, set);
  doc["valuation"] = std::move(valuation);
  return doc.dump(2);
}

Outcome<Relation> load_relation(std::string_view document, const SpacePtr& space) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    return Diagnostic{model_error::kMalformed, std::string("invalid JSON: ") + e.what(), {}};
  }
  if (!doc.is_object()) return Diagnostic{model_error::kMalformed, "relation document must be a JSON object", {}};
  SpacePtr carrier = space;
  if (auto st = doc.find("states"); st != doc.end()) {
    if (!st->is_array() || st->empty()) {
      return Diagnostic{model_error::kMalformed, "'states' must be a non-empty array", {}};
    }
    std::vector<std::string> names;
    for (const auto& s : *st) {
      if (!s.is_string()) return Diagnostic{model_error::kMalformed, "state names must be strings", {}};
      names.push_back(s.get<std::string>());
    }
    try {
      SpacePtr declared = StateSpace::make(std::move(names));
      if (carrier && !same_space(carrier, declared)) {
        return Diagnostic{model_error::kMalformed, "relation states differ from the model's states", {}};
      }
      if (!carrier) carrier = declared;
    } catch (const std::invalid_argument& e) {
      return Diagnostic{model_error::kBadName, e.what(), {}};
    }
  }
  if (!carrier) return Diagnostic{model_error::kMalformed, "relation document needs 'states'", {}};

  const auto pairs = doc.find("pairs");
  if (pairs == doc.end() || !pairs->is_array()) {
    return Diagnostic{model_error::kMalformed, "'pairs' must be an array of [from, to] pairs", {}};
  }
  Relation r(carrier);
  std::vector<Diagnostic> problems;
  for (const auto& p : *pairs) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
      problems.push_back({model_error::kMalformed, "each pair must be [from, to]", {}});
      continue;
    }
    auto from = carrier->index_of(p[0].get<std::string>());
    auto to = carrier->index_of(p[1].get<std::string>());
    if (!from || !to) {
      const std::string bad = !from ? p[0].get<std::string>() : p[1].get<std::string>();
      problems.push_back({model_error::kUnknownState, "unknown state '" + bad + "'", {bad}});
      continue;
    }
    r.insert(*from, *to);
  }
  if (!problems.empty()) return problems;
  return r;
}

Outcome<Relation> load_relation(std::string_view document) { return load_relation(document, nullptr); }

Outcome<Relation> load_relation_file(const std::filesystem::path& path) {
  std::vector<Diagnostic> problems;
  const std::string text = read_file(path, problems);
  if (!problems.empty()) return problems;
  return load_relation(text);
}

std::string serialize_relation(const Relation& relation) {
  json doc;
  doc["states"] = relation.space()->names();
  json pairs = json::array();
  for (const auto& [s, t] : relation.pairs()) pairs.push_back({relation.space()->name(s), relation.space()->name(t)});
  doc["pairs"] = std::move(pairs);
  return doc.dump();
}

}  // namespace doxepi
