#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace doxepi;

namespace {

std::string data(const std::string& name) { return std::string(DOXEPI_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("minimal document gives identity relations") {
  const Model m = load_model(R"({"states": ["s0"], "belief_labels": {"a": ["id_S", "id_S"]},
                                 "knowledge_labels": {"a": ["id_S", "id_S"]}, "valuation": {"p": ["s0"]}})")
                      .value();
  CHECK(m.label(Modality::kBelief, "a")->relation == Relation::identity(m.space()));
  CHECK(m.label(Modality::kKnowledge, "a")->relation == Relation::identity(m.space()));
}

TEST_CASE("constant visibility with identity bias believes everything reachable") {
  const Model m = load_model(R"({"states": ["s0", "s1"], "types": {"T1": ["s0"]},
      "functions": {"f1": {"domain": "S", "codomain": "T1", "map": {"s0": "s0", "s1": "s0"}}},
      "belief_labels": {"a": ["f1", "id_T1"]}, "valuation": {"p": []}})")
                      .value();
  CHECK(m.label(Modality::kBelief, "a")->relation == Relation::full(m.space()));
  CHECK(m.signature().visibility_names.count("f1") == 1);
}

TEST_CASE("declared bias names must be idempotent") {
  const char* doc = R"({"states": ["s0", "s1"],
      "functions": {"g1": {"kind": "G", "domain": "S", "codomain": "S", "map": {"s0": "s1", "s1": "%s"}}},
      "belief_labels": {"a": ["id_S", "id_S"]}, "valuation": {"p": []}})";
  auto with = [&](const char* target) {
    std::string text(doc);
    text.replace(text.find("%s"), 2, target);
    return load_model(text);
  };
  CHECK(with("s1").ok());
  auto bad = with("s0");
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.has(model_error::kNonIdempotentBias));
  CHECK(bad.diagnostics().front().witness == std::vector<std::string>{"s0"});
}

TEST_CASE("function names resolve: identities, dotted composites, explicit composites") {
  const Model m = load_model(R"({"states": ["0", "1"], "types": {"T": ["0"]},
      "functions": {
        "f": {"domain": "S", "codomain": "T", "map": {"0": "0", "1": "0"}},
        "h": {"kind": "G", "domain": "T", "codomain": "T", "map": {"0": "0"}},
        "hf": {"compose": ["h", "f"]}
      },
      "belief_labels": {"a": ["h.f", "id_T"], "b": ["hf", "h"]}, "valuation": {"p": ["1"]}})")
                      .value();
  const Instantiation& inst = m.instantiation();
  CHECK(inst.interpret("id_S").value().function == StateFunction::identity(m.space()));
  CHECK(inst.interpret("h.f").value().function == StateFunction::total(m.space(), {0, 0}));
  CHECK(inst.interpret("h.id_T").value().function == inst.interpret("h").value().function);
  CHECK(inst.interpret("hf").value().function == inst.interpret("h.f").value().function);
  CHECK_FALSE(inst.interpret("f.h").ok());
  CHECK(inst.interpret("nope").has(model_error::kUnknownName));

  // composition of interpretations for every declared name pair that types
  for (const auto& [outer, tf_outer] : inst.functions()) {
    for (const auto& [inner, tf_inner] : inst.functions()) {
      if (tf_inner.type.codomain != tf_outer.type.domain) continue;
      auto dotted = inst.interpret(outer + "." + inner);
      REQUIRE(dotted.ok());
      CHECK(dotted->function == compose(tf_outer.function, tf_inner.function));
    }
  }
}

TEST_CASE("loader diagnostics") {
  auto code_of = [](const std::string& text) {
    auto m = load_model(text);
    return m.ok() ? std::string("ok") : m.diagnostics().front().code;
  };
  CHECK(code_of("{") == model_error::kMalformed);
  CHECK(code_of("[]") == model_error::kMalformed);
  CHECK(code_of(R"({"states": ["a"], "valuation": {}})") == model_error::kNoAtoms);
  CHECK(code_of(R"({"states": ["a"], "valuation": {"p": ["zz"]}})") == model_error::kUnknownState);
  CHECK(code_of(R"({"states": ["a"], "belief_labels": {"x": ["f", "id_S"]}, "valuation": {"p": []}})") ==
        model_error::kUnknownName);
  CHECK(code_of(R"({"states": ["a", "b"], "types": {"T": ["a"]},
      "functions": {"f": {"kind": "F", "domain": "T", "codomain": "S", "map": {"a": "b"}}},
      "valuation": {"p": []}})") == model_error::kTypeMismatch);
  CHECK(code_of(R"({"states": ["a", "b"], "types": {"T": ["a"]},
      "functions": {"f": {"domain": "T", "codomain": "S", "map": {"a": "b"}}},
      "valuation": {"p": []}})") == model_error::kNonIdempotentBias);
  CHECK(code_of(R"({"states": ["a", "b"],
      "functions": {"f": {"domain": "S", "codomain": "S", "map": {"a": "b"}}},
      "valuation": {"p": []}})") == model_error::kPartialFunction);
  CHECK(code_of(R"({"states": ["a", "b"],
      "functions": {"id_S": {"domain": "S", "codomain": "S", "map": {"a": "b", "b": "b"}}},
      "valuation": {"p": []}})") == model_error::kIdentityOverridden);
  CHECK(code_of(R"({"states": ["a", "b"], "types": {"T": ["a"]},
      "functions": {"f": {"domain": "S", "codomain": "S", "map": {"a": "a", "b": "b"}}},
      "belief_labels": {"x": ["f", "id_T"]}, "valuation": {"p": []}})") == model_error::kTypeMismatch);
  CHECK(code_of(R"({"states": ["a"], "valuation": {"false": []}})") == model_error::kBadName);
}

TEST_CASE("a label whose bias leaves the visible part is rejected") {
  auto m = load_model(R"({"states": ["a", "b"],
      "functions": {"f": {"domain": "S", "codomain": "S", "map": {"a": "a", "b": "a"}},
                    "g": {"kind": "G", "domain": "S", "codomain": "S", "map": {"a": "b", "b": "b"}}},
      "belief_labels": {"x": ["f", "g"]}, "valuation": {"p": []}})");
  REQUIRE_FALSE(m.ok());
  CHECK(m.has(model_error::kInvalidLabelPair));
}

TEST_CASE("serialize and reload gives an equal model") {
  const Model m = load_model_file(data("biased.json")).value();
  const std::string text = serialize_model(m);
  const Model again = load_model(text).value();
  CHECK(again == m);
  CHECK(serialize_model(again) == text);
}

TEST_CASE("random models round-trip and carry KD45 and S5 relations") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto generated = oracle::random_model(rng);
    const Model m = load_model(generated.json).value();
    for (const auto& [agent, b] : m.belief_labels()) REQUIRE(classify(b.relation).kd45());
    for (const auto& [agent, k] : m.knowledge_labels()) REQUIRE(classify(k.relation).equivalence);
    REQUIRE(load_model(serialize_model(m)).value() == m);
  }
}

TEST_CASE("override_relation replaces one label") {
  Model m = load_model_file(data("biased.json")).value();
  const Relation empty(m.space());
  m.override_relation(Modality::kBelief, "a", empty);
  CHECK(m.label(Modality::kBelief, "a")->relation == empty);
  CHECK(m.label(Modality::kBelief, "a")->overridden);
  CHECK_THROWS_AS(m.override_relation(Modality::kBelief, "zz", empty), std::out_of_range);
  CHECK_THROWS_AS(m.override_relation(Modality::kBelief, "a", Relation(StateSpace::numbered(2))), SpaceMismatch);
}

TEST_CASE("relation files") {
  auto r = load_relation(R"({"states": ["0", "1"], "pairs": [["0", "1"], ["1", "1"]]})").value();
  CHECK(r.size() == 2);
  CHECK(load_relation(serialize_relation(r)).value() == r);
  CHECK_FALSE(load_relation(R"({"states": ["0"], "pairs": [["0", "9"]]})").ok());
  CHECK_FALSE(load_relation(R"({"pairs": []})").ok());
}
