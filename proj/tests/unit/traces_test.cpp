#include "doctest.h"
#include "oracles.hpp"

using namespace doxepi;

namespace {

std::size_t state(const TraceSpace& ts, const char* name) { return ts.space()->index_of(name).value(); }

}  // namespace

TEST_CASE("trace spaces are enumerated by length then position") {
  const TraceSpace ts = TraceSpace::numbered(2, 2);
  CHECK(ts.space()->names() == std::vector<std::string>{"0", "0.1", "0.2", "0.1.1", "0.1.2", "0.2.1", "0.2.2"});
  for (std::size_t agents = 1; agents <= 3; ++agents) {
    for (std::size_t depth = 0; depth <= 4; ++depth) {
      std::size_t expected = 0, width = 1;
      for (std::size_t k = 0; k <= depth; ++k, width *= agents) expected += width;
      const TraceSpace t = TraceSpace::numbered(agents, depth);
      REQUIRE(t.size() == expected);
      for (std::size_t s = 0; s < t.size(); ++s) REQUIRE(t.index_of(t.actions(s)) == s);
    }
  }
  CHECK(TraceSpace::numbered(3, 4).size() == 121);
  CHECK_THROWS_AS(TraceSpace({}, 1), std::invalid_argument);
  CHECK_THROWS_AS(TraceSpace({"a", "a"}, 1), std::invalid_argument);
  CHECK_THROWS_AS(TraceSpace({"a.b"}, 1), std::invalid_argument);
}

TEST_CASE("projection") {
  const TraceSpace ts = TraceSpace::numbered(2, 3);
  CHECK(project(ts, "1", state(ts, "0.1.2")) == state(ts, "0.1"));
  CHECK(project(ts, "1", 0) == 0);
  CHECK(project(ts, "2", state(ts, "0.2.2")) == state(ts, "0.2.2"));
  for (const auto& a : ts.agents()) {
    for (std::size_t s = 0; s < ts.size(); ++s) {
      const std::size_t p = project(ts, a, s);
      REQUIRE(ts.length(p) <= ts.length(s));
      REQUIRE(project(ts, a, p) == p);
    }
  }
}

TEST_CASE("indistinguishability examples") {
  const TraceSpace d1 = TraceSpace::numbered(2, 1);
  CHECK(indistinguishability(d1, "1") ==
        Relation::from_pairs(d1.space(), {{0, 0}, {0, 2}, {2, 0}, {2, 2}, {1, 1}}));
  const TraceSpace d0 = TraceSpace::numbered(2, 0);
  CHECK(indistinguishability(d0, "1") == Relation::identity(d0.space()));
  const TraceSpace single = TraceSpace::numbered(1, 3);
  CHECK(indistinguishability(single, "1") == Relation::identity(single.space()));
}

TEST_CASE("indistinguishability correspondence, three-way") {
  for (std::size_t agents = 1; agents <= 3; ++agents) {
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      const TraceSpace ts = TraceSpace::numbered(agents, depth);
      for (const auto& a : ts.agents()) {
        const IndistReport r = verify_indist_correspondence(ts, a);
        REQUIRE(r.pair_valid);
        REQUIRE(r.kernel_matches);
        REQUIRE(r.epistemic_matches);
        REQUIRE(r.missing.empty());
        REQUIRE(r.extra.empty());
        REQUIRE(classify(indistinguishability(ts, a)).equivalence);
      }
    }
  }
  const TraceSpace single = TraceSpace::numbered(1, 3);
  CHECK(epistemic(validate_pair(projection(single, "1"), StateFunction::identity(single.space())).value()) ==
        Relation::identity(single.space()));
}

TEST_CASE("action term semantics") {
  const TraceSpace ts = TraceSpace::numbered(1, 1);
  CHECK(pdl_relation(ts, *act::prim("1")) == Relation::from_pairs(ts.space(), {{0, 1}}));
  const TraceSpace chain = TraceSpace::numbered(1, 4);
  CHECK(pdl_relation(chain, *act::power(act::prim("1"), 0)) == Relation::identity(chain.space()));
  CHECK(pdl_relation(chain, *act::power(act::prim("1"), 2)) ==
        Relation::from_pairs(chain.space(), {{0, 2}, {1, 3}, {2, 4}}));
  const auto a = act::prim("1");
  CHECK(pdl_relation(chain, *act::star(act::unite(a, act::converse(a)))) == Relation::full(chain.space()));
  CHECK(pdl_relation(chain, *act::id()) == Relation::identity(chain.space()));
  CHECK(render(*act::star(act::unite(a, act::converse(a)))) == "((a_1 u (a_1)^-1))*");
  CHECK_THROWS_AS(pdl_relation(chain, *act::prim("9")), std::out_of_range);
}

TEST_CASE("dynamic logic correspondence") {
  for (std::size_t agents = 1; agents <= 3; ++agents) {
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      const TraceSpace ts = TraceSpace::numbered(agents, depth);
      for (const auto& a : ts.agents()) {
        const PdlReport r = verify_pdl_correspondence(ts, a);
        REQUIRE(r.interior_equal);
        REQUIRE(r.interior_differences.empty());
      }
    }
  }
  const PdlReport d0 = verify_pdl_correspondence(TraceSpace::numbered(1, 0), "1");
  CHECK(d0.left == Relation::identity(d0.left.space()));
  CHECK(d0.right == Relation::identity(d0.right.space()));
}

TEST_CASE("a primitive action is not an idempotent bias") {
  const TraceSpace ts = TraceSpace::numbered(2, 3);
  for (const auto& a : ts.agents()) {
    auto r = validate_pair(StateFunction::identity(ts.space()), action_function(ts, a));
    REQUIRE_FALSE(r.ok());
    CHECK(r.has(pair_error::kBiasNotIdempotent));
  }
}

TEST_CASE("the action equivalence is reproduced by a synthesized projection") {
  const TraceSpace ts = TraceSpace::numbered(2, 3);
  for (const auto& a : ts.agents()) {
    const Relation target = verify_pdl_correspondence(ts, a).left;
    const FunctionPair p = from_equivalence(target).value();
    CHECK(epistemic(p) == target);
  }
}
