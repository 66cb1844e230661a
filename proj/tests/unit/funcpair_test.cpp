#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace doxepi;

namespace {

FunctionPair make_pair(SpacePtr s, std::vector<std::size_t> f, std::vector<std::size_t> g) {
  return validate_pair(StateFunction::total(s, std::move(f)), StateFunction::total(s, std::move(g))).value();
}

}  // namespace

TEST_CASE("validate_pair examples") {
  auto s = StateSpace::numbered(2);
  CHECK(validate_pair(StateFunction::identity(s), StateFunction::total(s, {1, 1})).ok());
  CHECK(validate_pair(StateFunction::identity(s), StateFunction::identity(s)).ok());

  auto bad = validate_pair(StateFunction::identity(s), StateFunction::total(s, {1, 0}));
  REQUIRE_FALSE(bad.ok());
  CHECK(bad.has(pair_error::kBiasNotIdempotent));
  CHECK(bad.has(pair_error::kFirstConstraint));
  CHECK_FALSE(bad.has(pair_error::kConstraintDisagreement));
  const auto& d = bad.diagnostics().front();
  CHECK(d.witness == std::vector<std::string>{"0"});
  CHECK(d.message == "g(g(f(0))) = 0 differs from g(f(0)) = 1");
}

TEST_CASE("validate_pair typing errors") {
  auto s = StateSpace::numbered(3);
  StateSet partial(3);
  partial.insert(0);
  auto r = validate_pair(StateFunction(s, partial, {0, StateFunction::kUndefined, StateFunction::kUndefined}),
                         StateFunction::identity(s));
  CHECK(r.has(pair_error::kVisibilityNotTotal));

  // Im(f) = {0, 2}; g undefined at 2.
  r = validate_pair(StateFunction::total(s, {0, 0, 2}), StateFunction(s, partial, {0, StateFunction::kUndefined,
                                                                                     StateFunction::kUndefined}));
  CHECK(r.has(pair_error::kBiasUndefined));

  // g leaves Im(f).
  r = validate_pair(StateFunction::total(s, {0, 0, 2}), StateFunction::total(s, {1, 1, 1}));
  CHECK(r.has(pair_error::kBiasNotClosed));
}

TEST_CASE("both defining constraints agree on every well-typed pair up to three states") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto s = StateSpace::numbered(n);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    for (std::size_t fc = 0; fc < total; ++fc) {
      std::vector<std::size_t> f(n);
      for (std::size_t i = 0, c = fc; i < n; ++i, c /= n) f[i] = c % n;
      for (std::size_t gc = 0; gc < total; ++gc) {
        std::vector<std::size_t> g(n);
        for (std::size_t i = 0, c = gc; i < n; ++i, c /= n) g[i] = c % n;
        auto r = validate_pair(StateFunction::total(s, f), StateFunction::total(s, g));
        REQUIRE_FALSE(r.has(pair_error::kConstraintDisagreement));
      }
    }
  }
}

TEST_CASE("doxastic and epistemic examples") {
  auto s2 = StateSpace::numbered(2);
  const FunctionPair biased = make_pair(s2, {0, 1}, {1, 1});
  CHECK(doxastic(biased) == Relation::from_pairs(s2, {{0, 1}, {1, 1}}));
  CHECK(epistemic(biased) == Relation::full(s2));
  CHECK_FALSE(is_unbiased(biased));

  auto s3 = StateSpace::numbered(3);
  StateSet zero(3);
  zero.insert(0);
  const FunctionPair constant =
      validate_pair(StateFunction::constant(s3, 0), StateFunction::identity(s3, zero)).value();
  CHECK(doxastic(constant) == Relation::full(s3));
  CHECK(epistemic(constant) == Relation::full(s3));
  CHECK(is_unbiased(constant));

  const FunctionPair id = make_pair(s3, {0, 1, 2}, {0, 1, 2});
  CHECK(doxastic(id) == Relation::identity(s3));
  CHECK(epistemic(id) == Relation::identity(s3));
  CHECK(is_unbiased(id));
}

TEST_CASE("random validated pairs: constructions match the oracle and the frame properties hold") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1500; ++i) {
    const std::size_t n = 1 + rng() % 8;
    auto s = StateSpace::numbered(n);
    const oracle::RawPair raw = oracle::random_pair(n, rng);
    const FunctionPair pair = oracle::to_pair(s, raw);
    const Relation d = doxastic(pair);
    const Relation e = epistemic(pair);

    REQUIRE(oracle::to_matrix(d) == oracle::doxastic(raw));
    REQUIRE(oracle::to_matrix(e) == oracle::epistemic(raw));
    REQUIRE(classify(d).kd45());
    REQUIRE(classify(e).equivalence);
    REQUIRE(d.is_subset_of(e));
    REQUIRE(e == smallest_equivalence(d));

    const bool symmetric = classify(d).symmetric;
    REQUIRE(symmetric == is_unbiased(pair));
    REQUIRE(symmetric == (d == e));
    REQUIRE(is_unbiased(pair) == oracle::unbiased(raw));
  }
}

TEST_CASE("identity visibility gives a functional doxastic relation, the graph of g") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    auto s = StateSpace::numbered(n);
    const oracle::RawPair raw = oracle::random_identity_visibility_pair(n, rng);
    const FunctionPair pair = oracle::to_pair(s, raw);
    const Relation d = doxastic(pair);
    REQUIRE(classify(d).functional);
    REQUIRE(d == Relation::graph(pair.bias()));
  }
}

TEST_CASE("raw constructions ignore pair guarantees") {
  auto s = StateSpace::numbered(3);
  // g is a 3-cycle: not idempotent, still a function.
  const StateFunction g = StateFunction::total(s, {1, 2, 0});
  CHECK(doxastic_of(StateFunction::identity(s), g) == Relation::graph(g));
  CHECK(epistemic_of(StateFunction::identity(s), g) == Relation::full(s));
}
