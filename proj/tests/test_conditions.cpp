#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "pf/common.hpp"
#include "pf/conditions.hpp"
#include "pf/factor.hpp"
#include "pf/generators.hpp"
#include "pf/graph.hpp"

using namespace pf;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Graph gen(const std::string& text) { return generate(parse_family_spec(text)).graph; }

// reference scan: every subset, full census, no pruning
ConditionReport naive_check(const Graph& g, const ConditionSpec& spec) {
  int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint64_t{1} << v)) x.push_back(v);
    auto cs = census(g, x);
    Rational lhs;
    for (const auto& [order, w] : spec.weights) lhs += w * Rational(cs.c(order));
    Rational rhs = spec.slope * Rational(static_cast<int>(x.size())) + spec.offset;
    if (rhs < lhs) {
      ConditionReport rep;
      rep.verdict = Verdict::VIOLATED;
      rep.witness = make_certificate(g, x, spec.weights, spec.slope, spec.offset);
      rep.subsets_checked = mask + 1;
      return rep;
    }
  }
  return {Verdict::HOLDS_EXHAUSTIVE, std::nullopt, std::uint64_t{1} << n};
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph(n, e);
}

}  // namespace

TEST_CASE("preset shapes") {
  ConditionSpec a = preset_condition("thmA");
  CHECK(a.weights == std::map<int, Rational>{{1, Rational(1)}});
  CHECK(a.slope == Rational(2));
  CHECK(a.offset == Rational(0));

  ConditionSpec b = preset_condition("thmB");
  CHECK(b.weights.at(3) == Rational(2, 3));
  CHECK(b.slope == Rational(4, 3));
  CHECK(b.offset == Rational(1, 3));

  ConditionSpec t13 = preset_condition("thm13");
  CHECK(t13.weights.at(1) == Rational(1));
  CHECK(t13.weights.at(3) == Rational(1, 3));
  CHECK(t13.weights.at(5) == Rational(1, 3));
  CHECK(t13.slope == Rational(2, 3));

  ConditionSpec t14 = preset_condition("thm14");
  CHECK(t14.weights.at(3) == Rational(1));
  CHECK(t14.weights.at(5) == Rational(2, 3));
  CHECK(t14.weights.at(7) == Rational(1, 3));

  ConditionSpec l61 = preset_condition("lemma61");
  CHECK(l61.weights.size() == 4);
  CHECK(l61.offset == Rational(1, 3));

  ConditionSpec conj = preset_condition("conjecture:3");
  CHECK(conj.weights == std::map<int, Rational>{
                            {1, Rational(1)}, {3, Rational(1)}, {5, Rational(1)}});
  CHECK(conj.slope == Rational(18, 27));
  CHECK(conj.offset == Rational(0));

  CHECK_THROWS_AS(preset_condition("thmC"), std::invalid_argument);
  CHECK_THROWS_AS(preset_condition("conjecture:0"), std::invalid_argument);
  CHECK_THROWS_AS(preset_condition("conjecture:x"), std::invalid_argument);
  CHECK_THROWS_AS(preset_condition("conjecture:3x"), std::invalid_argument);

  ConditionSpec nec = necessary_condition(3);
  CHECK(nec.weights == std::map<int, Rational>{
                           {1, Rational(3)}, {3, Rational(2)}, {5, Rational(1)}});
  CHECK(nec.slope == Rational(4));
  CHECK_THROWS_AS(necessary_condition(0), std::invalid_argument);

  CHECK(verdict_name(Verdict::VIOLATED) == "VIOLATED");
  CHECK(verdict_name(Verdict::HOLDS_SAMPLED) == "HOLDS_SAMPLED");
}

TEST_CASE("exhaustive verdicts on hand graphs") {
  // the complete graph swallows everything
  ConditionReport kn = check_condition(complete(7), preset_condition("thm13"),
                                       ExhaustiveMode{});
  CHECK(kn.verdict == Verdict::HOLDS_EXHAUSTIVE);
  CHECK(kn.subsets_checked == 128);
  CHECK(!kn.witness.has_value());

  // C7 fails the sufficient condition on an independent set of size 4,
  // even though the cycle itself has a factor
  ConditionReport c7 = check_condition(cycle(7), preset_condition("thm13"),
                                       ExhaustiveMode{});
  REQUIRE(c7.verdict == Verdict::VIOLATED);
  REQUIRE(c7.witness.has_value());
  CHECK(c7.witness->x == VertexSet{0, 1, 3, 5});
  CHECK(c7.witness->lhs == Rational(3));
  CHECK(c7.witness->rhs == Rational(8, 3));
  CHECK(c7.subsets_checked == 44);  // mask of {0,1,3,5} plus one
  CHECK(verify_certificate(cycle(7), *c7.witness));

  ConditionReport star = check_condition(star3(), preset_condition("thm13"),
                                         ExhaustiveMode{});
  REQUIRE(star.verdict == Verdict::VIOLATED);
  CHECK(star.witness->x == VertexSet{0});
  CHECK(star.witness->lhs == Rational(3));
  CHECK(star.witness->rhs == Rational(2, 3));
  CHECK(star.subsets_checked == 2);

  // K1: the empty set already yields an isolated vertex
  ConditionReport lone = check_condition(Graph(1, {}), preset_condition("thmA"),
                                         ExhaustiveMode{});
  CHECK(lone.verdict == Verdict::VIOLATED);
  CHECK(lone.witness->x.empty());
  CHECK(lone.subsets_checked == 1);

  ConditionReport empty = check_condition(Graph(0, {}), preset_condition("thmA"),
                                          ExhaustiveMode{});
  CHECK(empty.verdict == Verdict::HOLDS_EXHAUSTIVE);
  CHECK(empty.subsets_checked == 1);
}

TEST_CASE("necessary condition") {
  CHECK(check_necessary(path(7), 3, ExhaustiveMode{}).verdict ==
        Verdict::HOLDS_EXHAUSTIVE);
  CHECK(check_necessary(complete(2), 3, ExhaustiveMode{}).verdict ==
        Verdict::HOLDS_EXHAUSTIVE);

  ConditionReport star = check_necessary(star3(), 3, ExhaustiveMode{});
  REQUIRE(star.verdict == Verdict::VIOLATED);
  CHECK(star.witness->x == VertexSet{0});
  CHECK(star.witness->lhs == Rational(9));
  CHECK(star.witness->rhs == Rational(4));
}

TEST_CASE("spec validation and budget") {
  ConditionSpec even;
  even.weights[2] = Rational(1);
  CHECK_THROWS_AS(check_condition(path(3), even, ExhaustiveMode{}),
                  std::invalid_argument);

  ConditionSpec negative;
  negative.weights[1] = Rational(-1);
  CHECK_THROWS_AS(check_condition(path(3), negative, ExhaustiveMode{}),
                  std::invalid_argument);

  CHECK_THROWS_AS(
      check_condition(path(23), preset_condition("thmA"), ExhaustiveMode{}),
      resource_error);
  CHECK_NOTHROW(
      check_condition(path(23), preset_condition("thmA"), ExhaustiveMode{23}));
}

TEST_CASE("exhaustive matches the naive scan") {
  std::mt19937 gen_rng(77);
  const char* presets[] = {"thmA", "thmB", "thm13", "thm14", "lemma61"};
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(gen_rng() % 10);
    Graph g = random_graph(n, 0.2 + 0.1 * (trial % 7), gen_rng);
    ConditionSpec spec = preset_condition(presets[trial % 5]);
    ConditionReport fast = check_condition(g, spec, ExhaustiveMode{});
    ConditionReport slow = naive_check(g, spec);
    CAPTURE(trial);
    REQUIRE(fast.verdict == slow.verdict);
    CHECK(fast.subsets_checked == slow.subsets_checked);
    if (fast.verdict == Verdict::VIOLATED) {
      CHECK(fast.witness->x == slow.witness->x);
      CHECK(fast.witness->lhs == slow.witness->lhs);
    }
  }
}

TEST_CASE("sampled mode") {
  // the structured candidates alone find the star violation (closed
  // neighborhood of the center) even with zero random trials
  ConditionReport star = check_condition(star3(), preset_condition("thm13"),
                                         SampledMode{0, 1});
  CHECK(star.verdict == Verdict::VIOLATED);

  ConditionReport kn = check_condition(complete(9), preset_condition("thm13"),
                                       SampledMode{500, 9});
  CHECK(kn.verdict == Verdict::HOLDS_SAMPLED);

  // fixed seeds reproduce bit for bit
  ConditionReport a = check_condition(cycle(11), preset_condition("thm13"),
                                      SampledMode{200, 5});
  ConditionReport b = check_condition(cycle(11), preset_condition("thm13"),
                                      SampledMode{200, 5});
  CHECK(a.verdict == b.verdict);
  CHECK(a.subsets_checked == b.subsets_checked);
  if (a.witness) {
    REQUIRE(b.witness);
    CHECK(a.witness->x == b.witness->x);
  }

  // sampling is sound: any violation it reports recomputes
  if (a.verdict == Verdict::VIOLATED)
    CHECK(verify_certificate(cycle(11), *a.witness));

  // the sharpness graph satisfies its tight bound
  ConditionReport h1 = check_condition(gen("hn:1"), preset_condition("lemma61"),
                                       SampledMode{2000, 3});
  CHECK(h1.verdict == Verdict::HOLDS_SAMPLED);
  CHECK(h1.subsets_checked >= 2000);
}

TEST_CASE("implication chain") {
  CrossCheckReport c9 = cross_check(cycle(9), 4);
  CHECK(c9.consistent);
  CHECK(c9.builder_factor);
  CHECK(c9.oracle_factor);
  CHECK(c9.necessary == Verdict::HOLDS_EXHAUSTIVE);

  CrossCheckReport g0 = cross_check(gen("k1sk2:3"), 3);
  CHECK(g0.consistent);
  CHECK(g0.sufficient == Verdict::VIOLATED);
  CHECK(!g0.builder_factor);
  CHECK(!g0.oracle_factor);

  CrossCheckReport star = cross_check(star3(), 3);
  CHECK(star.consistent);
  CHECK(!star.oracle_factor);
  CHECK(star.necessary == Verdict::VIOLATED);

  CrossCheckReport k8 = cross_check(complete(8), 3);
  CHECK(k8.consistent);
  CHECK(k8.builder_factor);

  CHECK_THROWS_AS(cross_check(path(15), 3), resource_error);
  CHECK_THROWS_AS(cross_check(path(4), 5), std::invalid_argument);
}
