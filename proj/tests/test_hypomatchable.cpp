#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "pf/generators.hpp"
#include "pf/graph.hpp"
#include "pf/hypomatchable.hpp"
#include "pf/matching.hpp"
#include "pf/rational.hpp"

using namespace pf;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph gen(const std::string& text) { return generate(parse_family_spec(text)).graph; }

Matching pm_minus(const Graph& g, int v) {
  InducedGraph rest = induced(g, complement_set(g, {v}));
  Matching local = maximum_matching(rest.graph);
  Matching out;
  for (auto [a, b] : local.edges)
    out.edges.push_back({rest.original_ids[a], rest.original_ids[b]});
  return out;
}

// odd order, from v, g-edges, matching edges at odd edge positions, and the
// unused matching edges stay clear of the path
void check_alternating(const Graph& g, const std::vector<int>& p,
                       const Matching& m, int v) {
  REQUIRE(p.size() % 2 == 1);
  CHECK(p.front() == v);
  std::set<int> distinct(p.begin(), p.end());
  CHECK(distinct.size() == p.size());
  for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
  auto mate = m.mates(g.vertex_count());
  for (std::size_t i = 1; i + 1 < p.size(); i += 2) CHECK(mate[p[i]] == p[i + 1]);
  int off = 0;
  for (auto [a, b] : m.edges) {
    bool on_a = distinct.count(a) > 0, on_b = distinct.count(b) > 0;
    CHECK(on_a == on_b);
    if (!on_a) off += 2;
  }
  CHECK(off == g.vertex_count() - static_cast<int>(p.size()));
}

Rational crush_value(const Graph& g, const VertexSet& x) {
  auto cs = census(g, x);
  return Rational(cs.c(1)) + Rational(cs.c(3)) + Rational(2, 3) * Rational(cs.c(5));
}

}  // namespace

TEST_CASE("ear decomposition of small critical graphs") {
  EarDecomposition d = ear_decomposition(cycle(5));
  REQUIRE(d.ears.size() == 1);
  CHECK(d.ears[0].is_cycle);
  CHECK(d.ears[0].edge_size() == 5);
  CHECK(validate_ears(cycle(5), d).ok);
  CHECK(ear_residues(d)[0].size() == 5);

  Graph k1_2k2 = gen("k1sk2:2");
  EarDecomposition d2 = ear_decomposition(k1_2k2);
  CHECK(validate_ears(k1_2k2, d2).ok);
  auto res = ear_residues(d2);
  std::size_t total = 0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    total += res[i].size();
    if (i > 0) CHECK(res[i].size() % 2 == 0);
  }
  CHECK(total == 5);

  EarDecomposition rooted = ear_decomposition(cycle(7), {{2, 3}});
  REQUIRE(!rooted.ears.empty());
  CHECK(rooted.ears[0].is_cycle);
  const auto& first = rooted.ears[0].vertices;
  CHECK(std::count(first.begin(), first.end(), 2) == 1);
  CHECK(std::count(first.begin(), first.end(), 3) == 1);

  CHECK_THROWS_AS(ear_decomposition(path(4)), std::domain_error);
  CHECK_THROWS_AS(ear_decomposition(Graph(1, {})), std::domain_error);
}

TEST_CASE("ear validation rejects broken decompositions") {
  Graph c5 = cycle(5);
  CHECK(!validate_ears(c5, {}).ok);

  EarDecomposition path_first;
  path_first.ears.push_back({{0, 1, 2, 3}, false});
  CHECK(!validate_ears(c5, path_first).ok);

  EarDecomposition even;
  even.ears.push_back({{0, 1, 2, 3}, true});
  CHECK(!validate_ears(c5, even).ok);

  EarDecomposition partial;
  partial.ears.push_back({{0, 1, 2, 3, 4}, true});
  EarDecomposition good = partial;
  CHECK(validate_ears(c5, good).ok);
  partial.ears[0].vertices.pop_back();
  CHECK(!validate_ears(c5, partial).ok);
}

TEST_CASE("residue largeness probe") {
  Graph c7 = cycle(7);
  EarDecomposition d = ear_decomposition(c7);
  CHECK(is_s_large(c7, d, {1}, 5));
  CHECK(is_s_large(c7, d, {1}, 7));
  CHECK_THROWS_AS(is_s_large(c7, d, {}, 5), std::invalid_argument);
  CHECK_THROWS_AS(is_s_large(c7, d, {1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_s_large(c7, d, {1, 9}, 5), std::invalid_argument);
}

TEST_CASE("k1 sk2 recognizer") {
  auto center = k1_sk2_center(gen("k1sk2:3"));
  REQUIRE(center.has_value());
  CHECK(*center == 0);
  CHECK(k1_sk2_center(gen("k1sk2:2")) == 0);
  CHECK(!k1_sk2_center(cycle(7)).has_value());
  CHECK(!k1_sk2_center(complete(3)).has_value());  // s >= 2 only
  CHECK(!k1_sk2_center(complete(9)).has_value());
}

TEST_CASE("classification dispatch") {
  CHECK_THROWS_AS(classify_no_factor(cycle(7), 5), std::invalid_argument);
  CHECK_THROWS_AS(classify_no_factor(path(4), 3), std::domain_error);

  CHECK(classify_no_factor(cycle(3), 3).tag == FamilyTag::SMALL_3_5);
  CHECK(classify_no_factor(cycle(5), 4).tag == FamilyTag::SMALL_3_5);

  CHECK(classify_no_factor(cycle(7), 3).tag == FamilyTag::HAS_FACTOR);
  CHECK(classify_no_factor(complete(9), 3).tag == FamilyTag::HAS_FACTOR);
  FamilyClass g0 = classify_no_factor(gen("k1sk2:3"), 3);
  CHECK(g0.tag == FamilyTag::G0);
  CHECK(g0.s == 3);

  CHECK(classify_no_factor(cycle(7), 4).tag == FamilyTag::ORDER7_NONSPECIAL);
  CHECK(classify_no_factor(gen("k1sk2:3"), 4).tag == FamilyTag::G0);

  CHECK(classify_no_factor(cycle(9), 4).tag == FamilyTag::HAS_FACTOR);
  CHECK(classify_no_factor(complete(11), 4).tag == FamilyTag::HAS_FACTOR);

  struct Row {
    const char* text;
    FamilyTag tag;
  };
  const Row rows[] = {
      {"a1:3,0,0", FamilyTag::G1_MIN_LE1}, {"a1:2,2,2", FamilyTag::G1_MIN_EQ2},
      {"a1:3,3,3", FamilyTag::G1_MIN_GE3}, {"a2p:1,1,1", FamilyTag::G2},
      {"a2pp:1,1,1", FamilyTag::G2},       {"a3p:2", FamilyTag::G3},
      {"a3pp:2", FamilyTag::G3},           {"a4p:1", FamilyTag::G4},
      {"a4pp:1", FamilyTag::G4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.text);
    CHECK(classify_no_factor(gen(r.text), 4).tag == r.tag);
  }

  // K1+4K2 at order 9 matches the blade template with parameters (3,0,0)
  FamilyClass k4 = classify_no_factor(gen("k1sk2:4"), 4);
  CHECK(k4.tag == FamilyTag::G1_MIN_LE1);
  CHECK(k4.s1 == 3);
  CHECK(k4.s2 == 0);

  // parameters come back sorted descending
  FamilyClass canon = classify_no_factor(gen("a1:0,1,2"), 4);
  CHECK(canon.tag == FamilyTag::G1_MIN_LE1);
  CHECK(canon.s1 == 2);
  CHECK(canon.s2 == 1);
  CHECK(canon.s3 == 0);

  CHECK(family_tag_name(FamilyTag::G2) == "G2");
  CHECK(family_tag_name(FamilyTag::HAS_FACTOR) == "HAS_FACTOR");
}

TEST_CASE("crush sets hit their census equalities") {
  Graph g0 = gen("k1sk2:3");
  VertexSet x0 = crush_set(g0, classify_no_factor(g0, 3));
  CHECK(x0 == VertexSet{0, 1, 3, 5});
  CHECK(census(g0, x0).c(1) == static_cast<int>(x0.size()) - 1);

  struct Row {
    const char* text;
    Rational drop;  // value = |X| - drop
    int min_x;
  };
  const Row rows[] = {
      {"a1:3,0,0", Rational(1), 4},    {"a1:2,2,2", Rational(4, 3), 6},
      {"a1:3,3,3", Rational(3), 12},   {"a2pp:1,1,1", Rational(1), 4},
      {"a3p:2", Rational(1), 4},       {"a4pp:1", Rational(1), 4},
  };
  for (const Row& r : rows) {
    CAPTURE(r.text);
    Graph g = gen(r.text);
    FamilyClass cls = classify_no_factor(g, 4);
    VertexSet x = crush_set(g, cls);
    CHECK(crush_value(g, x) == Rational(static_cast<int>(x.size())) - r.drop);
    CHECK(static_cast<int>(x.size()) >= r.min_x);
  }

  CHECK_THROWS_AS(crush_set(cycle(5), classify_no_factor(cycle(5), 3)),
                  std::domain_error);
  CHECK_THROWS_AS(crush_set(cycle(9), classify_no_factor(cycle(9), 4)),
                  std::domain_error);
}

TEST_CASE("alternating path to a target") {
  Graph c5 = cycle(5);
  Matching m = pm_minus(c5, 0);
  for (int w = 0; w < 5; ++w) {
    auto p = alternating_path_to(c5, 0, m, w);
    if (w == 0) {
      CHECK(p == std::vector<int>{0});
    } else {
      check_alternating(c5, p, m, 0);
      CHECK(p.back() == w);
    }
  }

  Graph k7 = complete(7);
  Matching m7 = pm_minus(k7, 3);
  for (int w = 0; w < 7; ++w) {
    auto p = alternating_path_to(k7, 3, m7, w);
    if (w != 3) check_alternating(k7, p, m7, 3);
  }

  CHECK_THROWS_AS(alternating_path_to(c5, 0, Matching{}, 2), std::invalid_argument);
  CHECK_THROWS_AS(alternating_path_to(c5, 0, m, 9), std::invalid_argument);
}

TEST_CASE("long alternating path") {
  Graph c5 = cycle(5);
  auto p = long_alternating_path(c5, 0, pm_minus(c5, 0));
  check_alternating(c5, p, pm_minus(c5, 0), 0);
  CHECK(p.size() >= 5);

  Graph k1_2k2 = gen("k1sk2:2");
  CHECK_THROWS_AS(long_alternating_path(k1_2k2, 0, pm_minus(k1_2k2, 0)),
                  std::domain_error);
  auto pb = long_alternating_path(k1_2k2, 1, pm_minus(k1_2k2, 1));
  check_alternating(k1_2k2, pb, pm_minus(k1_2k2, 1), 1);
  CHECK(pb.size() >= 5);

  Graph k9 = complete(9);
  auto pk = long_alternating_path(k9, 4, pm_minus(k9, 4));
  check_alternating(k9, pk, pm_minus(k9, 4), 4);
  CHECK(pk.size() >= 5);

  CHECK_THROWS_AS(long_alternating_path(cycle(3), 0, pm_minus(cycle(3), 0)),
                  std::domain_error);
}
