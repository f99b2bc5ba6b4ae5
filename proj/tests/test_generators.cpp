#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "pf/generators.hpp"
#include "pf/matching.hpp"

using namespace pf;

namespace {

Graph gen(const std::string& text) { return generate(parse_family_spec(text)).graph; }

bool has_role(const GeneratedGraph& g, const std::string& name) {
  return std::any_of(g.roles.begin(), g.roles.end(),
                     [&](const auto& r) { return r.first == name; });
}

}  // namespace

TEST_CASE("elementary families") {
  Graph k5 = gen("kn:5");
  CHECK(k5.vertex_count() == 5);
  CHECK(k5.edge_count() == 10);

  Graph p9 = gen("pn:9");
  CHECK(p9.vertex_count() == 9);
  CHECK(p9.edge_count() == 8);
  CHECK(p9.adjacent(0, 1));
  CHECK(!p9.adjacent(0, 8));

  Graph c7 = gen("cn:7");
  CHECK(c7.vertex_count() == 7);
  CHECK(c7.edge_count() == 7);
  CHECK(c7.adjacent(0, 6));

  Graph u = graph_disjoint_union(k5, p9);
  CHECK(u.vertex_count() == 14);
  CHECK(u.edge_count() == 18);
  Graph j = graph_join(Graph(1, {}), Graph(2, {}));
  CHECK(j.edge_count() == 2);
}

TEST_CASE("k1 plus s disjoint edges") {
  GeneratedGraph g = generate(parse_family_spec("k1sk2:3"));
  CHECK(g.graph.vertex_count() == 7);
  CHECK(g.graph.edge_count() == 9);
  CHECK(g.graph.degree(0) == 6);
  CHECK(has_role(g, "cutvertex"));
  CHECK(has_role(g, "blade3_b"));
  CHECK(is_factor_critical(g.graph));
}

TEST_CASE("blade families: orders, criticality, roles") {
  struct Row {
    const char* text;
    int n, m;
  };
  const Row rows[] = {
      {"a1:1,0,0", 5, 6},    {"a1:3,0,0", 9, 12},  {"a2p:1,1,1", 9, 11},
      {"a2pp:1,1,1", 9, 14}, {"a3p:2", 9, 11},     {"a3pp:2", 9, 16},
      {"a4p:1", 9, 12},      {"a4pp:1", 9, 15},
  };
  for (const Row& r : rows) {
    CAPTURE(r.text);
    GeneratedGraph g = generate(parse_family_spec(r.text));
    CHECK(g.graph.vertex_count() == r.n);
    CHECK(g.graph.edge_count() == r.m);
    CHECK(is_factor_critical(g.graph));
    CHECK(has_role(g, "u1"));
    CHECK(has_role(g, "u2"));
    CHECK(has_role(g, "u3"));
  }

  CHECK_THROWS_AS(gen("a1:0,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(gen("a2p:1,1,0"), std::invalid_argument);
  CHECK_THROWS_AS(gen("a2p:2,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(gen("a3p:1"), std::invalid_argument);
  CHECK_THROWS_AS(gen("a4p:0"), std::invalid_argument);
}

TEST_CASE("optional edge range") {
  FamilySpec prime = parse_family_spec("a2p:1,1,1");
  auto opts = ranged_optional_edges(prime);
  REQUIRE(opts.size() == 3);

  Graph base = generate(prime).graph;
  for (auto [u, v] : opts) CHECK(!base.adjacent(u, v));

  FamilySpec full = prime;
  full.extra_edge_mask = (1ull << opts.size()) - 1;
  Graph maxed = generate(full).graph;
  CHECK(maxed.edge_count() == base.edge_count() + static_cast<int>(opts.size()));
  for (auto [u, v] : opts) CHECK(maxed.adjacent(u, v));

  // the double-prime endpoint already carries every optional edge
  Graph dprime = generate(parse_family_spec("a2pp:1,1,1")).graph;
  CHECK(dprime.edge_count() == maxed.edge_count());

  FamilySpec one = prime;
  one.extra_edge_mask = 1;
  Graph single = generate(one).graph;
  CHECK(single.edge_count() == base.edge_count() + 1);
  CHECK(single.adjacent(opts[0].first, opts[0].second));

  FamilySpec seeded = prime;
  seeded.extra_edge_seed = 7;
  Graph s1 = generate(seeded).graph;
  Graph s2 = generate(seeded).graph;
  CHECK(s1.edges() == s2.edges());

  FamilySpec both = prime;
  both.extra_edge_mask = 1;
  both.extra_edge_seed = 7;
  CHECK_THROWS_AS(generate(both), std::invalid_argument);
  CHECK_THROWS_AS(ranged_optional_edges(parse_family_spec("kn:4")),
                  std::invalid_argument);
}

TEST_CASE("sharpness family") {
  GeneratedGraph h1 = generate(parse_family_spec("hn:1"));
  CHECK(h1.graph.vertex_count() == 28);  // core K1 plus three order-9 blocks
  CHECK(h1.graph.edge_count() == 75);
  GeneratedGraph h2 = generate(parse_family_spec("hn:2"));
  CHECK(h2.graph.vertex_count() == 47);  // core K2 plus five order-9 blocks

  GeneratedGraph kc = generate(parse_family_spec("kncopies(2,0,cn:5)"));
  CHECK(kc.graph.vertex_count() == 27);  // copies defaults to 2n+1 = 5
  CHECK(kc.graph.edge_count() == 76);
  // every block vertex sees the whole core
  for (int v = 2; v < 27; ++v) CHECK(kc.graph.adjacent(0, v));
}

TEST_CASE("random factor critical") {
  for (int order : {5, 7, 9, 11}) {
    for (std::uint32_t seed = 0; seed < 8; ++seed) {
      Graph g = random_factor_critical(order, seed);
      CHECK(g.vertex_count() == order);
      CHECK(is_factor_critical(g));
    }
  }
  CHECK_THROWS_AS(random_factor_critical(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(random_factor_critical(-3, 1), std::invalid_argument);
}

TEST_CASE("family spec parser") {
  FamilySpec join = parse_family_spec("join(kn:1,union(kn:1,kn:2))");
  CHECK(join.family == Family::JOIN);
  REQUIRE(join.left);
  REQUIRE(join.right);
  CHECK(join.right->family == Family::UNION);
  Graph g = generate(join).graph;
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 4);

  FamilySpec mixed = parse_family_spec("join(a1:1,0,0,kn:3)");
  CHECK(mixed.left->s1 == 1);
  CHECK(mixed.right->n == 3);

  CHECK_THROWS_AS(parse_family_spec("zzz:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("kn:3extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("kn"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("a1:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_family_spec("join(kn:1)"), std::invalid_argument);
}
