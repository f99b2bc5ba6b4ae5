#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "pf/bipartite_paths.hpp"
#include "pf/common.hpp"

using namespace pf;

namespace {

AuxPathSystem expect_system(const AuxiliaryBipartite& aux) {
  auto out = construct(aux);
  REQUIRE(std::holds_alternative<AuxPathSystem>(out));
  AuxPathSystem sys = std::get<AuxPathSystem>(out);
  AuxCheck chk = verify_aux_system(aux, sys);
  CAPTURE(chk.violation);
  REQUIRE(chk.ok);
  return sys;
}

HallWitness expect_witness(const AuxiliaryBipartite& aux) {
  auto out = construct(aux);
  REQUIRE(std::holds_alternative<HallWitness>(out));
  HallWitness w = std::get<HallWitness>(out);
  CHECK(verify_hall_witness(aux, w));
  return w;
}

AuxiliaryBipartite random_instance(std::mt19937& rng) {
  AuxiliaryBipartite aux;
  aux.s_count = 1 + static_cast<int>(rng() % 5);
  aux.t_count = 1 + static_cast<int>(rng() % 6);
  std::bernoulli_distribution edge(0.45), bad(0.2);
  for (int s = 0; s < aux.s_count; ++s)
    for (int t = 0; t < aux.t_count; ++t)
      if (edge(rng)) {
        aux.edges.push_back({s, t});
        if (bad(rng)) aux.forbidden.push_back({s, t});
      }
  for (int t = 0; t < aux.t_count; ++t) {
    switch (rng() % 3) {
      case 0: aux.t1.push_back(t); break;
      case 1: aux.t2.push_back(t); break;
      default: break;  // unconstrained
    }
  }
  return aux;
}

}  // namespace

TEST_CASE("single matching edge") {
  AuxiliaryBipartite aux;
  aux.s_count = 1;
  aux.t_count = 1;
  aux.edges = {{0, 0}};
  aux.t1 = {0};
  AuxPathSystem sys = expect_system(aux);
  REQUIRE(sys.paths.size() == 1);
  CHECK(sys.paths[0].shape == AuxShape::I);
  REQUIRE(sys.paths[0].nodes.size() == 2);
  CHECK(!sys.paths[0].nodes[0].on_t);
  CHECK(sys.paths[0].nodes[1].on_t);
}

TEST_CASE("minimal long path through two t2 nodes") {
  AuxiliaryBipartite aux;
  aux.s_count = 1;
  aux.t_count = 2;
  aux.edges = {{0, 0}, {0, 1}};
  aux.t2 = {0, 1};
  AuxPathSystem sys = expect_system(aux);
  REQUIRE(sys.paths.size() == 1);
  const AuxPath& p = sys.paths[0];
  CHECK(p.shape == AuxShape::II);
  REQUIRE(p.nodes.size() == 3);
  CHECK(p.nodes[0] == AuxNode{true, 0});
  CHECK(p.nodes[1] == AuxNode{false, 0});
  CHECK(p.nodes[2] == AuxNode{true, 1});
}

TEST_CASE("forbidden edges block long paths but not matching edges") {
  // covering an S-node against unlabeled T may ride a forbidden edge: the
  // result is a 2-node path, which tolerates it
  AuxiliaryBipartite aux;
  aux.s_count = 1;
  aux.t_count = 1;
  aux.edges = {{0, 0}};
  aux.forbidden = {{0, 0}};
  CHECK(brute_force_hypotheses(aux));
  AuxPathSystem sys = expect_system(aux);
  CHECK(sys.paths.size() == 1);
  CHECK(sys.paths[0].shape == AuxShape::I);

  // a t1-node, by contrast, must be matched over clean edges, because its
  // pair may later be spliced into a long path
  AuxiliaryBipartite t1bad;
  t1bad.s_count = 1;
  t1bad.t_count = 1;
  t1bad.edges = {{0, 0}};
  t1bad.forbidden = {{0, 0}};
  t1bad.t1 = {0};
  CHECK(!brute_force_hypotheses(t1bad));
  HallWitness wt1 = expect_witness(t1bad);
  CHECK(wt1.side == WitnessSide::T_SIDE);

  // and a t2 pair reachable only through a forbidden edge fails
  AuxiliaryBipartite bad;
  bad.s_count = 1;
  bad.t_count = 2;
  bad.edges = {{0, 0}, {0, 1}};
  bad.forbidden = {{0, 0}};
  bad.t2 = {0, 1};
  CHECK(!brute_force_hypotheses(bad));
  HallWitness w = expect_witness(bad);
  CHECK(w.side == WitnessSide::T_SIDE);
}

TEST_CASE("hall failures on either side") {
  AuxiliaryBipartite s_side;
  s_side.s_count = 2;
  s_side.t_count = 1;
  s_side.edges = {{0, 0}, {1, 0}};
  HallWitness ws = expect_witness(s_side);
  CHECK(ws.side == WitnessSide::S_SIDE);
  CHECK(ws.neighborhood_size < static_cast<int>(ws.nodes.size()));
  CHECK(!brute_force_hypotheses(s_side));

  AuxiliaryBipartite t_side;
  t_side.s_count = 1;
  t_side.t_count = 2;
  t_side.edges = {{0, 0}, {0, 1}};
  t_side.t1 = {0, 1};
  HallWitness wt = expect_witness(t_side);
  CHECK(wt.side == WitnessSide::T_SIDE);
  CHECK(Rational(wt.neighborhood_size) < wt.required);
  CHECK(!brute_force_hypotheses(t_side));

  // an isolated t1 node is the smallest T-side failure
  AuxiliaryBipartite isolated;
  isolated.s_count = 1;
  isolated.t_count = 1;
  isolated.t1 = {0};
  HallWitness wi = expect_witness(isolated);
  CHECK(wi.side == WitnessSide::T_SIDE);
  CHECK(wi.nodes == std::vector<int>{0});
}

TEST_CASE("unconstrained t nodes may stay uncovered") {
  AuxiliaryBipartite aux;
  aux.s_count = 1;
  aux.t_count = 3;
  aux.edges = {{0, 0}, {0, 1}, {0, 2}};
  aux.t1 = {1};
  AuxPathSystem sys = expect_system(aux);
  std::set<int> covered;
  for (const AuxPath& p : sys.paths)
    for (const AuxNode& n : p.nodes)
      if (n.on_t) covered.insert(n.id);
  CHECK(covered.count(1) == 1);
}

TEST_CASE("chains splice through already-covered components") {
  // t2 nodes 0..2 share s nodes so the engine must splice matching edges
  // into one long path: t0-s0-t1-s1-t2
  AuxiliaryBipartite aux;
  aux.s_count = 2;
  aux.t_count = 3;
  aux.edges = {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
  aux.t1 = {1};
  aux.t2 = {0, 2};
  CHECK(brute_force_hypotheses(aux));
  AuxPathSystem sys = expect_system(aux);
  REQUIRE(sys.paths.size() == 1);
  CHECK(sys.paths[0].shape == AuxShape::II);
  CHECK(sys.paths[0].nodes.size() == 5);
}

TEST_CASE("verifier rejects broken systems") {
  AuxiliaryBipartite aux;
  aux.s_count = 2;
  aux.t_count = 3;
  aux.edges = {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
  aux.forbidden = {{0, 1}};
  aux.t1 = {};
  aux.t2 = {0, 1};

  auto check_fails = [&](const AuxPathSystem& sys) {
    CHECK(!verify_aux_system(aux, sys).ok);
  };

  // empty system leaves S uncovered
  check_fails({});

  AuxPathSystem reuse;
  reuse.paths.push_back({AuxShape::I, {{false, 0}, {true, 0}}});
  reuse.paths.push_back({AuxShape::I, {{false, 1}, {true, 1}}});
  AuxPathSystem good = reuse;
  reuse.paths.push_back({AuxShape::I, {{false, 0}, {true, 2}}});
  check_fails(reuse);

  // shape II must not use a forbidden edge
  AuxPathSystem forb;
  forb.paths.push_back({AuxShape::II, {{true, 0}, {false, 0}, {true, 1}}});
  forb.paths.push_back({AuxShape::I, {{false, 1}, {true, 2}}});
  check_fails(forb);

  // shape I with three nodes
  AuxPathSystem fat;
  fat.paths.push_back({AuxShape::I, {{true, 0}, {false, 0}, {true, 1}}});
  fat.paths.push_back({AuxShape::I, {{false, 1}, {true, 2}}});
  check_fails(fat);

  // t2 node in the middle of a long path
  AuxiliaryBipartite mid = aux;
  mid.forbidden = {};
  mid.t1 = {1};
  mid.t2 = {0, 2};
  AuxPathSystem wrong_ends;
  wrong_ends.paths.push_back(
      {AuxShape::II, {{true, 1}, {false, 0}, {true, 0}}});
  wrong_ends.paths.push_back({AuxShape::I, {{false, 1}, {true, 2}}});
  CHECK(!verify_aux_system(mid, wrong_ends).ok);

  // non-adjacent consecutive nodes
  AuxPathSystem gap;
  gap.paths.push_back({AuxShape::I, {{false, 0}, {true, 2}}});
  gap.paths.push_back({AuxShape::I, {{false, 1}, {true, 1}}});
  CHECK(!verify_aux_system(aux, gap).ok);

  // the honest system passes
  CHECK(verify_aux_system(aux, good).ok);
}

TEST_CASE("witness verifier recomputes both sides") {
  AuxiliaryBipartite aux;
  aux.s_count = 2;
  aux.t_count = 1;
  aux.edges = {{0, 0}, {1, 0}};

  HallWitness w;
  w.side = WitnessSide::S_SIDE;
  w.nodes = {0, 1};
  w.neighborhood_size = 1;
  w.required = Rational(2);
  CHECK(verify_hall_witness(aux, w));

  HallWitness wrong = w;
  wrong.neighborhood_size = 0;  // stored size must match the recomputation
  CHECK(!verify_hall_witness(aux, wrong));

  HallWitness fine = w;
  fine.nodes = {0};  // |N| = 1 is not below |Y| = 1
  fine.neighborhood_size = 1;
  fine.required = Rational(1);
  CHECK(!verify_hall_witness(aux, fine));
}

TEST_CASE("malformed instances are rejected") {
  AuxiliaryBipartite aux;
  aux.s_count = -1;
  CHECK_THROWS_AS(construct(aux), std::invalid_argument);

  AuxiliaryBipartite range;
  range.s_count = 1;
  range.t_count = 1;
  range.edges = {{0, 1}};
  CHECK_THROWS_AS(construct(range), std::invalid_argument);

  AuxiliaryBipartite dup;
  dup.s_count = 1;
  dup.t_count = 1;
  dup.edges = {{0, 0}, {0, 0}};
  CHECK_THROWS_AS(construct(dup), std::invalid_argument);

  AuxiliaryBipartite phantom;
  phantom.s_count = 1;
  phantom.t_count = 2;
  phantom.edges = {{0, 0}};
  phantom.forbidden = {{0, 1}};
  CHECK_THROWS_AS(construct(phantom), std::invalid_argument);

  AuxiliaryBipartite overlap;
  overlap.s_count = 1;
  overlap.t_count = 1;
  overlap.edges = {{0, 0}};
  overlap.t1 = {0};
  overlap.t2 = {0};
  CHECK_THROWS_AS(construct(overlap), std::invalid_argument);

  AuxiliaryBipartite wide;
  wide.s_count = 19;
  wide.t_count = 1;
  CHECK_THROWS_AS(brute_force_hypotheses(wide), resource_error);
}

TEST_CASE("random instances agree with the exhaustive hypothesis check") {
  std::mt19937 rng(424242);
  int systems = 0, witnesses = 0;
  for (int trial = 0; trial < 400; ++trial) {
    AuxiliaryBipartite aux = random_instance(rng);
    CAPTURE(trial);
    bool feasible = brute_force_hypotheses(aux);
    auto out = construct(aux);
    if (feasible) {
      REQUIRE(std::holds_alternative<AuxPathSystem>(out));
      AuxCheck chk = verify_aux_system(aux, std::get<AuxPathSystem>(out));
      CAPTURE(chk.violation);
      CHECK(chk.ok);
      ++systems;
    } else {
      REQUIRE(std::holds_alternative<HallWitness>(out));
      CHECK(verify_hall_witness(aux, std::get<HallWitness>(out)));
      ++witnesses;
    }
  }
  CHECK(systems > 50);
  CHECK(witnesses > 50);
}
