#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pf/rational.hpp"

namespace pf {

// Bipartite instance on abstract node ids: S-side 0..s_count-1 and T-side
// 0..t_count-1. t1 and t2 mark the T-nodes that must end up covered.
struct AuxiliaryBipartite {
  int s_count = 0;
  int t_count = 0;
  std::vector<std::pair<int, int>> edges;      // (s, t)
  std::vector<std::pair<int, int>> forbidden;  // subset of edges
  std::vector<int> t1;                         // sorted, disjoint from t2
  std::vector<int> t2;
};

struct AuxNode {
  bool on_t = false;
  int id = 0;
  friend bool operator==(const AuxNode&, const AuxNode&) = default;
};

// Shape I: two nodes, any edge. Shape II: odd node count, no forbidden
// edges, T-nodes in t1 or t2, exactly two t2-nodes and they are the ends.
enum class AuxShape { I, II };

struct AuxPath {
  AuxShape shape = AuxShape::I;
  std::vector<AuxNode> nodes;
};

struct AuxPathSystem {
  std::vector<AuxPath> paths;
};

enum class WitnessSide { S_SIDE, T_SIDE };

// S_SIDE: |N(nodes)| < |nodes| over all edges.
// T_SIDE: |N(nodes)| < |nodes in t1| + (1/2)|nodes in t2| over allowed edges.
struct HallWitness {
  WitnessSide side = WitnessSide::S_SIDE;
  std::vector<int> nodes;
  int neighborhood_size = 0;
  Rational required;
};

struct AuxCheck {
  bool ok = true;
  std::string violation;
};

// Builds a path system covering S and t1 and t2, or a Hall-type witness.
std::variant<AuxPathSystem, HallWitness> construct(const AuxiliaryBipartite& aux);

AuxCheck verify_aux_system(const AuxiliaryBipartite& aux, const AuxPathSystem& sys);

bool verify_hall_witness(const AuxiliaryBipartite& aux, const HallWitness& w);

// Exhaustively tests both Hall-type hypotheses; sides are capped at ~18 nodes.
bool brute_force_hypotheses(const AuxiliaryBipartite& aux);

}  // namespace pf
