#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pf/graph.hpp"

namespace pf {

// Matching as (u, v) pairs with u < v, sorted. covers()/mate() work off a
// dense mate array built on demand.
struct Matching {
  std::vector<std::pair<int, int>> edges;

  int size() const { return static_cast<int>(edges.size()); }
  // mate array for a graph on n vertices; -1 = exposed
  std::vector<int> mates(int n) const;
};

// Maximum matching in a general graph (blossom contraction, O(V^3)).
// Deterministic: greedy seeding and augmenting searches scan ids ascending.
Matching maximum_matching(const Graph& g);

// m is a valid matching of g covering exactly the vertices `covered`.
bool matching_covers_exactly(const Graph& g, const Matching& m, const VertexSet& covered);

// |V| odd and g - v has a perfect matching for every v.
bool is_factor_critical(const Graph& g);

// For |V| even: nullopt if g has a perfect matching, else a set S with
// c_odd(g - S) >= |S| + 2. S is the neighborhood closure of the vertices
// missed by some maximum matching.
std::optional<VertexSet> tutte_witness(const Graph& g);

struct BarrierResult {
  VertexSet s;
  std::vector<VertexSet> comps;  // components of g - s, all odd and factor-critical
  int deficiency = 0;            // c_odd(g - s) - |s|
};

// Maximum-deficiency separator whose residual components are all odd and
// factor-critical. Starts from the exposable-vertex neighborhood, then
// repairs: a vertex of the first even component moves into s; a non-critical
// odd component contributes a Tutte witness. Deficiency never drops.
BarrierResult select_barrier(const Graph& g);

struct DeficiencyWitness {
  int deficiency = 0;
  VertexSet witness;
};

// Exhaustive max over X of c_odd(g - X) - |X|; among maximizers prefers
// larger |X|, then the earliest in ascending-bitmask order. n <= 25 guarded.
DeficiencyWitness deficiency_oracle(const Graph& g);

}  // namespace pf
