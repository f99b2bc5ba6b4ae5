#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pf/graph.hpp"

namespace pf {

enum class Family {
  KN,
  PN,
  CN,
  JOIN,
  UNION,
  K1_SK2,
  A1,
  A2_PRIME,
  A2_DPRIME,
  A3_PRIME,
  A3_DPRIME,
  A4_PRIME,
  A4_DPRIME,
  HN_SHARP,
  KN_PLUS_COPIES,
};

// Parameters are validated against each family's admissible range; spec
// errors name the violated bound. For the ranged families (the A2/A3/A4
// prime tags) an optional extra-edge selector picks a subset of the
// documented optional edges: a bitmask over ranged_optional_edges() order,
// or a seed for an independent coin per edge.
struct FamilySpec {
  Family family = Family::KN;
  int n = 0;                    // KN, PN, CN, HN_SHARP, KN_PLUS_COPIES core
  int s = 0;                    // K1_SK2
  int s1 = 0, s2 = 0, s3 = 0;   // A-families
  int copies = 0;               // KN_PLUS_COPIES; 0 means 2n+1
  std::shared_ptr<FamilySpec> left, right;  // JOIN / UNION operands
  std::shared_ptr<FamilySpec> copy;         // KN_PLUS_COPIES block
  std::optional<std::uint64_t> extra_edge_mask;
  std::optional<std::uint32_t> extra_edge_seed;
};

struct GeneratedGraph {
  Graph graph;
  std::vector<std::pair<std::string, int>> roles;
};

GeneratedGraph generate(const FamilySpec& spec);

// Optional edges between the prime and double-prime endpoints of a ranged
// family, in canonical (lexicographic id) order. Only A2/A3/A4 prime tags.
std::vector<std::pair<int, int>> ranged_optional_edges(const FamilySpec& spec);

// Random hypomatchable graph built from a random odd ear structure
// (odd start cycle, then odd ears attached to covered vertices), plus a few
// random extra edges. Result is re-verified before returning.
Graph random_factor_critical(int order, std::uint32_t seed);

Graph graph_join(const Graph& a, const Graph& b);
Graph graph_disjoint_union(const Graph& a, const Graph& b);

// Textual spec syntax used by the CLI:
//   kn:5  pn:9  cn:7  k1sk2:3  a1:1,0,0  a2p:1,1,1  a2pp:1,1,1
//   a3p:2  a3pp:2  a4p:1  a4pp:1  hn:1
//   join(<spec>,<spec>)  union(<spec>,<spec>)  kncopies(<n>,<copies>,<spec>)
FamilySpec parse_family_spec(const std::string& text);

}  // namespace pf
