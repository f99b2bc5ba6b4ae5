#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pf/graph.hpp"
#include "pf/matching.hpp"

namespace pf {

// One ear: for a cycle, `vertices` lists the closed walk without repeating
// the start (closing edge implicit); for a path, both endpoints inclusive.
// Every ear has an odd number of edges, at least 3.
struct Ear {
  std::vector<int> vertices;
  bool is_cycle = false;

  int edge_size() const {
    return static_cast<int>(vertices.size()) - (is_cycle ? 0 : 1);
  }
};

struct EarDecomposition {
  std::vector<Ear> ears;
};

struct EarValidation {
  bool ok = true;
  std::string violation;  // first failed rule, empty when ok
};

// Rules checked, in order: ears are subgraphs of g with distinct edges;
// every ear has odd edge count >= 3; the first ear is a cycle; each later
// ear is a path whose endpoints (only) are already covered, or a cycle
// meeting the covered set in exactly one vertex; the ears cover V(g).
EarValidation validate_ears(const Graph& g, const EarDecomposition& d);

// Ear decomposition of a factor-critical graph with root_edge on the first
// cycle. Grows the covered set W: each new ear is traced through the
// symmetric difference of the running near-perfect matching with a perfect
// matching avoiding the chosen outside vertex. Throws std::domain_error if
// g is not factor-critical or has fewer than 3 vertices.
EarDecomposition ear_decomposition(const Graph& g,
                                   std::optional<std::pair<int, int>> root_edge = {});

// New vertices contributed by ear i (1-based); residues(d)[0] is ear 1's
// full vertex list. For i >= 2 these are even paths.
std::vector<std::vector<int>> ear_residues(const EarDecomposition& d);

// True iff the chosen residues total at least s vertices and their union
// induces a subgraph with a spanning path. index_set must contain 1 and
// only valid ear indices; s must be odd and >= 5.
bool is_s_large(const Graph& g, const EarDecomposition& d,
                const std::vector<int>& index_set, int s);

enum class FamilyTag {
  G0,
  G1_MIN_LE1,
  G1_MIN_EQ2,
  G1_MIN_GE3,
  G2,
  G3,
  G4,
  SMALL_3_5,
  ORDER7_NONSPECIAL,
  HAS_FACTOR,
};

std::string family_tag_name(FamilyTag tag);

struct FamilyClass {
  FamilyTag tag = FamilyTag::HAS_FACTOR;
  int s = 0;                     // G0
  int s1 = 0, s2 = 0, s3 = 0;    // A-families, canonicalized s1 >= s3 (G1: descending)
  std::map<std::string, int> roles;
};

// Decides which no-factor family a factor-critical graph falls into, for
// k = 3 ({P2,P7}) or k = 4 ({P2,P9}). Orders 3 and 5 are SMALL_3_5. For
// k = 3 and order >= 7 the only no-factor shape is G0. For k = 4, order 7
// is always factorless (G0 when it is K1+3K2, else ORDER7_NONSPECIAL) and
// order >= 9 is matched against the A-family templates. HAS_FACTOR means
// none matched. Throws std::domain_error unless g is factor-critical.
FamilyClass classify_no_factor(const Graph& g, int k);

// The family's canonical separator: removing it turns the graph into the
// small components realizing the census equality for its class. Requires a
// role-mapped classification (not SMALL_3_5 / ORDER7_NONSPECIAL /
// HAS_FACTOR).
VertexSet crush_set(const Graph& g, const FamilyClass& cls);

// K1+sK2 recognizer; returns the cutvertex when the shape matches (s >= 2).
std::optional<int> k1_sk2_center(const Graph& g);

// Alternating path from v to w: odd order, edges at positions (2i, 2i+1)
// in m, and m - E(path) perfectly matches the rest. m must be a perfect
// matching of g - v; g - w must also have one. w == v gives [v].
std::vector<int> alternating_path_to(const Graph& g, int v, const Matching& m, int w);

// Alternating path of order >= 5 starting at v. Requires |V| >= 5 and, when
// g is K1+sK2, that v is not the cutvertex (std::domain_error otherwise).
std::vector<int> long_alternating_path(const Graph& g, int v, const Matching& m);

}  // namespace pf
