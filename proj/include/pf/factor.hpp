#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pf/bipartite_paths.hpp"
#include "pf/graph.hpp"
#include "pf/rational.hpp"

namespace pf {

// Vertex-disjoint paths given as ordered vertex sequences.
struct PathSystem {
  std::vector<std::vector<int>> paths;
};

struct FactorCheck {
  bool ok = true;
  std::string violation;
};

// f spans V(g), consecutive vertices adjacent, every path of order 2 or 2k+1.
FactorCheck verify_factor(const Graph& g, const PathSystem& f, int k);

// Splits a path-factor into order-2 and order-(2k+1) pieces: even paths into
// twos, odd paths (order >= 2k+1) into one long prefix plus twos. Paths of
// odd order below 2k+1 (or order 1) throw std::domain_error.
PathSystem normalize_factor(const Graph& g, const PathSystem& f, int k);

// Exhaustive search for a {P2,P(2k+1)}-factor; deterministic; callers keep
// n small (~14 for k in {3,4}).
std::optional<PathSystem> brute_force_factor(const Graph& g, int k);

// Factor of a single component known to have one: perfect matching when the
// order is even, else alternating-path probes for a long path, exhaustive
// search as a fallback for order <= 14; throws pf::resource_error beyond
// that, std::logic_error if the guarantee is refuted.
PathSystem component_factor(const Graph& g, int k);

// Explicit X with sum of weights[j]*c_j(G-X) over odd j exceeding
// slope*|X| + offset.
struct ConditionCertificate {
  VertexSet x;
  std::map<int, Rational> weights;
  Rational slope;
  Rational offset;
  Rational lhs;
  Rational rhs;
};

ConditionCertificate make_certificate(const Graph& g, const VertexSet& x,
                                      const std::map<int, Rational>& weights,
                                      const Rational& slope, const Rational& offset);

// Recomputes both sides from the census and requires lhs > rhs.
bool verify_certificate(const Graph& g, const ConditionCertificate& cert);

struct BuildTrace {
  VertexSet barrier;
  std::vector<VertexSet> component_vertices;  // aux T-node id -> vertices
  AuxiliaryBipartite aux;
  std::optional<AuxPathSystem> aux_system;
  std::optional<HallWitness> witness;
  std::vector<std::string> steps;
};

struct BuildOutcome {
  std::variant<PathSystem, ConditionCertificate> result;
  BuildTrace trace;

  bool has_factor() const { return std::holds_alternative<PathSystem>(result); }
  const PathSystem& factor() const { return std::get<PathSystem>(result); }
  const ConditionCertificate& certificate() const {
    return std::get<ConditionCertificate>(result);
  }
};

// Certificate-or-factor builders. The returned arm always verifies: the
// factor passes verify_factor, the certificate recomputes to lhs > rhs.
BuildOutcome build_p2p7(const Graph& g);
BuildOutcome build_p2p9(const Graph& g);

}  // namespace pf
