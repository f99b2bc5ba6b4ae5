#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pf {

// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int u) const;
  int degree(int u) const;
  bool adjacent(int u, int v) const;
  // Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<std::pair<int, int>> edges_;
};

struct ComponentCensus {
  std::map<int, int> counts;  // component order -> how many
  int total = 0;

  int c(int order) const;
  int c_odd() const;
};

// ---- vertex set helpers ----

// Sorts and dedups.
VertexSet make_vertex_set(std::vector<int> ids);
bool is_vertex_set(const VertexSet& s);
// Throws std::invalid_argument unless s is sorted, unique and within range.
void check_vertex_set(const Graph& g, const VertexSet& s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
// All vertices of g not in s.
VertexSet complement_set(const Graph& g, const VertexSet& s);

// Connected components of g - removed, each sorted; list ordered by the
// smallest contained vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
ComponentCensus census(const Graph& g, const VertexSet& removed);

struct InducedGraph {
  Graph graph;
  std::vector<int> original_ids;  // new id -> old id
};
InducedGraph induced(const Graph& g, const VertexSet& keep);

// Backtracking spanning-path test. Oracle utility only: throws
// pf::resource_error once node_budget search nodes are expended.
bool has_hamiltonian_path(const Graph& g, std::uint64_t node_budget = 50'000'000);

// ---- text format ----
//
//   # comment
//   p <n> <m>
//   <u> <v>          (one line per edge, m lines)
//
// Role annotations are written back as "# role <name> <id>" lines.

Graph read_graph_text(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph_text(const Graph& g, std::ostream& out,
                      const std::vector<std::pair<std::string, int>>& roles = {});

}  // namespace pf
