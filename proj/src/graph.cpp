#include "pf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "pf/common.hpp"

namespace pf {

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n_, {});
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw std::invalid_argument("Graph: duplicate edge");
  edges_ = std::move(edge_list);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& Graph::neighbors(int u) const {
  if (u < 0 || u >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return adj_[u];
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

bool Graph::adjacent(int u, int v) const {
  const auto& a = neighbors(u);
  if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
  return std::binary_search(a.begin(), a.end(), v);
}

int ComponentCensus::c(int order) const {
  auto it = counts.find(order);
  return it == counts.end() ? 0 : it->second;
}

int ComponentCensus::c_odd() const {
  int k = 0;
  for (auto [order, cnt] : counts)
    if (order % 2 == 1) k += cnt;
  return k;
}

VertexSet make_vertex_set(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool is_vertex_set(const VertexSet& s) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) return false;
  return true;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  if (!is_vertex_set(s))
    throw std::invalid_argument("vertex set must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= g.vertex_count()))
    throw std::invalid_argument("vertex set out of range");
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const VertexSet& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet complement_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!set_contains(s, v)) out.push_back(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  check_vertex_set(g, removed);
  int n = g.vertex_count();
  std::vector<char> gone(n, 0), seen(n, 0);
  for (int v : removed) gone[v] = 1;
  std::vector<VertexSet> out;
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    if (gone[v] || seen[v]) continue;
    VertexSet comp;
    stack.push_back(v);
    seen[v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int w : g.neighbors(u))
        if (!gone[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;  // ordered by smallest vertex: outer loop visits ids ascending
}

ComponentCensus census(const Graph& g, const VertexSet& removed) {
  ComponentCensus cc;
  for (const auto& comp : components(g, removed)) {
    ++cc.counts[static_cast<int>(comp.size())];
    ++cc.total;
  }
  return cc;
}

InducedGraph induced(const Graph& g, const VertexSet& keep) {
  check_vertex_set(g, keep);
  std::vector<int> new_id(g.vertex_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0)
      edges.emplace_back(new_id[u], new_id[v]);
  return InducedGraph{Graph(static_cast<int>(keep.size()), std::move(edges)), keep};
}

namespace {

// Extends the path from `last`; `left` vertices remain. Prunes on
// connectivity of the unvisited part and on forced degree-1 vertices.
bool ham_extend(const Graph& g, std::vector<char>& used, int last, int left,
                std::uint64_t& budget) {
  if (left == 0) return true;
  if (budget == 0) throw resource_error("has_hamiltonian_path: node budget exhausted");
  --budget;

  int n = g.vertex_count();
  // unvisited region must be connected and reachable from `last`
  {
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int w : g.neighbors(last))
      if (!used[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
    int reached = 0;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : g.neighbors(u))
        if (!used[w] && !seen[w]) { seen[w] = 1; stack.push_back(w); }
    }
    if (reached != left) return false;
    // only one vertex can close the path, so at most one unvisited vertex may
    // be a dead end once entered
    int ends_needed = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int open = 0;
      for (int w : g.neighbors(v))
        if (!used[w]) ++open;
      if (open == 0) {
        // reachable only directly from `last`, and the path stops there
        if (!g.adjacent(last, v) || left > 1) return false;
      } else if (open == 1 && !g.adjacent(last, v)) {
        // entered through its single open neighbor, then the path is stuck
        if (++ends_needed > 1) return false;
      }
    }
  }
  for (int w : g.neighbors(last)) {
    if (used[w]) continue;
    used[w] = 1;
    if (ham_extend(g, used, w, left - 1, budget)) {
      used[w] = 0;
      return true;
    }
    used[w] = 0;
  }
  return false;
}

}  // namespace

bool has_hamiltonian_path(const Graph& g, std::uint64_t node_budget) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  if (components(g, {}).size() != 1) return false;
  int leaves = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) ++leaves;
  if (leaves > 2) return false;
  std::vector<char> used(n, 0);
  for (int start = 0; start < n; ++start) {
    used[start] = 1;
    if (ham_extend(g, used, start, n - 1, node_budget)) return true;
    used[start] = 0;
  }
  return false;
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (first == "p") {
      if (n >= 0)
        throw std::invalid_argument("graph text: duplicate p line at line " +
                                    std::to_string(lineno));
      if (!(ss >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("graph text: malformed p line at line " +
                                    std::to_string(lineno));
    } else {
      if (n < 0)
        throw std::invalid_argument("graph text: edge before p line at line " +
                                    std::to_string(lineno));
      int u, v;
      try {
        u = std::stoi(first);
      } catch (...) {
        throw std::invalid_argument("graph text: bad token at line " +
                                    std::to_string(lineno));
      }
      if (!(ss >> v))
        throw std::invalid_argument("graph text: missing endpoint at line " +
                                    std::to_string(lineno));
      edges.emplace_back(u, v);
    }
    std::string extra;
    if (ss >> extra)
      throw std::invalid_argument("graph text: trailing token at line " +
                                  std::to_string(lineno));
  }
  if (n < 0) throw std::invalid_argument("graph text: missing p line");
  if (static_cast<int>(edges.size()) != m)
    throw std::invalid_argument("graph text: edge count mismatch, header says " +
                                std::to_string(m) + " got " +
                                std::to_string(edges.size()));
  return Graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph_text(in);
}

void write_graph_text(const Graph& g, std::ostream& out,
                      const std::vector<std::pair<std::string, int>>& roles) {
  out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  for (const auto& [name, id] : roles) out << "# role " << name << " " << id << "\n";
}

}  // namespace pf
