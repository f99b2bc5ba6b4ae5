#include "pf/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "pf/common.hpp"

namespace pf {

std::vector<int> Matching::mates(int n) const {
  std::vector<int> mate(n, -1);
  for (auto [u, v] : edges) {
    mate[u] = v;
    mate[v] = u;
  }
  return mate;
}

namespace {

// Classic blossom-contraction augmenting search. base[] tracks the blossom
// root of each vertex; p[] stores tree edges into even-level vertices.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g)
      : g_(g), n_(g.vertex_count()), match_(n_, -1), p_(n_), base_(n_), used_(n_) {}

  std::vector<int> run() {
    // greedy seed keeps the augmenting phase short
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (int to : g_.neighbors(v))
        if (match_[to] == -1) {
          match_[v] = to;
          match_[to] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) {
        int u = find_path(v);
        while (u != -1) {
          int pv = p_[u], ppv = match_[pv];
          match_[u] = pv;
          match_[pv] = u;
          u = ppv;
        }
      }
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (int u = a;;) {
      u = base_[u];
      seen[u] = 1;
      if (match_[u] == -1) break;
      u = p_[match_[u]];
    }
    for (int v = b;;) {
      v = base_[v];
      if (seen[v]) return v;
      v = p_[match_[v]];
    }
  }

  void mark_path(std::vector<char>& blossom, int v, int b, int child) {
    while (base_[v] != b) {
      blossom[base_[v]] = 1;
      blossom[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(p_.begin(), p_.end(), -1);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int curbase = lca(v, to);
          std::vector<char> blossom(n_, 0);
          mark_path(blossom, v, curbase, to);
          mark_path(blossom, to, curbase, v);
          for (int i = 0; i < n_; ++i)
            if (blossom[base_[i]]) {
              base_[i] = curbase;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_;
};

int matching_size(const Graph& g) { return maximum_matching(g).size(); }

Matching matching_from_mates(const std::vector<int>& mate) {
  Matching m;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v)
    if (mate[v] > v) m.edges.emplace_back(v, mate[v]);
  return m;
}

}  // namespace

Matching maximum_matching(const Graph& g) {
  return matching_from_mates(BlossomMatcher(g).run());
}

bool matching_covers_exactly(const Graph& g, const Matching& m, const VertexSet& covered) {
  std::vector<char> hit(g.vertex_count(), 0);
  for (auto [u, v] : m.edges) {
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count()) return false;
    if (!g.adjacent(u, v)) return false;
    if (hit[u] || hit[v]) return false;
    hit[u] = hit[v] = 1;
  }
  VertexSet got;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (hit[v]) got.push_back(v);
  return got == covered;
}

bool is_factor_critical(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 == 0) return false;
  if (n == 1) return true;
  int want = (n - 1) / 2;
  for (int v = 0; v < n; ++v) {
    VertexSet keep = complement_set(g, {v});
    if (matching_size(induced(g, keep).graph) != want) return false;
  }
  return true;
}

namespace {

// Vertices missed by at least one maximum matching.
VertexSet exposable_vertices(const Graph& g, int nu) {
  VertexSet d;
  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet keep = complement_set(g, {v});
    if (matching_size(induced(g, keep).graph) == nu) d.push_back(v);
  }
  return d;
}

VertexSet neighborhood_minus(const Graph& g, const VertexSet& d) {
  std::vector<int> out;
  for (int v : d)
    for (int w : g.neighbors(v))
      if (!set_contains(d, w)) out.push_back(w);
  return make_vertex_set(std::move(out));
}

}  // namespace

std::optional<VertexSet> tutte_witness(const Graph& g) {
  int n = g.vertex_count();
  if (n % 2 != 0) throw std::domain_error("tutte_witness: order must be even");
  int nu = matching_size(g);
  if (2 * nu == n) return std::nullopt;
  VertexSet d = exposable_vertices(g, nu);
  VertexSet a = neighborhood_minus(g, d);
  ComponentCensus cc = census(g, a);
  if (cc.c_odd() < static_cast<int>(a.size()) + 2)
    throw std::logic_error("tutte_witness: separator fails its own bound");
  return a;
}

BarrierResult select_barrier(const Graph& g) {
  int n = g.vertex_count();
  int nu = matching_size(g);
  VertexSet d = exposable_vertices(g, nu);
  VertexSet s = neighborhood_minus(g, d);

  // repair until every residual component is odd and factor-critical;
  // each round grows s, so this terminates
  for (;;) {
    bool changed = false;
    for (const auto& comp : components(g, s)) {
      if (comp.size() % 2 == 0) {
        s = set_union(s, {comp.front()});
        changed = true;
        break;
      }
      InducedGraph sub = induced(g, comp);
      if (is_factor_critical(sub.graph)) continue;
      // find v with no perfect matching in comp - v, then pull in a Tutte
      // witness of comp - v together with v
      int pair_target = (static_cast<int>(comp.size()) - 1) / 2;
      int bad = -1;
      for (int v = 0; v < sub.graph.vertex_count(); ++v) {
        VertexSet keep = complement_set(sub.graph, {v});
        if (matching_size(induced(sub.graph, keep).graph) != pair_target) {
          bad = v;
          break;
        }
      }
      if (bad < 0) throw std::logic_error("select_barrier: criticality probe failed");
      InducedGraph rest = induced(sub.graph, complement_set(sub.graph, {bad}));
      auto w = tutte_witness(rest.graph);
      if (!w) throw std::logic_error("select_barrier: expected missing matching");
      std::vector<int> grow{sub.original_ids[bad]};
      for (int x : *w) grow.push_back(sub.original_ids[rest.original_ids[x]]);
      s = set_union(s, make_vertex_set(std::move(grow)));
      changed = true;
      break;
    }
    if (!changed) break;
  }

  BarrierResult out;
  out.s = s;
  out.comps = components(g, s);
  out.deficiency = static_cast<int>(out.comps.size()) - static_cast<int>(s.size());
  if (n > 0 && out.deficiency != n - 2 * nu)
    throw std::logic_error("select_barrier: deficiency drifted from Berge bound");
  return out;
}

DeficiencyWitness deficiency_oracle(const Graph& g) {
  int n = g.vertex_count();
  if (n > 25) throw resource_error("deficiency_oracle: n > 25");
  DeficiencyWitness best{-n - 1, {}};
  std::uint32_t limit = 1u << n;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    VertexSet x;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) x.push_back(v);
    int value = census(g, x).c_odd() - static_cast<int>(x.size());
    if (value > best.deficiency ||
        (value == best.deficiency && x.size() > best.witness.size()))
      best = {value, x};
  }
  return best;
}

}  // namespace pf
