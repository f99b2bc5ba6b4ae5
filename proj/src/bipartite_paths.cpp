#include "pf/bipartite_paths.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "pf/common.hpp"

namespace pf {

namespace {

struct Tables {
  std::vector<std::vector<char>> adj;   // [s][t], any edge
  std::vector<std::vector<char>> good;  // [s][t], edge and not forbidden
  std::vector<char> in_t1, in_t2;
};

Tables build_tables(const AuxiliaryBipartite& aux) {
  if (aux.s_count < 0 || aux.t_count < 0)
    throw std::invalid_argument("auxiliary instance: negative side size");
  Tables tb;
  tb.adj.assign(aux.s_count, std::vector<char>(aux.t_count, 0));
  tb.good.assign(aux.s_count, std::vector<char>(aux.t_count, 0));
  tb.in_t1.assign(aux.t_count, 0);
  tb.in_t2.assign(aux.t_count, 0);
  for (auto [s, t] : aux.edges) {
    if (s < 0 || s >= aux.s_count || t < 0 || t >= aux.t_count)
      throw std::invalid_argument("auxiliary instance: edge endpoint out of range");
    if (tb.adj[s][t]) throw std::invalid_argument("auxiliary instance: duplicate edge");
    tb.adj[s][t] = 1;
    tb.good[s][t] = 1;
  }
  for (auto [s, t] : aux.forbidden) {
    if (s < 0 || s >= aux.s_count || t < 0 || t >= aux.t_count || !tb.adj[s][t])
      throw std::invalid_argument("auxiliary instance: forbidden pair is not an edge");
    tb.good[s][t] = 0;
  }
  for (int t : aux.t1) {
    if (t < 0 || t >= aux.t_count) throw std::invalid_argument("auxiliary instance: t1 id out of range");
    if (tb.in_t1[t]) throw std::invalid_argument("auxiliary instance: duplicate t1 id");
    tb.in_t1[t] = 1;
  }
  for (int t : aux.t2) {
    if (t < 0 || t >= aux.t_count) throw std::invalid_argument("auxiliary instance: t2 id out of range");
    if (tb.in_t1[t] || tb.in_t2[t]) throw std::invalid_argument("auxiliary instance: t1 and t2 overlap");
    tb.in_t2[t] = 1;
  }
  return tb;
}

// A component is a path stored as an alternating node sequence.
using Comp = std::vector<AuxNode>;

struct Engine {
  const AuxiliaryBipartite& aux;
  Tables tb;
  std::vector<std::vector<int>> good_s_of_t;  // t -> sorted s over good edges
  std::vector<std::vector<int>> adj_t_of_s;   // s -> sorted t over all edges
  std::vector<Comp> comps;
  std::vector<int> s_comp, t_comp;  // node -> component index, -1 uncovered

  explicit Engine(const AuxiliaryBipartite& a) : aux(a), tb(build_tables(a)) {
    good_s_of_t.assign(aux.t_count, {});
    adj_t_of_s.assign(aux.s_count, {});
    for (int s = 0; s < aux.s_count; ++s)
      for (int t = 0; t < aux.t_count; ++t) {
        if (tb.good[s][t]) good_s_of_t[t].push_back(s);
        if (tb.adj[s][t]) adj_t_of_s[s].push_back(t);
      }
  }

  void reindex() {
    s_comp.assign(aux.s_count, -1);
    t_comp.assign(aux.t_count, -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      for (const AuxNode& nd : comps[c])
        (nd.on_t ? t_comp : s_comp)[nd.id] = c;
  }

  void replace_comps(const std::set<int>& dead, std::vector<Comp> added) {
    std::vector<Comp> next;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
      if (!dead.count(c)) next.push_back(std::move(comps[c]));
    for (Comp& p : added) next.push_back(std::move(p));
    comps = std::move(next);
    reindex();
  }

  static int pos_of(const Comp& p, int id, bool on_t) {
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
      if (p[i].on_t == on_t && p[i].id == id) return i;
    throw std::logic_error("path system engine: node not found in its component");
  }

  // Perfect matching of an odd path minus the node at even index `pos`:
  // consecutive pairs on both sides of the gap.
  static std::vector<Comp> pair_up_around(const Comp& p, int pos) {
    std::vector<Comp> out;
    for (int i = 0; i + 1 < pos; i += 2) out.push_back({p[i], p[i + 1]});
    for (int i = pos + 1; i + 1 < static_cast<int>(p.size()); i += 2)
      out.push_back({p[i], p[i + 1]});
    return out;
  }

  // Matching over good edges saturating t1, Kuhn augmentation. On failure
  // returns the reachable-set witness.
  std::optional<HallWitness> saturate_t1() {
    std::vector<int> match_s(aux.s_count, -1);
    std::vector<char> seen(aux.s_count, 0);
    std::function<bool(int)> extend = [&](int t) {
      for (int s : good_s_of_t[t]) {
        if (seen[s]) continue;
        seen[s] = 1;
        if (match_s[s] == -1 || extend(match_s[s])) {
          match_s[s] = t;
          return true;
        }
      }
      return false;
    };
    std::vector<int> t1s = aux.t1;
    std::sort(t1s.begin(), t1s.end());
    for (int t : t1s) {
      seen.assign(aux.s_count, 0);
      if (extend(t)) continue;
      // alternating reachability from t gives Y with |N(Y)| = |Y| - 1
      std::set<int> reach_t{t}, reach_s;
      std::vector<int> queue{t};
      while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int s : good_s_of_t[u]) {
          if (reach_s.count(s)) continue;
          reach_s.insert(s);
          if (match_s[s] == -1)
            throw std::logic_error("path system engine: augmenting path missed");
          if (!reach_t.count(match_s[s])) {
            reach_t.insert(match_s[s]);
            queue.push_back(match_s[s]);
          }
        }
      }
      HallWitness w;
      w.side = WitnessSide::T_SIDE;
      w.nodes.assign(reach_t.begin(), reach_t.end());
      w.neighborhood_size = static_cast<int>(reach_s.size());
      w.required = Rational(static_cast<long long>(reach_t.size()));
      return w;
    }
    comps.clear();
    for (int s = 0; s < aux.s_count; ++s)
      if (match_s[s] != -1) comps.push_back({{false, s}, {true, match_s[s]}});
    reindex();
    return std::nullopt;
  }

  struct Search {
    std::vector<int> layer;                       // per comp, -1 undiscovered
    std::vector<std::pair<int, int>> edge_in;     // per comp, discovery edge (s, t)
    std::vector<int> parent;                      // per comp, -1 means the root
  };

  // Chain of component indices from comp c back to the root (root end last).
  std::vector<int> chain_to_root(const Search& sr, int c) const {
    std::vector<int> chain;
    for (int cur = c; cur != -1; cur = sr.parent[cur]) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    return chain;
  }

  // Splice: the chain root is the uncovered t2-node tstar, the last component
  // is a two-node path whose T-node lies in t2. Rebuilds everything on the
  // chain into paths with both ends in t2 plus two-node remainders.
  void splice_chain(const Search& sr, int last, int tstar) {
    std::vector<int> comp_chain = chain_to_root(sr, last);
    int i = static_cast<int>(comp_chain.size());
    // A[0] = [tstar], A[1..i] = oriented copies of the chain components.
    std::vector<Comp> A(i + 1);
    A[0] = {{true, tstar}};
    for (int j = 1; j <= i; ++j) A[j] = comps[comp_chain[j - 1]];
    // attach positions: spos[j] = index in A[j] of its discovery-edge S-node,
    // tpos[j] = index in A[j] of the next component's discovery-edge T-node.
    std::vector<int> spos(i + 1, -1), tpos(i + 1, -1);
    for (int j = 1; j <= i; ++j) {
      auto [es, et] = sr.edge_in[comp_chain[j - 1]];
      spos[j] = pos_of(A[j], es, false);
      tpos[j - 1] = pos_of(A[j - 1], et, true);
    }
    for (int j = 1; j < i; ++j) {
      if (tpos[j] > spos[j]) {
        std::reverse(A[j].begin(), A[j].end());
        spos[j] = pos_of(A[j], sr.edge_in[comp_chain[j - 1]].first, false);
        tpos[j] = pos_of(A[j], sr.edge_in[comp_chain[j]].second, true);
      }
    }
    if (A[i][0].on_t) std::reverse(A[i].begin(), A[i].end());
    spos[i] = 0;
    // big components split the chain into segments
    std::vector<int> K{0};
    for (int j = 1; j < i; ++j)
      if (A[j].size() >= 3) K.push_back(j);
    K.push_back(i);
    std::vector<Comp> added;
    for (int h = 1; h < static_cast<int>(K.size()); ++h) {
      int a = K[h - 1], b = K[h];
      Comp q(A[a].begin(), A[a].begin() + tpos[a] + 1);
      for (int j = a + 1; j < b; ++j) {
        q.push_back(A[j][1]);  // S
        q.push_back(A[j][0]);  // T
      }
      q.insert(q.end(), A[b].begin() + spos[b], A[b].end());
      added.push_back(std::move(q));
      if (h + 1 < static_cast<int>(K.size()))
        for (Comp& pr : pair_up_between(A[b], tpos[b], spos[b])) added.push_back(std::move(pr));
    }
    std::set<int> dead(comp_chain.begin(), comp_chain.end());
    replace_comps(dead, std::move(added));
  }

  // Pairs up the even middle part of a path between attach positions
  // (exclusive); tpos < spos.
  static std::vector<Comp> pair_up_between(const Comp& p, int tpos, int spos) {
    std::vector<Comp> out;
    for (int idx = tpos + 1; idx + 1 < spos; idx += 2) out.push_back({p[idx], p[idx + 1]});
    return out;
  }

  // Chain rebuild when an uncovered S-node is adjacent to the structure grown
  // from tstar: shifts matching edges down the chain from the deepest
  // odd-order element.
  void absorb_s_node(const Search& sr, int t_hit, int s_new, int tstar) {
    std::vector<int> comp_chain;
    if (t_hit != tstar) comp_chain = chain_to_root(sr, t_comp[t_hit]);
    int i = static_cast<int>(comp_chain.size());  // A[0..i] as in splice_chain
    std::vector<Comp> A(i + 1);
    A[0] = {{true, tstar}};
    for (int j = 1; j <= i; ++j) A[j] = comps[comp_chain[j - 1]];
    // u[j] = T-node of A[j] hit by the discovery edge of A[j+1];
    // v[j] = S-node of A[j] on its own discovery edge (v[i+1] = s_new).
    std::vector<int> u(i + 1), v(i + 2);
    for (int j = 1; j <= i; ++j) {
      auto [es, et] = sr.edge_in[comp_chain[j - 1]];
      v[j] = es;
      u[j - 1] = et;
    }
    u[i] = t_hit;
    v[i + 1] = s_new;
    int k = i;
    while (A[k].size() % 2 == 0) --k;  // k >= 0 since |A[0]| = 1
    std::vector<Comp> added = pair_up_around(A[k], pos_of(A[k], u[k], true));
    for (int j = k; j <= i; ++j) added.push_back({{false, v[j + 1]}, {true, u[j]}});
    std::set<int> dead;
    for (int j = k; j <= i; ++j)
      if (j >= 1) dead.insert(comp_chain[j - 1]);
    replace_comps(dead, std::move(added));
  }

  // Covers every t2-node over good edges, or returns a T-side witness.
  std::optional<HallWitness> cover_t2() {
    for (;;) {
      int tstar = -1;
      for (int t = 0; t < aux.t_count && tstar == -1; ++t)
        if (tb.in_t2[t] && t_comp[t] == -1) tstar = t;
      if (tstar == -1) return std::nullopt;

      Search sr;
      sr.layer.assign(comps.size(), -1);
      sr.edge_in.assign(comps.size(), {-1, -1});
      sr.parent.assign(comps.size(), -2);
      std::vector<int> frontier{tstar};
      std::set<int> reached_t{tstar};
      bool rebuilt = false;
      int depth = 0;
      while (!frontier.empty() && !rebuilt) {
        ++depth;
        std::vector<int> next;
        for (int t : frontier) {
          for (int s : good_s_of_t[t]) {
            if (s_comp[s] == -1) {
              absorb_s_node(sr, t, s, tstar);
              rebuilt = true;
              break;
            }
            int c = s_comp[s];
            if (sr.layer[c] != -1) continue;
            sr.layer[c] = depth;
            sr.edge_in[c] = {s, t};
            sr.parent[c] = (t == tstar) ? -1 : t_comp[t];
            if (comps[c].size() == 2) {
              int tn = comps[c][comps[c][0].on_t ? 0 : 1].id;
              if (tb.in_t2[tn]) {
                splice_chain(sr, c, tstar);
                rebuilt = true;
                break;
              }
            }
            for (const AuxNode& nd : comps[c])
              if (nd.on_t) next.push_back(nd.id);
          }
          if (rebuilt) break;
        }
        if (rebuilt) break;
        std::sort(next.begin(), next.end());
        frontier = next;
        reached_t.insert(next.begin(), next.end());
      }
      if (rebuilt) continue;

      HallWitness w;
      w.side = WitnessSide::T_SIDE;
      w.nodes.assign(reached_t.begin(), reached_t.end());
      std::set<int> nb;
      long long ones = 0, halves = 0;
      for (int t : w.nodes) {
        (tb.in_t1[t] ? ones : halves) += 1;
        for (int s : good_s_of_t[t]) nb.insert(s);
      }
      w.neighborhood_size = static_cast<int>(nb.size());
      w.required = Rational(ones) + Rational(halves, 2);
      if (Rational(w.neighborhood_size) >= w.required)
        throw std::logic_error("path system engine: saturation without deficiency");
      return w;
    }
  }

  // Covers every S-node over full adjacency, or returns an S-side witness.
  // Odd components reached by the search are dissolved into two-node paths.
  std::optional<HallWitness> cover_s() {
    for (;;) {
      int v0 = -1;
      for (int s = 0; s < aux.s_count && v0 == -1; ++s)
        if (s_comp[s] == -1) v0 = s;
      if (v0 == -1) return std::nullopt;

      Search sr;
      sr.layer.assign(comps.size(), -1);
      sr.edge_in.assign(comps.size(), {-1, -1});
      sr.parent.assign(comps.size(), -2);
      std::vector<int> frontier{v0};
      std::set<int> reached_s{v0};
      bool rebuilt = false;
      int depth = 0;
      while (!frontier.empty() && !rebuilt) {
        ++depth;
        std::vector<int> next;
        for (int s : frontier) {
          for (int t : adj_t_of_s[s]) {
            int c = t_comp[t];
            if (c == -1 || comps[c].size() % 2 == 1) {
              dissolve_chain(sr, s, t, v0);
              rebuilt = true;
              break;
            }
            if (sr.layer[c] != -1) continue;
            sr.layer[c] = depth;
            sr.edge_in[c] = {s, t};
            sr.parent[c] = (s == v0) ? -1 : s_comp[s];
            int sn = comps[c][comps[c][0].on_t ? 1 : 0].id;
            next.push_back(sn);
          }
          if (rebuilt) break;
        }
        if (rebuilt) break;
        std::sort(next.begin(), next.end());
        frontier = next;
        reached_s.insert(next.begin(), next.end());
      }
      if (rebuilt) continue;

      HallWitness w;
      w.side = WitnessSide::S_SIDE;
      w.nodes.assign(reached_s.begin(), reached_s.end());
      std::set<int> nb;
      for (int s : w.nodes)
        for (int t : adj_t_of_s[s]) nb.insert(t);
      w.neighborhood_size = static_cast<int>(nb.size());
      w.required = Rational(static_cast<long long>(w.nodes.size()));
      if (Rational(w.neighborhood_size) >= w.required)
        throw std::logic_error("path system engine: saturation without deficiency");
      return w;
    }
  }

  // Chain rebuild for cover_s: the edge (s_hit, t_hit) reaches an uncovered
  // T-node or an odd component; everything on the chain becomes two-node
  // paths and v0 gets covered.
  void dissolve_chain(const Search& sr, int s_hit, int t_hit, int v0) {
    std::vector<int> comp_chain;
    if (s_hit != v0) comp_chain = chain_to_root(sr, s_comp[s_hit]);
    int i = static_cast<int>(comp_chain.size()) + 1;  // index of the hit element
    std::vector<int> v(i), u(i + 1);
    v[0] = v0;
    for (int j = 1; j < i; ++j) {
      auto [es, et] = sr.edge_in[comp_chain[j - 1]];
      u[j] = et;
      int sn = comps[comp_chain[j - 1]][comps[comp_chain[j - 1]][0].on_t ? 1 : 0].id;
      v[j] = sn;
    }
    u[i] = t_hit;
    std::vector<Comp> added;
    int hit_comp = t_comp[t_hit];
    if (hit_comp != -1)
      added = pair_up_around(comps[hit_comp], pos_of(comps[hit_comp], t_hit, true));
    for (int j = 0; j < i; ++j) added.push_back({{false, v[j]}, {true, u[j + 1]}});
    std::set<int> dead(comp_chain.begin(), comp_chain.end());
    if (hit_comp != -1) dead.insert(hit_comp);
    replace_comps(dead, std::move(added));
  }

  AuxPathSystem export_system() const {
    AuxPathSystem sys;
    for (const Comp& c : comps) {
      AuxPath p;
      p.nodes = c;
      if (p.nodes.size() == 2) {
        p.shape = AuxShape::I;
        if (p.nodes[0].on_t) std::reverse(p.nodes.begin(), p.nodes.end());
      } else {
        p.shape = AuxShape::II;
        if (p.nodes.back().id < p.nodes.front().id)
          std::reverse(p.nodes.begin(), p.nodes.end());
      }
      sys.paths.push_back(std::move(p));
    }
    std::sort(sys.paths.begin(), sys.paths.end(), [](const AuxPath& a, const AuxPath& b) {
      return std::make_tuple(a.nodes[0].on_t, a.nodes[0].id, a.nodes.size()) <
             std::make_tuple(b.nodes[0].on_t, b.nodes[0].id, b.nodes.size());
    });
    return sys;
  }
};

}  // namespace

std::variant<AuxPathSystem, HallWitness> construct(const AuxiliaryBipartite& aux) {
  Engine eng(aux);
  if (auto w = eng.saturate_t1()) return *w;
  if (auto w = eng.cover_t2()) return *w;
  if (auto w = eng.cover_s()) return *w;
  return eng.export_system();
}

AuxCheck verify_aux_system(const AuxiliaryBipartite& aux, const AuxPathSystem& sys) {
  Tables tb;
  try {
    tb = build_tables(aux);
  } catch (const std::invalid_argument& e) {
    return {false, e.what()};
  }
  auto fail = [](std::string msg) { return AuxCheck{false, std::move(msg)}; };
  std::vector<char> s_used(aux.s_count, 0), t_used(aux.t_count, 0);
  for (int pi = 0; pi < static_cast<int>(sys.paths.size()); ++pi) {
    const AuxPath& p = sys.paths[pi];
    std::string tag = "path " + std::to_string(pi) + ": ";
    if (p.nodes.empty()) return fail(tag + "empty");
    for (const AuxNode& nd : p.nodes) {
      int limit = nd.on_t ? aux.t_count : aux.s_count;
      if (nd.id < 0 || nd.id >= limit) return fail(tag + "node id out of range");
      auto& used = nd.on_t ? t_used : s_used;
      if (used[nd.id]) return fail(tag + "node used twice");
      used[nd.id] = 1;
    }
    for (size_t j = 0; j + 1 < p.nodes.size(); ++j) {
      if (p.nodes[j].on_t == p.nodes[j + 1].on_t) return fail(tag + "sides do not alternate");
      int s = p.nodes[j].on_t ? p.nodes[j + 1].id : p.nodes[j].id;
      int t = p.nodes[j].on_t ? p.nodes[j].id : p.nodes[j + 1].id;
      if (!tb.adj[s][t]) return fail(tag + "missing edge");
      if (p.shape == AuxShape::II && !tb.good[s][t]) return fail(tag + "forbidden edge on a long path");
    }
    if (p.shape == AuxShape::I) {
      if (p.nodes.size() != 2) return fail(tag + "shape I must have two nodes");
    } else if (p.shape == AuxShape::II) {
      if (p.nodes.size() % 2 == 0 || p.nodes.size() < 3)
        return fail(tag + "shape II must have odd length at least three");
      int t2_count = 0;
      for (const AuxNode& nd : p.nodes)
        if (nd.on_t) {
          if (!tb.in_t1[nd.id] && !tb.in_t2[nd.id])
            return fail(tag + "long-path T-node outside t1 and t2");
          if (tb.in_t2[nd.id]) ++t2_count;
        }
      if (t2_count != 2) return fail(tag + "long path must contain exactly two t2-nodes");
      if (!p.nodes.front().on_t || !tb.in_t2[p.nodes.front().id] ||
          !p.nodes.back().on_t || !tb.in_t2[p.nodes.back().id])
        return fail(tag + "long-path ends must be t2-nodes");
    } else {
      return fail(tag + "unknown shape tag");
    }
  }
  for (int s = 0; s < aux.s_count; ++s)
    if (!s_used[s]) return fail("S-node " + std::to_string(s) + " uncovered");
  for (int t = 0; t < aux.t_count; ++t)
    if ((tb.in_t1[t] || tb.in_t2[t]) && !t_used[t])
      return fail("T-node " + std::to_string(t) + " uncovered");
  return {true, ""};
}

bool verify_hall_witness(const AuxiliaryBipartite& aux, const HallWitness& w) {
  Tables tb = build_tables(aux);
  std::set<int> nodes(w.nodes.begin(), w.nodes.end());
  if (nodes.size() != w.nodes.size()) return false;
  std::set<int> nb;
  Rational required;
  if (w.side == WitnessSide::S_SIDE) {
    for (int s : nodes) {
      if (s < 0 || s >= aux.s_count) return false;
      for (int t = 0; t < aux.t_count; ++t)
        if (tb.adj[s][t]) nb.insert(t);
    }
    required = Rational(static_cast<long long>(nodes.size()));
  } else {
    for (int t : nodes) {
      if (t < 0 || t >= aux.t_count) return false;
      if (!tb.in_t1[t] && !tb.in_t2[t]) return false;
      required = required + (tb.in_t1[t] ? Rational(1) : Rational(1, 2));
      for (int s = 0; s < aux.s_count; ++s)
        if (tb.good[s][t]) nb.insert(s);
    }
  }
  if (static_cast<int>(nb.size()) != w.neighborhood_size) return false;
  if (required != w.required) return false;
  return Rational(w.neighborhood_size) < required;
}

bool brute_force_hypotheses(const AuxiliaryBipartite& aux) {
  Tables tb = build_tables(aux);
  if (aux.s_count > 18) throw resource_error("brute_force_hypotheses: S side too large");
  std::vector<int> tmix = aux.t1;
  tmix.insert(tmix.end(), aux.t2.begin(), aux.t2.end());
  std::sort(tmix.begin(), tmix.end());
  if (tmix.size() > 18) throw resource_error("brute_force_hypotheses: T side too large");

  for (unsigned long long mask = 1; mask < (1ull << aux.s_count); ++mask) {
    std::vector<char> hit(aux.t_count, 0);
    int picked = 0, nbs = 0;
    for (int s = 0; s < aux.s_count; ++s) {
      if (!(mask >> s & 1)) continue;
      ++picked;
      for (int t = 0; t < aux.t_count; ++t)
        if (tb.adj[s][t] && !hit[t]) {
          hit[t] = 1;
          ++nbs;
        }
    }
    if (nbs < picked) return false;
  }
  int nt = static_cast<int>(tmix.size());
  for (unsigned long long mask = 1; mask < (1ull << nt); ++mask) {
    std::vector<char> hit(aux.s_count, 0);
    int twice_req = 0, nbs = 0;
    for (int i = 0; i < nt; ++i) {
      if (!(mask >> i & 1)) continue;
      int t = tmix[i];
      twice_req += tb.in_t1[t] ? 2 : 1;
      for (int s = 0; s < aux.s_count; ++s)
        if (tb.good[s][t] && !hit[s]) {
          hit[s] = 1;
          ++nbs;
        }
    }
    if (2 * nbs < twice_req) return false;
  }
  return true;
}

}  // namespace pf
