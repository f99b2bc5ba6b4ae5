#include "pf/hypomatchable.hpp"

#include <algorithm>
#include <set>

#include "pf/common.hpp"

namespace pf {

namespace {

// Walks the symmetric difference of two matchings from a vertex exposed in
// exactly one of them; stops at the other exposed end of the component.
std::vector<int> trace_difference(const std::vector<int>& mate_a,
                                  const std::vector<int>& mate_b, int start) {
  std::vector<int> path{start};
  if (mate_a[start] != -1 && mate_b[start] != -1)
    throw std::logic_error("trace_difference: start covered by both matchings");
  // the first edge comes from whichever matching covers `start`
  bool use_b = mate_a[start] == -1;
  int cur = start;
  for (;;) {
    int next = use_b ? mate_b[cur] : mate_a[cur];
    if (next == -1) break;
    path.push_back(next);
    cur = next;
    use_b = !use_b;
  }
  return path;
}

Matching remapped_matching(const InducedGraph& sub) {
  Matching m = maximum_matching(sub.graph);
  for (auto& [u, v] : m.edges) {
    u = sub.original_ids[u];
    v = sub.original_ids[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

// Perfect matching of g - v on original ids; throws std::domain_error when
// there is none.
Matching perfect_matching_avoiding(const Graph& g, int v, const char* who) {
  InducedGraph sub = induced(g, complement_set(g, {v}));
  Matching m = remapped_matching(sub);
  if (2 * m.size() != g.vertex_count() - 1)
    throw std::domain_error(std::string(who) + ": no perfect matching avoiding vertex " +
                            std::to_string(v));
  return m;
}

}  // namespace

std::vector<int> alternating_path_to(const Graph& g, int v, const Matching& m, int w) {
  int n = g.vertex_count();
  if (v < 0 || v >= n || w < 0 || w >= n)
    throw std::invalid_argument("alternating_path_to: vertex out of range");
  if (!matching_covers_exactly(g, m, complement_set(g, {v})))
    throw std::invalid_argument("alternating_path_to: m is not a perfect matching of g - v");
  if (w == v) return {v};
  Matching mw = perfect_matching_avoiding(g, w, "alternating_path_to");
  std::vector<int> path = trace_difference(m.mates(n), mw.mates(n), v);
  if (path.back() != w || path.size() % 2 == 0)
    throw std::logic_error("alternating_path_to: difference walk missed target");
  return path;
}

std::vector<int> long_alternating_path(const Graph& g, int v, const Matching& m) {
  int n = g.vertex_count();
  if (n < 5) throw std::domain_error("long_alternating_path: need at least 5 vertices");
  if (v < 0 || v >= n)
    throw std::invalid_argument("long_alternating_path: vertex out of range");
  if (!matching_covers_exactly(g, m, complement_set(g, {v})))
    throw std::invalid_argument("long_alternating_path: m is not a perfect matching of g - v");
  if (auto center = k1_sk2_center(g); center && *center == v)
    throw std::domain_error("long_alternating_path: v is the cutvertex of a K1+sK2");
  std::vector<int> mate = m.mates(n);
  if (g.degree(v) == n - 1) {
    // v sees everything; bridge two matching edges through any cross edge
    for (auto [x, y] : g.edges()) {
      if (x == v || y == v) continue;
      if (mate[x] == y) continue;
      return {v, mate[x], x, y, mate[y]};
    }
    throw std::logic_error("long_alternating_path: no cross edge outside a K1+sK2");
  }
  int u = -1;
  for (int cand = 0; cand < n; ++cand)
    if (cand != v && !g.adjacent(v, cand)) {
      u = cand;
      break;
    }
  std::vector<int> path = alternating_path_to(g, v, m, mate[u]);
  if (path.size() < 5)
    throw std::logic_error("long_alternating_path: non-neighbor walk too short");
  return path;
}

EarValidation validate_ears(const Graph& g, const EarDecomposition& d) {
  auto fail = [](const std::string& why) { return EarValidation{false, why}; };
  if (d.ears.empty()) return fail("no ears");
  std::set<std::pair<int, int>> used_edges;
  std::vector<char> covered(g.vertex_count(), 0);
  for (size_t i = 0; i < d.ears.size(); ++i) {
    const Ear& ear = d.ears[i];
    int len = static_cast<int>(ear.vertices.size());
    if (len == 0) return fail("ear " + std::to_string(i + 1) + " is empty");
    for (int v : ear.vertices)
      if (v < 0 || v >= g.vertex_count())
        return fail("ear " + std::to_string(i + 1) + " leaves the graph");
    int edge_count = ear.edge_size();
    if (edge_count < 3 || edge_count % 2 == 0)
      return fail("ear " + std::to_string(i + 1) + " must have odd edge count >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t + 1 < len; ++t)
      edges.emplace_back(ear.vertices[t], ear.vertices[t + 1]);
    if (ear.is_cycle) edges.emplace_back(ear.vertices[len - 1], ear.vertices[0]);
    for (auto [u, v] : edges) {
      if (u == v || !g.adjacent(u, v))
        return fail("ear " + std::to_string(i + 1) + " uses a non-edge");
      auto key = std::minmax(u, v);
      if (!used_edges.insert(std::pair(key.first, key.second)).second)
        return fail("ear " + std::to_string(i + 1) + " reuses an edge");
    }
    std::set<int> distinct(ear.vertices.begin(), ear.vertices.end());
    if (static_cast<int>(distinct.size()) != len)
      return fail("ear " + std::to_string(i + 1) + " repeats a vertex");
    if (i == 0) {
      if (!ear.is_cycle) return fail("first ear must be a cycle");
    } else if (ear.is_cycle) {
      // cycle ear: exactly the start vertex is old
      if (!covered[ear.vertices[0]])
        return fail("ear " + std::to_string(i + 1) + " cycle must start at a covered vertex");
      for (int t = 1; t < len; ++t)
        if (covered[ear.vertices[t]])
          return fail("ear " + std::to_string(i + 1) + " cycle revisits covered vertices");
    } else {
      if (!covered[ear.vertices[0]] || !covered[ear.vertices[len - 1]])
        return fail("ear " + std::to_string(i + 1) + " path endpoints must be covered");
      for (int t = 1; t + 1 < len; ++t)
        if (covered[ear.vertices[t]])
          return fail("ear " + std::to_string(i + 1) + " path interior must be new");
    }
    for (int v : ear.vertices) covered[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!covered[v]) return fail("vertex " + std::to_string(v) + " not covered");
  return {};
}

EarDecomposition ear_decomposition(const Graph& g,
                                   std::optional<std::pair<int, int>> root_edge) {
  int n = g.vertex_count();
  if (n < 3 || !is_factor_critical(g))
    throw std::domain_error("ear_decomposition: graph must be factor-critical, order >= 3");
  int x, y;
  if (root_edge) {
    x = root_edge->first;
    y = root_edge->second;
    if (x < 0 || y < 0 || x >= n || y >= n || !g.adjacent(x, y))
      throw std::invalid_argument("ear_decomposition: root edge not in graph");
  } else {
    x = g.edges().front().first;
    y = g.edges().front().second;
  }

  EarDecomposition out;
  Matching m = perfect_matching_avoiding(g, x, "ear_decomposition");
  std::vector<int> first = alternating_path_to(g, x, m, y);
  out.ears.push_back(Ear{first, true});  // closing edge y-x is the root edge

  std::vector<char> covered(n, 0);
  std::vector<int> mate = m.mates(n);
  for (int v : first) covered[v] = 1;
  // mate[] keeps only pairs fully outside the covered set
  for (size_t t = 1; t + 1 < first.size(); t += 2) {
    mate[first[t]] = -1;
    mate[first[t + 1]] = -1;
  }

  int covered_count = static_cast<int>(first.size());
  while (covered_count < n) {
    int u = -1, z = -1;
    for (int cand = 0; cand < n && u == -1; ++cand) {
      if (!covered[cand]) continue;
      for (int nb : g.neighbors(cand))
        if (!covered[nb]) {
          u = cand;
          z = nb;
          break;
        }
    }
    if (u == -1) throw std::logic_error("ear_decomposition: uncovered but unreachable");
    Matching nz = perfect_matching_avoiding(g, z, "ear_decomposition");
    std::vector<int> walk = trace_difference(mate, nz.mates(n), z);
    int w_star = walk.back();
    if (!covered[w_star] || walk.size() % 2 == 0)
      throw std::logic_error("ear_decomposition: difference walk ended outside core");
    Ear ear;
    if (w_star == u) {
      ear.is_cycle = true;
      ear.vertices.push_back(u);
      ear.vertices.insert(ear.vertices.end(), walk.begin(), walk.end() - 1);
    } else {
      ear.is_cycle = false;
      ear.vertices.push_back(u);
      ear.vertices.insert(ear.vertices.end(), walk.begin(), walk.end());
    }
    out.ears.push_back(ear);
    for (size_t t = 0; t + 1 < walk.size(); t += 2) {
      covered[walk[t]] = 1;
      covered[walk[t + 1]] = 1;
      mate[walk[t]] = -1;
      mate[walk[t + 1]] = -1;
      covered_count += 2;
    }
  }
  EarValidation check = validate_ears(g, out);
  if (!check.ok)
    throw std::logic_error("ear_decomposition: built invalid ears: " + check.violation);
  return out;
}

std::vector<std::vector<int>> ear_residues(const EarDecomposition& d) {
  std::vector<std::vector<int>> out;
  std::set<int> covered;
  for (const Ear& ear : d.ears) {
    std::vector<int> fresh;
    for (int v : ear.vertices)
      if (covered.insert(v).second) fresh.push_back(v);
    out.push_back(std::move(fresh));
  }
  return out;
}

bool is_s_large(const Graph& g, const EarDecomposition& d,
                const std::vector<int>& index_set, int s) {
  if (s < 5 || s % 2 == 0)
    throw std::invalid_argument("is_s_large: s must be odd and >= 5");
  EarValidation check = validate_ears(g, d);
  if (!check.ok)
    throw std::invalid_argument("is_s_large: invalid ear decomposition: " + check.violation);
  std::set<int> indices(index_set.begin(), index_set.end());
  if (indices.size() != index_set.size() || !indices.count(1))
    throw std::invalid_argument("is_s_large: index set must be unique and contain 1");
  if (!indices.empty() && (*indices.begin() < 1 ||
                           *indices.rbegin() > static_cast<int>(d.ears.size())))
    throw std::invalid_argument("is_s_large: ear index out of range");
  auto residues = ear_residues(d);
  std::vector<int> verts;
  for (int i : indices)
    verts.insert(verts.end(), residues[i - 1].begin(), residues[i - 1].end());
  if (static_cast<int>(verts.size()) < s) return false;
  return has_hamiltonian_path(induced(g, make_vertex_set(verts)).graph);
}

std::optional<int> k1_sk2_center(const Graph& g) {
  int n = g.vertex_count();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  for (int c = 0; c < n; ++c) {
    if (g.degree(c) != n - 1) continue;
    bool ok = true;
    for (const auto& comp : components(g, {c}))
      if (comp.size() != 2) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

std::string family_tag_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::G0: return "G0";
    case FamilyTag::G1_MIN_LE1: return "G1_MIN_LE1";
    case FamilyTag::G1_MIN_EQ2: return "G1_MIN_EQ2";
    case FamilyTag::G1_MIN_GE3: return "G1_MIN_GE3";
    case FamilyTag::G2: return "G2";
    case FamilyTag::G3: return "G3";
    case FamilyTag::G4: return "G4";
    case FamilyTag::SMALL_3_5: return "SMALL_3_5";
    case FamilyTag::ORDER7_NONSPECIAL: return "ORDER7_NONSPECIAL";
    case FamilyTag::HAS_FACTOR: return "HAS_FACTOR";
  }
  return "?";
}

namespace {

std::string blade_role(const char* group, int j, const char* end) {
  return std::string(group) + std::to_string(j) + end;
}

FamilyClass make_g0(const Graph& g, int center) {
  FamilyClass cls;
  cls.tag = FamilyTag::G0;
  cls.s = (g.vertex_count() - 1) / 2;
  cls.roles["cutvertex"] = center;
  int j = 1;
  for (const auto& comp : components(g, {center})) {
    cls.roles[blade_role("blade", j, "_a")] = comp[0];
    cls.roles[blade_role("blade", j, "_b")] = comp[1];
    ++j;
  }
  return cls;
}

// Exact match against the triangle-core family: a triangle whose removal
// leaves 2-vertex blades, each fully joined to exactly one core vertex.
std::optional<FamilyClass> match_a1(const Graph& g) {
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        std::map<int, std::vector<std::pair<int, int>>> blades;  // hub -> pairs
        bool ok = true;
        for (const auto& comp : components(g, make_vertex_set({a, b, c}))) {
          if (comp.size() != 2) { ok = false; break; }
          int x = comp[0], y = comp[1];
          VertexSet hx = set_difference(g.neighbors(x), {y});
          VertexSet hy = set_difference(g.neighbors(y), {x});
          if (hx.size() != 1 || hx != hy) { ok = false; break; }
          int hub = hx[0];
          if (hub != a && hub != b && hub != c) { ok = false; break; }
          blades[hub].emplace_back(x, y);
        }
        if (!ok) continue;
        // order hubs by blade count descending, then id
        std::vector<std::pair<int, int>> hubs;  // (-count, id)
        for (int h : {a, b, c})
          hubs.emplace_back(-static_cast<int>(blades[h].size()), h);
        std::sort(hubs.begin(), hubs.end());
        FamilyClass cls;
        int counts[3];
        const char* groups[3] = {"L1_", "L2_", "L3_"};
        const char* ends_a[3] = {"_a", "_v1", "_a"};
        const char* ends_b[3] = {"_b", "_v3", "_b"};
        for (int i = 0; i < 3; ++i) {
          int h = hubs[i].second;
          counts[i] = -hubs[i].first;
          cls.roles["u" + std::to_string(i + 1)] = h;
          int j = 1;
          for (auto [x, y] : blades[h]) {
            cls.roles[blade_role(groups[i], j, ends_a[i])] = x;
            cls.roles[blade_role(groups[i], j, ends_b[i])] = y;
            ++j;
          }
        }
        cls.s1 = counts[0];
        cls.s2 = counts[1];
        cls.s3 = counts[2];
        if (cls.s1 + cls.s2 + cls.s3 < 3) continue;
        int mn = cls.s3;
        cls.tag = mn <= 1   ? FamilyTag::G1_MIN_LE1
                  : mn == 2 ? FamilyTag::G1_MIN_EQ2
                            : FamilyTag::G1_MIN_GE3;
        return cls;
      }
    }
  return std::nullopt;
}

// Blade classification for the path-core family: every residual pair sits
// between the two outer core vertices; s-counts follow from which hubs the
// pair touches.
std::optional<FamilyClass> match_a2_range(const Graph& g) {
  int n = g.vertex_count();
  for (int u2 = 0; u2 < n; ++u2) {
    if (g.degree(u2) != 2) continue;
    int p = g.neighbors(u2)[0], q = g.neighbors(u2)[1];
    for (int flip = 0; flip < 2; ++flip) {
      int u1 = flip ? q : p, u3 = flip ? p : q;
      std::vector<std::pair<int, int>> l1, l3;
      std::vector<std::pair<int, int>> l2;  // (v1, v3)
      bool ok = true;
      for (const auto& comp : components(g, make_vertex_set({u1, u2, u3}))) {
        if (comp.size() != 2) { ok = false; break; }
        int x = comp[0], y = comp[1];
        bool x1 = g.adjacent(x, u1), x3 = g.adjacent(x, u3);
        bool y1 = g.adjacent(y, u1), y3 = g.adjacent(y, u3);
        if (x1 && y1 && !x3 && !y3) l1.emplace_back(x, y);
        else if (x3 && y3 && !x1 && !y1) l3.emplace_back(x, y);
        else if (x1 && y3) l2.emplace_back(x, y);
        else if (y1 && x3) l2.emplace_back(y, x);
        else { ok = false; break; }
      }
      if (!ok) continue;
      int s1 = static_cast<int>(l1.size());
      int s2 = static_cast<int>(l2.size());
      int s3 = static_cast<int>(l3.size());
      if (s2 < 1 || s1 + s2 + s3 < 3) continue;
      if (s2 < 2 && !(s1 >= 1 && s3 >= 1)) continue;
      if (s1 < s3) continue;  // canonical orientation has s1 >= s3
      FamilyClass cls;
      cls.tag = FamilyTag::G2;
      cls.s1 = s1;
      cls.s2 = s2;
      cls.s3 = s3;
      cls.roles["u1"] = u1;
      cls.roles["u2"] = u2;
      cls.roles["u3"] = u3;
      for (int j = 1; j <= s1; ++j) {
        cls.roles[blade_role("L1_", j, "_a")] = l1[j - 1].first;
        cls.roles[blade_role("L1_", j, "_b")] = l1[j - 1].second;
      }
      for (int j = 1; j <= s2; ++j) {
        cls.roles[blade_role("L2_", j, "_v1")] = l2[j - 1].first;
        cls.roles[blade_role("L2_", j, "_v3")] = l2[j - 1].second;
      }
      for (int j = 1; j <= s3; ++j) {
        cls.roles[blade_role("L3_", j, "_a")] = l3[j - 1].first;
        cls.roles[blade_role("L3_", j, "_b")] = l3[j - 1].second;
      }
      return cls;
    }
  }
  return std::nullopt;
}

// Five-vertex core between the prime cycle and K5, plus pendant blades on
// one hub.
std::optional<FamilyClass> match_a3_range(const Graph& g) {
  int n = g.vertex_count();
  if (n < 9 || (n - 5) % 2 != 0) return std::nullopt;
  int want = (n - 5) / 2;
  if (want < 2) return std::nullopt;
  for (int u1 = 0; u1 < n; ++u1) {
    std::vector<std::pair<int, int>> blades;
    for (const auto& [x, y] : g.edges()) {
      if (g.degree(x) != 2 || g.degree(y) != 2) continue;
      VertexSet hx = set_difference(g.neighbors(x), {y});
      VertexSet hy = set_difference(g.neighbors(y), {x});
      if (hx.size() == 1 && hx == hy && hx[0] == u1) blades.emplace_back(x, y);
    }
    if (static_cast<int>(blades.size()) != want) continue;
    std::vector<char> in_core(n, 1);
    for (auto [x, y] : blades) in_core[x] = in_core[y] = 0;
    VertexSet core;
    for (int v = 0; v < n; ++v)
      if (in_core[v]) core.push_back(v);
    if (core.size() != 5 || !set_contains(core, u1)) continue;
    VertexSet rest = set_difference(core, {u1});
    std::sort(rest.begin(), rest.end());
    do {
      int u2 = rest[0], u3 = rest[1], v11 = rest[2], v31 = rest[3];
      if (!g.adjacent(u1, u2) || !g.adjacent(u2, u3) || !g.adjacent(u1, v11) ||
          !g.adjacent(v11, v31) || !g.adjacent(u3, v31))
        continue;
      FamilyClass cls;
      cls.tag = FamilyTag::G3;
      cls.s1 = want;
      cls.s2 = 1;
      cls.roles = {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"L2_1_v1", v11}, {"L2_1_v3", v31}};
      for (int j = 1; j <= want; ++j) {
        cls.roles[blade_role("L1_", j, "_a")] = blades[j - 1].first;
        cls.roles[blade_role("L1_", j, "_b")] = blades[j - 1].second;
      }
      return cls;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return std::nullopt;
}

// Path core plus a 4-vertex tail path (two linked blades) and pendant
// blades on the far hub.
std::optional<FamilyClass> match_a4_range(const Graph& g) {
  int n = g.vertex_count();
  if (n < 9 || (n - 7) % 2 != 0) return std::nullopt;
  int want = (n - 7) / 2;
  if (want < 1) return std::nullopt;
  for (int u2 = 0; u2 < n; ++u2) {
    if (g.degree(u2) != 2) continue;
    int p = g.neighbors(u2)[0], q = g.neighbors(u2)[1];
    for (int flip = 0; flip < 2; ++flip) {
      int u1 = flip ? q : p, u3 = flip ? p : q;
      std::vector<std::pair<int, int>> blades;
      VertexSet tail;
      bool ok = true;
      for (const auto& comp : components(g, make_vertex_set({u1, u2, u3}))) {
        if (comp.size() == 2) blades.emplace_back(comp[0], comp[1]);
        else if (comp.size() == 4 && tail.empty()) tail = comp;
        else { ok = false; break; }
      }
      if (!ok || tail.empty() || static_cast<int>(blades.size()) != want) continue;
      // the tail must induce a path; ends hang on u1, middles on u3
      std::vector<int> ends, mids;
      for (int v : tail) {
        int inside = 0;
        for (int w : g.neighbors(v))
          if (set_contains(tail, w)) ++inside;
        if (inside == 1) ends.push_back(v);
        else if (inside == 2) mids.push_back(v);
        else { ok = false; break; }
      }
      if (!ok || ends.size() != 2 || mids.size() != 2) continue;
      int v11 = ends[0];
      int v31 = -1;
      for (int w : g.neighbors(v11))
        if (set_contains(tail, w)) v31 = w;
      int v32 = mids[0] == v31 ? mids[1] : mids[0];
      int v12 = ends[1];
      auto exact = [&](int v, std::initializer_list<int> req,
                       std::initializer_list<int> opt) {
        VertexSet need = make_vertex_set(req);
        VertexSet may = make_vertex_set(opt);
        for (int w : g.neighbors(v)) {
          if (set_contains(need, w)) continue;
          if (set_contains(may, w)) continue;
          return false;
        }
        for (int w : need)
          if (!g.adjacent(v, w)) return false;
        return true;
      };
      if (!exact(v11, {v31, u1}, {})) continue;
      if (!exact(v12, {v32, u1}, {})) continue;
      if (!exact(v31, {v11, v32, u3}, {u1})) continue;
      if (!exact(v32, {v12, v31, u3}, {u1})) continue;
      bool blades_ok = true;
      for (auto [x, y] : blades)
        if (!exact(x, {y, u1}, {}) || !exact(y, {x, u1}, {})) {
          blades_ok = false;
          break;
        }
      if (!blades_ok) continue;
      FamilyClass cls;
      cls.tag = FamilyTag::G4;
      cls.s1 = want;
      cls.s2 = 2;
      cls.roles = {{"u1", u1},      {"u2", u2},      {"u3", u3},
                   {"L2_1_v1", v11}, {"L2_1_v3", v31},
                   {"L2_2_v1", v12}, {"L2_2_v3", v32}};
      for (int j = 1; j <= want; ++j) {
        cls.roles[blade_role("L1_", j, "_a")] = blades[j - 1].first;
        cls.roles[blade_role("L1_", j, "_b")] = blades[j - 1].second;
      }
      return cls;
    }
  }
  return std::nullopt;
}

}  // namespace

FamilyClass classify_no_factor(const Graph& g, int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("classify_no_factor: k must be 3 or 4");
  int n = g.vertex_count();
  if (!is_factor_critical(g))
    throw std::domain_error("classify_no_factor: graph must be factor-critical");
  FamilyClass cls;
  if (n <= 5) {
    cls.tag = FamilyTag::SMALL_3_5;
    return cls;
  }
  if (k == 3) {
    if (auto center = k1_sk2_center(g)) return make_g0(g, *center);
    cls.tag = FamilyTag::HAS_FACTOR;
    return cls;
  }
  if (n == 7) {
    if (auto center = k1_sk2_center(g)) return make_g0(g, *center);
    cls.tag = FamilyTag::ORDER7_NONSPECIAL;
    return cls;
  }
  if (auto got = match_a1(g)) return *got;
  if (auto got = match_a2_range(g)) return *got;
  if (auto got = match_a3_range(g)) return *got;
  if (auto got = match_a4_range(g)) return *got;
  cls.tag = FamilyTag::HAS_FACTOR;
  return cls;
}

VertexSet crush_set(const Graph& g, const FamilyClass& cls) {
  auto role = [&](const std::string& name) {
    auto it = cls.roles.find(name);
    if (it == cls.roles.end())
      throw std::domain_error("crush_set: class is missing role " + name);
    return it->second;
  };
  std::vector<int> x;
  switch (cls.tag) {
    case FamilyTag::G0:
      x.push_back(role("cutvertex"));
      for (int j = 1; j <= cls.s; ++j) x.push_back(role(blade_role("blade", j, "_a")));
      break;
    case FamilyTag::G1_MIN_LE1:
    case FamilyTag::G1_MIN_EQ2:
      x.push_back(role("u1"));
      x.push_back(role("u2"));
      for (int j = 1; j <= cls.s1; ++j) x.push_back(role(blade_role("L1_", j, "_a")));
      for (int j = 1; j <= cls.s2; ++j) x.push_back(role(blade_role("L2_", j, "_v1")));
      break;
    case FamilyTag::G1_MIN_GE3:
      x.push_back(role("u1"));
      x.push_back(role("u2"));
      x.push_back(role("u3"));
      for (int j = 1; j <= cls.s1; ++j) x.push_back(role(blade_role("L1_", j, "_a")));
      for (int j = 1; j <= cls.s2; ++j) x.push_back(role(blade_role("L2_", j, "_v1")));
      for (int j = 1; j <= cls.s3; ++j) x.push_back(role(blade_role("L3_", j, "_a")));
      break;
    case FamilyTag::G2:
      x.push_back(role("u1"));
      x.push_back(role("u3"));
      for (int j = 1; j <= cls.s1; ++j) x.push_back(role(blade_role("L1_", j, "_a")));
      for (int j = 1; j <= cls.s2; ++j) x.push_back(role(blade_role("L2_", j, "_v1")));
      for (int j = 1; j <= cls.s3; ++j) x.push_back(role(blade_role("L3_", j, "_a")));
      break;
    case FamilyTag::G3:
      x.push_back(role("u1"));
      x.push_back(role("u3"));
      for (int j = 1; j <= cls.s1; ++j) x.push_back(role(blade_role("L1_", j, "_a")));
      break;
    case FamilyTag::G4:
      x.push_back(role("u1"));
      x.push_back(role("u3"));
      x.push_back(role("L2_1_v3"));
      x.push_back(role("L2_2_v3"));
      for (int j = 1; j <= cls.s1; ++j) x.push_back(role(blade_role("L1_", j, "_a")));
      break;
    default:
      throw std::domain_error("crush_set: class " + family_tag_name(cls.tag) +
                              " has no crush set");
  }
  VertexSet out = make_vertex_set(std::move(x));
  check_vertex_set(g, out);
  return out;
}

}  // namespace pf
