#include "pf/generators.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "pf/common.hpp"
#include "pf/matching.hpp"

namespace pf {

namespace {

using Edges = std::vector<std::pair<int, int>>;
using Roles = std::vector<std::pair<std::string, int>>;

void spec_check(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("family spec: " + msg);
}

std::string tag(const std::string& base, int j, const std::string& suffix) {
  return base + std::to_string(j) + suffix;
}

// Shared A-family skeleton. Vertex layout: u1=0, u2=1, u3=2, then the
// L2 pairs (v1,j then v3,j), then L1 pairs, then L3 pairs.
struct ABase {
  int s1, s2, s3;
  Edges edges;
  Roles roles;
  int l1_at, l2_at, l3_at;  // first id of each blade group

  ABase(int a1, int a2, int a3) : s1(a1), s2(a2), s3(a3) {
    roles = {{"u1", 0}, {"u2", 1}, {"u3", 2}};
    edges = {{0, 1}, {1, 2}};  // the Q path
    l2_at = 3;
    l1_at = l2_at + 2 * s2;
    l3_at = l1_at + 2 * s1;
    for (int j = 0; j < s2; ++j) {
      int a = l2_at + 2 * j, b = a + 1;
      edges.emplace_back(a, b);
      roles.emplace_back(tag("L2_", j + 1, "_v1"), a);
      roles.emplace_back(tag("L2_", j + 1, "_v3"), b);
    }
    for (int j = 0; j < s1; ++j) {
      int a = l1_at + 2 * j, b = a + 1;
      edges.emplace_back(a, b);
      roles.emplace_back(tag("L1_", j + 1, "_a"), a);
      roles.emplace_back(tag("L1_", j + 1, "_b"), b);
    }
    for (int j = 0; j < s3; ++j) {
      int a = l3_at + 2 * j, b = a + 1;
      edges.emplace_back(a, b);
      roles.emplace_back(tag("L3_", j + 1, "_a"), a);
      roles.emplace_back(tag("L3_", j + 1, "_b"), b);
    }
  }

  int order() const { return 3 + 2 * (s1 + s2 + s3); }
  int v1(int j) const { return l2_at + 2 * j; }  // j is 0-based here
  int v3(int j) const { return l2_at + 2 * j + 1; }
};

Edges a2_core(const ABase& b) {
  Edges e = b.edges;
  for (int j = 0; j < b.s1; ++j) {
    e.emplace_back(0, b.l1_at + 2 * j);
    e.emplace_back(0, b.l1_at + 2 * j + 1);
  }
  for (int j = 0; j < b.s3; ++j) {
    e.emplace_back(2, b.l3_at + 2 * j);
    e.emplace_back(2, b.l3_at + 2 * j + 1);
  }
  for (int j = 0; j < b.s2; ++j) {
    e.emplace_back(0, b.v1(j));
    e.emplace_back(2, b.v3(j));
  }
  return e;
}

void check_a2_range(int s1, int s2, int s3) {
  spec_check(s1 >= 0 && s2 >= 0 && s3 >= 0, "A2 blade counts must be nonnegative");
  spec_check(s2 >= 1, "A2 family requires s2 >= 1");
  spec_check(s1 + s2 + s3 >= 3, "A2 family requires s1+s2+s3 >= 3");
  spec_check(s2 >= 2 || (s1 >= 1 && s3 >= 1),
             "A2 family requires s2 >= 2 or both s1 >= 1 and s3 >= 1");
}

Edges selected_extras(const FamilySpec& spec, const Edges& optional_edges) {
  if (spec.extra_edge_mask && spec.extra_edge_seed)
    throw std::invalid_argument("family spec: give an extra-edge mask or seed, not both");
  Edges out;
  if (spec.extra_edge_mask) {
    std::uint64_t mask = *spec.extra_edge_mask;
    spec_check(optional_edges.size() >= 64 || mask < (1ull << optional_edges.size()),
               "extra-edge mask wider than the optional edge list");
    for (size_t i = 0; i < optional_edges.size(); ++i)
      if (mask & (1ull << i)) out.push_back(optional_edges[i]);
  } else if (spec.extra_edge_seed) {
    std::mt19937 rng(*spec.extra_edge_seed);
    for (const auto& e : optional_edges)
      if (rng() & 1u) out.push_back(e);
  }
  return out;
}

GeneratedGraph gen_a1(const FamilySpec& spec) {
  spec_check(spec.s1 >= 0 && spec.s2 >= 0 && spec.s3 >= 0,
             "A1 blade counts must be nonnegative");
  spec_check(spec.s1 + spec.s2 + spec.s3 >= 1, "A1 family requires s1+s2+s3 >= 1");
  ABase b(spec.s1, spec.s2, spec.s3);
  Edges e = b.edges;
  e.emplace_back(0, 2);
  int hubs[3] = {0, 1, 2};
  int starts[3] = {b.l1_at, b.l2_at, b.l3_at};
  int counts[3] = {b.s1, b.s2, b.s3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < counts[i]; ++j) {
      e.emplace_back(hubs[i], starts[i] + 2 * j);
      e.emplace_back(hubs[i], starts[i] + 2 * j + 1);
    }
  return {Graph(b.order(), std::move(e)), b.roles};
}

GeneratedGraph gen_a2(const FamilySpec& spec, bool full) {
  check_a2_range(spec.s1, spec.s2, spec.s3);
  ABase b(spec.s1, spec.s2, spec.s3);
  Edges e = a2_core(b);
  Edges opt = ranged_optional_edges(spec);
  if (full) {
    e.insert(e.end(), opt.begin(), opt.end());
  } else {
    Edges extra = selected_extras(spec, opt);
    e.insert(e.end(), extra.begin(), extra.end());
  }
  return {Graph(b.order(), std::move(e)), b.roles};
}

GeneratedGraph gen_a3(const FamilySpec& spec, bool full) {
  spec_check(spec.s1 >= 2, "A3 family requires s1 >= 2");
  ABase b(spec.s1, 1, 0);
  Edges e = a2_core(b);
  Edges opt = ranged_optional_edges(spec);
  if (full) {
    e.insert(e.end(), opt.begin(), opt.end());
  } else {
    Edges extra = selected_extras(spec, opt);
    e.insert(e.end(), extra.begin(), extra.end());
  }
  return {Graph(b.order(), std::move(e)), b.roles};
}

GeneratedGraph gen_a4(const FamilySpec& spec, bool full) {
  spec_check(spec.s1 >= 1, "A4 family requires s1 >= 1");
  ABase b(spec.s1, 2, 0);
  Edges e = a2_core(b);
  e.emplace_back(b.v3(0), b.v3(1));
  Edges opt = ranged_optional_edges(spec);
  if (full) {
    e.insert(e.end(), opt.begin(), opt.end());
  } else {
    Edges extra = selected_extras(spec, opt);
    e.insert(e.end(), extra.begin(), extra.end());
  }
  return {Graph(b.order(), std::move(e)), b.roles};
}

GeneratedGraph gen_k1_sk2(const FamilySpec& spec) {
  spec_check(spec.s >= 2, "K1+sK2 family requires s >= 2");
  Edges e;
  Roles roles{{"cutvertex", 0}};
  for (int j = 0; j < spec.s; ++j) {
    int a = 1 + 2 * j, b = a + 1;
    e.emplace_back(a, b);
    e.emplace_back(0, a);
    e.emplace_back(0, b);
    roles.emplace_back(tag("blade", j + 1, "_a"), a);
    roles.emplace_back(tag("blade", j + 1, "_b"), b);
  }
  return {Graph(1 + 2 * spec.s, std::move(e)), roles};
}

GeneratedGraph gen_hn(const FamilySpec& spec) {
  spec_check(spec.n >= 1, "Hn family requires n >= 1");
  int n = spec.n;
  int blocks = 2 * n + 1;
  int total = n + 9 * blocks;
  Edges e;
  Roles roles;
  for (int i = 0; i < n; ++i) {
    roles.emplace_back(tag("R0_", i, ""), i);
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  for (int b = 1; b <= blocks; ++b) {
    int base = n + 9 * (b - 1);
    roles.emplace_back(tag("R", b, "_cut"), base);
    for (int t = 0; t < 4; ++t)
      roles.emplace_back(tag("R", b, "_k4_" + std::to_string(t)), base + 1 + t);
    roles.emplace_back(tag("R", b, "_b1_a"), base + 5);
    roles.emplace_back(tag("R", b, "_b1_b"), base + 6);
    roles.emplace_back(tag("R", b, "_b2_a"), base + 7);
    roles.emplace_back(tag("R", b, "_b2_b"), base + 8);
    for (int t = 1; t <= 8; ++t) e.emplace_back(base, base + t);  // K1 join
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j) e.emplace_back(base + i, base + j);
    e.emplace_back(base + 5, base + 6);
    e.emplace_back(base + 7, base + 8);
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < 9; ++t) e.emplace_back(i, base + t);  // core join
  }
  return {Graph(total, std::move(e)), roles};
}

Roles shift_roles(const Roles& roles, const std::string& prefix, int offset) {
  Roles out;
  for (const auto& [name, id] : roles) out.emplace_back(prefix + name, id + offset);
  return out;
}

GeneratedGraph gen_kn_plus_copies(const FamilySpec& spec) {
  spec_check(spec.n >= 1, "Kn+copies family requires core n >= 1");
  spec_check(spec.copy != nullptr, "Kn+copies family requires a copy spec");
  int copies = spec.copies > 0 ? spec.copies : 2 * spec.n + 1;
  GeneratedGraph block = generate(*spec.copy);
  int bs = block.graph.vertex_count();
  spec_check(bs >= 1, "Kn+copies block must be nonempty");
  Edges e;
  Roles roles;
  for (int i = 0; i < spec.n; ++i) {
    roles.emplace_back(tag("R0_", i, ""), i);
    for (int j = i + 1; j < spec.n; ++j) e.emplace_back(i, j);
  }
  for (int b = 0; b < copies; ++b) {
    int base = spec.n + bs * b;
    for (auto [u, v] : block.graph.edges()) e.emplace_back(base + u, base + v);
    for (int i = 0; i < spec.n; ++i)
      for (int t = 0; t < bs; ++t) e.emplace_back(i, base + t);
    Roles sub = shift_roles(block.roles, "C" + std::to_string(b + 1) + "_", base);
    roles.insert(roles.end(), sub.begin(), sub.end());
  }
  return {Graph(spec.n + bs * copies, std::move(e)), roles};
}

}  // namespace

std::vector<std::pair<int, int>> ranged_optional_edges(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::A2_PRIME:
    case Family::A2_DPRIME: {
      check_a2_range(spec.s1, spec.s2, spec.s3);
      ABase b(spec.s1, spec.s2, spec.s3);
      Edges opt{{0, 2}};
      for (int j = 0; j < spec.s2; ++j) {
        opt.emplace_back(0, b.v3(j));
        opt.emplace_back(2, b.v1(j));
      }
      return opt;
    }
    case Family::A3_PRIME:
    case Family::A3_DPRIME:
      spec_check(spec.s1 >= 2, "A3 family requires s1 >= 2");
      // completes {u1,u2,u3,v11,v31} to K5
      return {{0, 2}, {0, 4}, {1, 3}, {1, 4}, {2, 3}};
    case Family::A4_PRIME:
    case Family::A4_DPRIME:
      spec_check(spec.s1 >= 1, "A4 family requires s1 >= 1");
      return {{0, 2}, {0, 4}, {0, 6}};
    default:
      throw std::invalid_argument("family spec: no optional edge range for this family");
  }
}

GeneratedGraph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::KN: {
      spec_check(spec.n >= 1, "Kn requires n >= 1");
      Edges e;
      for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) e.emplace_back(i, j);
      return {Graph(spec.n, std::move(e)), {}};
    }
    case Family::PN: {
      spec_check(spec.n >= 1, "Pn requires n >= 1");
      Edges e;
      for (int i = 0; i + 1 < spec.n; ++i) e.emplace_back(i, i + 1);
      return {Graph(spec.n, std::move(e)), {}};
    }
    case Family::CN: {
      spec_check(spec.n >= 3, "Cn requires n >= 3");
      Edges e;
      for (int i = 0; i < spec.n; ++i) e.emplace_back(i, (i + 1) % spec.n);
      return {Graph(spec.n, std::move(e)), {}};
    }
    case Family::JOIN:
    case Family::UNION: {
      spec_check(spec.left && spec.right, "join/union require two operands");
      GeneratedGraph a = generate(*spec.left), b = generate(*spec.right);
      Graph g = spec.family == Family::JOIN ? graph_join(a.graph, b.graph)
                                            : graph_disjoint_union(a.graph, b.graph);
      Roles roles = shift_roles(a.roles, "L_", 0);
      Roles rr = shift_roles(b.roles, "R_", a.graph.vertex_count());
      roles.insert(roles.end(), rr.begin(), rr.end());
      return {std::move(g), std::move(roles)};
    }
    case Family::K1_SK2:
      return gen_k1_sk2(spec);
    case Family::A1:
      return gen_a1(spec);
    case Family::A2_PRIME:
      return gen_a2(spec, false);
    case Family::A2_DPRIME:
      return gen_a2(spec, true);
    case Family::A3_PRIME:
      return gen_a3(spec, false);
    case Family::A3_DPRIME:
      return gen_a3(spec, true);
    case Family::A4_PRIME:
      return gen_a4(spec, false);
    case Family::A4_DPRIME:
      return gen_a4(spec, true);
    case Family::HN_SHARP:
      return gen_hn(spec);
    case Family::KN_PLUS_COPIES:
      return gen_kn_plus_copies(spec);
  }
  throw std::invalid_argument("family spec: unknown family");
}

Graph graph_join(const Graph& a, const Graph& b) {
  int na = a.vertex_count(), nb = b.vertex_count();
  Edges e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(na + u, na + v);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) e.emplace_back(i, na + j);
  return Graph(na + nb, std::move(e));
}

Graph graph_disjoint_union(const Graph& a, const Graph& b) {
  int na = a.vertex_count();
  Edges e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(na + u, na + v);
  return Graph(na + b.vertex_count(), std::move(e));
}

Graph random_factor_critical(int order, std::uint32_t seed) {
  if (order < 1 || order % 2 == 0)
    throw std::invalid_argument("random_factor_critical: order must be odd and positive");
  if (order == 1) return Graph(1, {});
  std::mt19937 rng(seed);
  auto pick = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint32_t>(hi - lo + 1));
  };
  int cycle_len = 3 + 2 * pick(0, (order - 3) / 2);
  Edges e;
  for (int i = 0; i < cycle_len; ++i) e.emplace_back(i, (i + 1) % cycle_len);
  int used = cycle_len;
  while (used < order) {
    int remaining = order - used;
    int fresh = 2 * pick(1, remaining / 2);
    bool cycle_ear = rng() & 1u;
    int attach_a = pick(0, used - 1);
    int prev = attach_a;
    for (int t = 0; t < fresh; ++t) {
      e.emplace_back(prev, used + t);
      prev = used + t;
    }
    if (cycle_ear) {
      e.emplace_back(prev, attach_a);
    } else {
      int attach_b = pick(0, used - 2);
      if (attach_b >= attach_a) ++attach_b;  // distinct endpoints
      e.emplace_back(prev, attach_b);
    }
    used += fresh;
  }
  // sprinkle extra edges; hypomatchability survives edge addition
  Graph g(order, e);
  int extras = pick(0, order / 2);
  for (int t = 0; t < extras; ++t) {
    int u = pick(0, order - 1), v = pick(0, order - 1);
    if (u == v || g.adjacent(u, v)) continue;
    e.emplace_back(u, v);
    g = Graph(order, e);
  }
  if (!is_factor_critical(g))
    throw std::logic_error("random_factor_critical: ear structure not critical");
  return g;
}

namespace {

FamilySpec parse_spec_inner(const std::string& text, size_t& pos);

std::string take_ident(const std::string& text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                               text[pos] == '_'))
    ++pos;
  if (pos == start) throw std::invalid_argument("family spec: expected name in '" + text + "'");
  return text.substr(start, pos - start);
}

int take_int(const std::string& text, size_t& pos) {
  size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("family spec: expected number in '" + text + "'");
  return std::stoi(text.substr(start, pos - start));
}

void expect(const std::string& text, size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c)
    throw std::invalid_argument(std::string("family spec: expected '") + c + "' in '" + text + "'");
  ++pos;
}

std::vector<int> take_params(const std::string& text, size_t& pos) {
  expect(text, pos, ':');
  std::vector<int> out{take_int(text, pos)};
  // a comma only continues the list when a number follows; otherwise it
  // separates the arguments of an enclosing join/union/kncopies
  while (pos + 1 < text.size() && text[pos] == ',' &&
         std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
    ++pos;
    out.push_back(take_int(text, pos));
  }
  return out;
}

FamilySpec parse_spec_inner(const std::string& text, size_t& pos) {
  std::string name = take_ident(text, pos);
  FamilySpec spec;
  if (name == "join" || name == "union") {
    spec.family = name == "join" ? Family::JOIN : Family::UNION;
    expect(text, pos, '(');
    spec.left = std::make_shared<FamilySpec>(parse_spec_inner(text, pos));
    expect(text, pos, ',');
    spec.right = std::make_shared<FamilySpec>(parse_spec_inner(text, pos));
    expect(text, pos, ')');
    return spec;
  }
  if (name == "kncopies") {
    spec.family = Family::KN_PLUS_COPIES;
    expect(text, pos, '(');
    spec.n = take_int(text, pos);
    expect(text, pos, ',');
    spec.copies = take_int(text, pos);
    expect(text, pos, ',');
    spec.copy = std::make_shared<FamilySpec>(parse_spec_inner(text, pos));
    expect(text, pos, ')');
    return spec;
  }
  std::vector<int> p = take_params(text, pos);
  auto want = [&](size_t k, const std::string& what) {
    if (p.size() != k)
      throw std::invalid_argument("family spec: " + name + " takes " + what);
  };
  if (name == "kn") { want(1, "1 parameter"); spec.family = Family::KN; spec.n = p[0]; }
  else if (name == "pn") { want(1, "1 parameter"); spec.family = Family::PN; spec.n = p[0]; }
  else if (name == "cn") { want(1, "1 parameter"); spec.family = Family::CN; spec.n = p[0]; }
  else if (name == "k1sk2") { want(1, "1 parameter"); spec.family = Family::K1_SK2; spec.s = p[0]; }
  else if (name == "hn") { want(1, "1 parameter"); spec.family = Family::HN_SHARP; spec.n = p[0]; }
  else if (name == "a1") {
    want(3, "3 parameters");
    spec.family = Family::A1;
    spec.s1 = p[0]; spec.s2 = p[1]; spec.s3 = p[2];
  } else if (name == "a2p" || name == "a2pp") {
    want(3, "3 parameters");
    spec.family = name == "a2p" ? Family::A2_PRIME : Family::A2_DPRIME;
    spec.s1 = p[0]; spec.s2 = p[1]; spec.s3 = p[2];
  } else if (name == "a3p" || name == "a3pp") {
    want(1, "1 parameter");
    spec.family = name == "a3p" ? Family::A3_PRIME : Family::A3_DPRIME;
    spec.s1 = p[0];
  } else if (name == "a4p" || name == "a4pp") {
    want(1, "1 parameter");
    spec.family = name == "a4p" ? Family::A4_PRIME : Family::A4_DPRIME;
    spec.s1 = p[0];
  } else {
    throw std::invalid_argument("family spec: unknown family '" + name + "'");
  }
  return spec;
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
  size_t pos = 0;
  FamilySpec spec = parse_spec_inner(text, pos);
  if (pos != text.size())
    throw std::invalid_argument("family spec: trailing characters in '" + text + "'");
  return spec;
}

}  // namespace pf
