#include "pf/conditions.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pf/common.hpp"
#include "pf/hypomatchable.hpp"
#include "pf/matching.hpp"

namespace pf {

namespace {

void require_valid(const ConditionSpec& spec) {
  for (const auto& [order, w] : spec.weights) {
    if (order < 1 || order % 2 == 0)
      throw std::invalid_argument("condition weights must key odd orders");
    if (w < Rational(0))
      throw std::invalid_argument("condition weights must be nonnegative");
  }
}

// Bitmask evaluator for n <= 63: components of G - X by word operations,
// weights folded in ascending component order, early exit once lhs > rhs.
struct MaskScanner {
  int n;
  std::vector<std::uint64_t> adj;
  std::vector<Rational> weight;  // by order, zero when absent
  std::vector<char> hot;
  Rational slope;
  Rational offset;

  MaskScanner(const Graph& g, const ConditionSpec& spec)
      : n(g.vertex_count()),
        adj(g.vertex_count(), 0),
        weight(g.vertex_count() + 1),
        hot(g.vertex_count() + 1, 0),
        slope(spec.slope),
        offset(spec.offset) {
    for (int v = 0; v < n; ++v)
      for (int u : g.neighbors(v)) adj[v] |= std::uint64_t{1} << u;
    for (const auto& [order, w] : spec.weights) {
      if (order <= n && !(w == Rational(0))) {
        weight[order] = w;
        hot[order] = 1;
      }
    }
  }

  bool violates(std::uint64_t mask) const {
    std::uint64_t full = n == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << n) - 1;
    std::uint64_t alive = full & ~mask;
    Rational rhs = slope * Rational(std::popcount(mask)) + offset;
    Rational lhs;
    std::uint64_t todo = alive;
    while (todo != 0) {
      std::uint64_t comp = 0;
      std::uint64_t frontier = todo & (~todo + 1);
      while (frontier != 0) {
        comp |= frontier;
        std::uint64_t next = 0;
        std::uint64_t scan = frontier;
        while (scan != 0) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          next |= adj[v];
        }
        frontier = next & alive & ~comp;
      }
      todo &= ~comp;
      int order = std::popcount(comp);
      if (hot[order]) {
        lhs += weight[order];
        if (rhs < lhs) return true;
      }
    }
    return rhs < lhs;
  }
};

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet x;
  while (mask != 0) {
    x.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return x;
}

// General evaluator for graphs too large for the mask path.
bool set_violates(const Graph& g, const ConditionSpec& spec, const VertexSet& x) {
  Rational rhs = spec.slope * Rational(static_cast<int>(x.size())) + spec.offset;
  Rational lhs;
  for (const VertexSet& comp : components(g, x)) {
    auto it = spec.weights.find(static_cast<int>(comp.size()));
    if (it == spec.weights.end()) continue;
    lhs += it->second;
    if (rhs < lhs) return true;
  }
  return rhs < lhs;
}

ConditionReport exhaustive_check(const Graph& g, const ConditionSpec& spec,
                                 const ExhaustiveMode& mode) {
  int n = g.vertex_count();
  if (n > mode.budget || n > 63)
    throw resource_error("check_condition: exhaustive scan over " +
                         std::to_string(n) + " vertices exceeds the budget");
  MaskScanner scan(g, spec);
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t none = ~std::uint64_t{0};
  std::atomic<std::uint64_t> best(none);

  unsigned workers = std::thread::hardware_concurrency();
  if (workers > 8) workers = 8;
  if (total >= (std::uint64_t{1} << 18) && workers > 1) {
    // contiguous chunks, each scanned ascending; the atomic minimum lets
    // workers past a known violation stop early, so the smallest violating
    // mask always wins
    std::uint64_t per = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = per * w;
      std::uint64_t hi = std::min(total, lo + per);
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
          if (mask > best.load(std::memory_order_relaxed)) return;
          if (!scan.violates(mask)) continue;
          std::uint64_t cur = best.load();
          while (mask < cur && !best.compare_exchange_weak(cur, mask)) {
          }
          return;
        }
      });
    }
    for (auto& t : pool) t.join();
  } else {
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (scan.violates(mask)) {
        best.store(mask);
        break;
      }
    }
  }

  ConditionReport rep;
  std::uint64_t found = best.load();
  if (found == none) {
    rep.verdict = Verdict::HOLDS_EXHAUSTIVE;
    rep.subsets_checked = total;
  } else {
    rep.verdict = Verdict::VIOLATED;
    rep.witness = make_certificate(g, mask_to_set(found), spec.weights,
                                   spec.slope, spec.offset);
    rep.subsets_checked = found + 1;
  }
  return rep;
}

// Deterministic candidates worth testing before random sampling: the sets a
// violation tends to live on.
std::vector<VertexSet> structured_candidates(const Graph& g) {
  int n = g.vertex_count();
  std::vector<VertexSet> out;
  std::set<VertexSet> seen;
  auto push = [&](VertexSet x) {
    if (seen.insert(x).second) out.push_back(std::move(x));
  };

  push({});
  VertexSet all(n);
  for (int v = 0; v < n; ++v) all[v] = v;
  push(all);
  for (int v = 0; v < n; ++v) {
    std::vector<int> closed = g.neighbors(v);
    closed.push_back(v);
    push(make_vertex_set(std::move(closed)));
  }

  BarrierResult br = select_barrier(g);
  push(br.s);
  std::vector<VertexSet> crushes;
  for (const VertexSet& comp : br.comps) {
    InducedGraph sub = induced(g, comp);
    for (int k : {3, 4}) {
      FamilyClass cls{};
      try {
        cls = classify_no_factor(sub.graph, k);
      } catch (const std::domain_error&) {
        continue;
      }
      VertexSet local;
      try {
        local = crush_set(sub.graph, cls);
      } catch (const std::domain_error&) {
        continue;
      }
      std::vector<int> orig;
      for (int v : local) orig.push_back(sub.original_ids[v]);
      crushes.push_back(make_vertex_set(std::move(orig)));
    }
  }
  VertexSet pooled;
  for (const VertexSet& c : crushes) {
    push(c);
    push(set_union(br.s, c));
    pooled = set_union(pooled, c);
  }
  push(pooled);
  push(set_union(br.s, pooled));
  return out;
}

ConditionReport sampled_check(const Graph& g, const ConditionSpec& spec,
                              const SampledMode& mode) {
  int n = g.vertex_count();
  std::optional<MaskScanner> fast;
  if (n <= 63) fast.emplace(g, spec);

  ConditionReport rep;
  auto test = [&](const VertexSet& x) {
    ++rep.subsets_checked;
    bool bad;
    if (fast) {
      std::uint64_t mask = 0;
      for (int v : x) mask |= std::uint64_t{1} << v;
      bad = fast->violates(mask);
    } else {
      bad = set_violates(g, spec, x);
    }
    if (!bad) return false;
    rep.verdict = Verdict::VIOLATED;
    rep.witness = make_certificate(g, x, spec.weights, spec.slope, spec.offset);
    return true;
  };

  for (const VertexSet& x : structured_candidates(g))
    if (test(x)) return rep;

  std::mt19937_64 rng(mode.seed);
  for (std::uint64_t t = 0; t < mode.trials; ++t) {
    VertexSet x;
    if (n <= 63) {
      std::uint64_t mask = rng();
      if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
      x = mask_to_set(mask);
    } else {
      std::uint64_t word = 0;
      int left = 0;
      for (int v = 0; v < n; ++v) {
        if (left == 0) {
          word = rng();
          left = 64;
        }
        if (word & 1) x.push_back(v);
        word >>= 1;
        --left;
      }
    }
    if (test(x)) return rep;
  }

  rep.verdict = Verdict::HOLDS_SAMPLED;
  return rep;
}

}  // namespace

ConditionSpec preset_condition(const std::string& name) {
  ConditionSpec spec;
  if (name == "thmA") {
    spec.weights[1] = Rational(1);
    spec.slope = Rational(2);
  } else if (name == "thmB") {
    spec.weights[1] = Rational(1);
    spec.weights[3] = Rational(2, 3);
    spec.slope = Rational(4, 3);
    spec.offset = Rational(1, 3);
  } else if (name == "thm13") {
    spec.weights[1] = Rational(1);
    spec.weights[3] = Rational(1, 3);
    spec.weights[5] = Rational(1, 3);
    spec.slope = Rational(2, 3);
  } else if (name == "thm14") {
    spec.weights[1] = Rational(1);
    spec.weights[3] = Rational(1);
    spec.weights[5] = Rational(2, 3);
    spec.weights[7] = Rational(1, 3);
    spec.slope = Rational(2, 3);
  } else if (name == "lemma61") {
    for (int order = 1; order <= 7; order += 2) spec.weights[order] = Rational(1);
    spec.slope = Rational(2, 3);
    spec.offset = Rational(1, 3);
  } else if (name.rfind("conjecture:", 0) == 0) {
    int k = 0;
    std::size_t used = 0;
    std::string arg = name.substr(11);
    try {
      k = std::stoi(arg, &used);
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1 || used != arg.size())
      throw std::invalid_argument("unknown condition preset: " + name);
    for (int i = 0; i < k; ++i) spec.weights[2 * i + 1] = Rational(1);
    spec.slope = Rational(4 * k + 6, 8 * k + 3);
  } else {
    throw std::invalid_argument("unknown condition preset: " + name);
  }
  return spec;
}

ConditionSpec necessary_condition(int k) {
  if (k < 1) throw std::invalid_argument("necessary_condition: k must be positive");
  ConditionSpec spec;
  for (int i = 0; i < k; ++i) spec.weights[2 * i + 1] = Rational(k - i);
  spec.slope = Rational(k + 1);
  return spec;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::HOLDS_EXHAUSTIVE:
      return "HOLDS_EXHAUSTIVE";
    case Verdict::VIOLATED:
      return "VIOLATED";
    case Verdict::HOLDS_SAMPLED:
      return "HOLDS_SAMPLED";
  }
  return "UNKNOWN";
}

ConditionReport check_condition(const Graph& g, const ConditionSpec& spec,
                                const CheckMode& mode) {
  require_valid(spec);
  if (const auto* ex = std::get_if<ExhaustiveMode>(&mode))
    return exhaustive_check(g, spec, *ex);
  return sampled_check(g, spec, std::get<SampledMode>(mode));
}

ConditionReport check_necessary(const Graph& g, int k, const CheckMode& mode) {
  return check_condition(g, necessary_condition(k), mode);
}

CrossCheckReport cross_check(const Graph& g, int k) {
  if (k != 3 && k != 4)
    throw std::invalid_argument("cross_check: k must be 3 or 4");
  if (g.vertex_count() > 14)
    throw resource_error("cross_check: exhaustive oracle limited to 14 vertices");

  CrossCheckReport rep;
  ExhaustiveMode full{14};
  rep.sufficient =
      check_condition(g, preset_condition(k == 3 ? "thm13" : "thm14"), full)
          .verdict;
  BuildOutcome out = k == 3 ? build_p2p7(g) : build_p2p9(g);
  rep.builder_factor = out.has_factor();
  rep.oracle_factor = brute_force_factor(g, k).has_value();
  rep.necessary = check_necessary(g, k, full).verdict;

  if (rep.sufficient == Verdict::HOLDS_EXHAUSTIVE && !rep.builder_factor) {
    rep.consistent = false;
    rep.broken_link = "sufficient condition holds but the builder produced no factor";
  } else if (rep.builder_factor && !rep.oracle_factor) {
    rep.consistent = false;
    rep.broken_link = "builder reports a factor but exhaustive search finds none";
  } else if (rep.oracle_factor && rep.necessary == Verdict::VIOLATED) {
    rep.consistent = false;
    rep.broken_link = "a factor exists but the necessary condition fails";
  }
  return rep;
}

}  // namespace pf
