#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "pf/factor.hpp"
#include "pf/graph.hpp"
#include "pf/rational.hpp"

namespace pf {

// Component-counting condition: sum of weights[j]*c_j(G-X) over odd j must
// stay at most slope*|X| + offset for every X.
struct ConditionSpec {
  std::map<int, Rational> weights;
  Rational slope;
  Rational offset;
};

// Named shapes: "thmA", "thmB", "thm13", "thm14", "lemma61", "conjecture:<k>".
ConditionSpec preset_condition(const std::string& name);

// Necessary condition for a {P2,P(2k+1)}-factor:
// sum over 0<=i<k of (k-i)*c_(2i+1)(G-X) <= (k+1)|X|.
ConditionSpec necessary_condition(int k);

enum class Verdict { HOLDS_EXHAUSTIVE, VIOLATED, HOLDS_SAMPLED };

std::string verdict_name(Verdict v);

struct ConditionReport {
  Verdict verdict = Verdict::HOLDS_EXHAUSTIVE;
  std::optional<ConditionCertificate> witness;
  // exhaustive: subsets evaluated (position of the first violation in
  // ascending-bitmask order when VIOLATED); sampled: candidates tested.
  std::uint64_t subsets_checked = 0;
};

struct ExhaustiveMode {
  int budget = 22;
};
struct SampledMode {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};
using CheckMode = std::variant<ExhaustiveMode, SampledMode>;

// Exhaustive scans all 2^n subsets ascending (parallel for larger n, first
// violation by mask order wins). Sampled tries structured candidates (empty
// set, closed neighborhoods, barrier, crush sets and their unions) and then
// random subsets; HOLDS_SAMPLED is not a proof.
ConditionReport check_condition(const Graph& g, const ConditionSpec& spec,
                                const CheckMode& mode);

ConditionReport check_necessary(const Graph& g, int k, const CheckMode& mode);

struct CrossCheckReport {
  Verdict sufficient = Verdict::HOLDS_EXHAUSTIVE;
  bool builder_factor = false;
  bool oracle_factor = false;
  Verdict necessary = Verdict::HOLDS_EXHAUSTIVE;
  bool consistent = true;
  std::string broken_link;
};

// Runs the implication chain sufficient-condition => builder factor =>
// oracle factor => necessary condition and reports the first broken link.
CrossCheckReport cross_check(const Graph& g, int k);

}  // namespace pf
