#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pf/conditions.hpp"
#include "pf/factor.hpp"
#include "pf/generators.hpp"
#include "pf/graph.hpp"
#include "pf/hypomatchable.hpp"
#include "pf/matching.hpp"
#include "pf/rational.hpp"

namespace {

void print_ids(std::ostream& os, const std::string& label,
               const std::vector<int>& ids) {
  os << label << ":";
  for (int v : ids) os << " " << v;
  os << "\n";
}

pf::CheckMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return pf::ExhaustiveMode{};
  if (text.rfind("sampled:", 0) == 0) {
    std::string rest = text.substr(8);
    auto colon = rest.find(':');
    pf::SampledMode m;
    try {
      if (colon == std::string::npos) {
        m.trials = std::stoull(rest);
      } else {
        m.trials = std::stoull(rest.substr(0, colon));
        m.seed = std::stoull(rest.substr(colon + 1));
      }
    } catch (const std::exception&) {
      throw CLI::ValidationError("--mode", "expected sampled:<trials>:<seed>");
    }
    return m;
  }
  throw CLI::ValidationError("--mode", "expected exhaustive or sampled:<trials>:<seed>");
}

std::map<int, pf::Rational> parse_weights(const std::string& text) {
  std::map<int, pf::Rational> weights;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--weights", "expected <order>=<p/q>[,...]");
    weights[std::stoi(item.substr(0, eq))] =
        pf::Rational::parse(item.substr(eq + 1));
  }
  return weights;
}

void print_certificate(std::ostream& os, const pf::ConditionCertificate& cert) {
  print_ids(os, "X", cert.x);
  os << "lhs: " << cert.lhs.str() << "\n";
  os << "rhs: " << cert.rhs.str() << "\n";
}

int run_generate(const std::string& family, const std::string& params,
                 bool has_seed, std::uint32_t seed, const std::string& out) {
  std::string text = family;
  if (!params.empty()) text += ":" + params;
  pf::FamilySpec spec = pf::parse_family_spec(text);
  if (has_seed) spec.extra_edge_seed = seed;
  pf::GeneratedGraph gg = pf::generate(spec);
  if (out.empty()) {
    pf::write_graph_text(gg.graph, std::cout, gg.roles);
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    pf::write_graph_text(gg.graph, f, gg.roles);
  }
  return 0;
}

int run_barrier(const std::string& path) {
  pf::Graph g = pf::read_graph_file(path);
  pf::BarrierResult br = pf::select_barrier(g);
  print_ids(std::cout, "S", br.s);
  std::cout << "component orders:";
  for (const auto& comp : br.comps) std::cout << " " << comp.size();
  std::cout << "\n";
  std::cout << "deficiency: " << br.deficiency << "\n";
  return 0;
}

int run_classify(const std::string& path, int k) {
  pf::Graph g = pf::read_graph_file(path);
  pf::FamilyClass cls = pf::classify_no_factor(g, k);
  std::cout << "tag: " << pf::family_tag_name(cls.tag) << "\n";
  switch (cls.tag) {
    case pf::FamilyTag::G0:
      std::cout << "s: " << cls.s << "\n";
      break;
    case pf::FamilyTag::G1_MIN_LE1:
    case pf::FamilyTag::G1_MIN_EQ2:
    case pf::FamilyTag::G1_MIN_GE3:
    case pf::FamilyTag::G2:
    case pf::FamilyTag::G3:
    case pf::FamilyTag::G4:
      std::cout << "s1: " << cls.s1 << "\n";
      std::cout << "s2: " << cls.s2 << "\n";
      std::cout << "s3: " << cls.s3 << "\n";
      break;
    default:
      break;
  }
  for (const auto& [name, id] : cls.roles)
    std::cout << "role " << name << " " << id << "\n";
  try {
    print_ids(std::cout, "crush", pf::crush_set(g, cls));
  } catch (const std::domain_error&) {
  }
  return 0;
}

int run_build(const std::string& path, int k, const std::string& trace_out) {
  pf::Graph g = pf::read_graph_file(path);
  pf::BuildOutcome out = k == 3 ? pf::build_p2p7(g) : pf::build_p2p9(g);

  if (!trace_out.empty()) {
    std::ofstream f(trace_out);
    if (!f) throw std::runtime_error("cannot write " + trace_out);
    print_ids(f, "barrier", out.trace.barrier);
    for (std::size_t i = 0; i < out.trace.component_vertices.size(); ++i)
      print_ids(f, "component " + std::to_string(i),
                out.trace.component_vertices[i]);
    const pf::AuxiliaryBipartite& aux = out.trace.aux;
    f << "aux: " << aux.s_count << " s-nodes, " << aux.t_count << " t-nodes\n";
    for (const auto& [s, t] : aux.edges) f << "aux edge: " << s << " " << t << "\n";
    for (const auto& [s, t] : aux.forbidden)
      f << "aux forbidden: " << s << " " << t << "\n";
    print_ids(f, "t1", aux.t1);
    print_ids(f, "t2", aux.t2);
    for (const std::string& step : out.trace.steps) f << "step: " << step << "\n";
  }

  if (out.has_factor()) {
    std::cout << "FACTOR\n";
    for (const auto& p : out.factor().paths) {
      for (std::size_t i = 0; i < p.size(); ++i)
        std::cout << (i ? " " : "") << p[i];
      std::cout << "\n";
    }
    return 0;
  }
  std::cout << "CERTIFICATE\n";
  print_certificate(std::cout, out.certificate());
  return 10;
}

int run_check(const std::string& path, const std::string& preset,
              const std::string& weights, const std::string& slope,
              const std::string& offset, const std::string& mode) {
  pf::Graph g = pf::read_graph_file(path);
  pf::ConditionSpec spec;
  if (!preset.empty()) {
    spec = pf::preset_condition(preset);
  } else {
    if (weights.empty())
      throw CLI::ValidationError("check-condition", "need --preset or --weights");
    spec.weights = parse_weights(weights);
    if (!slope.empty()) spec.slope = pf::Rational::parse(slope);
    if (!offset.empty()) spec.offset = pf::Rational::parse(offset);
  }
  pf::ConditionReport rep = pf::check_condition(g, spec, parse_mode(mode));
  std::cout << "verdict: " << pf::verdict_name(rep.verdict) << "\n";
  std::cout << "subsets checked: " << rep.subsets_checked << "\n";
  if (rep.witness) print_certificate(std::cout, *rep.witness);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"{P2,P7} / {P2,P9} path-factor toolkit"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "emit a named graph family");
  std::string gen_family, gen_params, gen_out;
  std::uint32_t gen_seed = 0;
  gen->add_option("--family", gen_family, "family tag or full spec text")
      ->required();
  gen->add_option("--params", gen_params, "family parameters, e.g. 2 or 1,1,1");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "optional-edge coin seed");
  gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  auto* bar = app.add_subcommand("barrier", "maximum-deficiency separator");
  std::string bar_path;
  bar->add_option("graphfile", bar_path)->required();

  auto* cls = app.add_subcommand("classify", "no-factor family of a graph");
  std::string cls_path;
  int cls_k = 3;
  cls->add_option("graphfile", cls_path)->required();
  cls->add_option("--k", cls_k)->check(CLI::IsMember({3, 4}))->required();

  auto* bld = app.add_subcommand("build-factor",
                                 "build a factor or a violating vertex set");
  std::string bld_path, bld_trace;
  int bld_k = 3;
  bld->add_option("graphfile", bld_path)->required();
  bld->add_option("--k", bld_k)->check(CLI::IsMember({3, 4}))->required();
  bld->add_option("--trace", bld_trace, "write the construction trace here");

  auto* chk = app.add_subcommand("check-condition",
                                 "test a component-counting condition");
  std::string chk_path, chk_preset, chk_weights, chk_slope, chk_offset;
  std::string chk_mode = "exhaustive";
  chk->add_option("graphfile", chk_path)->required();
  auto* chk_preset_opt = chk->add_option(
      "--preset", chk_preset, "thmA|thmB|thm13|thm14|lemma61|conjecture:<k>");
  chk_preset_opt->excludes(
      chk->add_option("--weights", chk_weights, "<order>=<p/q>[,...]"));
  chk_preset_opt->excludes(chk->add_option("--slope", chk_slope, "p/q"));
  chk_preset_opt->excludes(chk->add_option("--offset", chk_offset, "p/q"));
  chk->add_option("--mode", chk_mode, "exhaustive | sampled:<trials>:<seed>");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen)
      return run_generate(gen_family, gen_params, seed_opt->count() > 0,
                          gen_seed, gen_out);
    if (*bar) return run_barrier(bar_path);
    if (*cls) return run_classify(cls_path, cls_k);
    if (*bld) return run_build(bld_path, bld_k, bld_trace);
    if (*chk)
      return run_check(chk_path, chk_preset, chk_weights, chk_slope, chk_offset,
                       chk_mode);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
