// Command-line front end: analysis, family construction, oracle runs,
// differential testing, and computer-algebra export.
//
// Exit codes: 0 success, 1 input error, 2 internal disagreement, 3 guard.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hypercover/ass_primes.hpp"
#include "hypercover/cover.hpp"
#include "hypercover/difftest.hpp"
#include "hypercover/io.hpp"
#include "hypercover/monomial_ideal.hpp"

namespace {

using namespace hypercover;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string input;
  std::string output;
  std::string family = "t2";
  int n = 0;
  int m = 0;
  int q = 0;
  int power = 2;
  int expbound = 0;
  std::uint64_t seed = 1;
  int trials = 200;
  std::uint64_t max_space = 0;  // 0 = default guard
};

SearchLimits limits_from(const Options& opt) {
  SearchLimits limits;
  if (opt.max_space != 0) {
    limits.max_points = opt.max_space;
    std::cerr << "WARNING: guard override --max-space=" << opt.max_space
              << "; large enumerations may be slow and memory-hungry\n";
  }
  return limits;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::invalid_argument("cannot open output file: " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

json vertex_sets_json(const std::vector<VertexSet>& sets) {
  json arr = json::array();
  for (const VertexSet& s : sets) arr.push_back(s);
  return arr;
}

int cmd_analyze(const Options& opt) {
  const SearchLimits limits = limits_from(opt);
  const Hypergraph h = hypergraph_from_json(slurp(opt.input));

  const AssProfile profile = ass_square(h, limits);
  const EmbeddedFreeResult free_check = embedded_free_by_independent_sets(h);
  const BalanceResult balance = is_balanced(h);

  const bool embedded_empty = profile.embedded.empty();
  bool agree = free_check.embedded_free == embedded_empty;
  if (balance.balanced && !embedded_empty) agree = false;

  json summary;
  summary["balanced"] = balance.balanced;
  if (balance.witness) {
    json w;
    w["vertices"] = balance.witness->vertices;
    std::vector<VertexSet> edges;
    for (std::size_t j : balance.witness->edge_indices) {
      edges.push_back(h.edges()[j]);
    }
    w["edges"] = vertex_sets_json(edges);
    summary["balance_witness"] = w;
  } else {
    summary["balance_witness"] = nullptr;
  }
  summary["embedded_count"] = profile.embedded.size();
  summary["independent_set_test_embedded_free"] = free_check.embedded_free;
  summary["independent_set_counterexample"] =
      free_check.counterexample ? json(*free_check.counterexample) : json(nullptr);

  if (h.uniformity() == 2) {
    const auto partition = is_bipartite(h);
    summary["bipartite"] = partition.has_value();
    if (partition) {
      summary["partition"] = {{"a", partition->first}, {"b", partition->second}};
    } else {
      summary["partition"] = nullptr;
    }
    const AssProfile criterion = graph_ass_criterion(h);
    const bool criterion_agrees = criterion.prime_set() == profile.prime_set();
    summary["graph_criterion_agrees"] = criterion_agrees;
    if (!criterion_agrees) agree = false;
    if (partition.has_value() != embedded_empty) agree = false;
  } else {
    summary["bipartite"] = nullptr;
  }
  summary["consistent"] = agree;

  json report;
  report["hypergraph"] = json::parse(to_json(h));
  report["profile"] = json::parse(to_json(profile));
  report["summary"] = summary;
  emit(opt, report.dump(2));

  if (!opt.output.empty()) {
    std::cout << "n=" << h.vertex_count() << " m=" << h.uniformity()
              << " edges=" << h.edge_count() << "\n";
    std::cout << "minimal primes: " << profile.minimal.size()
              << ", embedded primes: " << profile.embedded.size() << "\n";
    std::cout << "balanced: " << (balance.balanced ? "yes" : "no")
              << ", independent-set test embedded-free: "
              << (free_check.embedded_free ? "yes" : "no") << "\n";
    std::cout << "consistent: " << (agree ? "yes" : "no") << "\n";
  }
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_construct(const Options& opt, bool have_m, bool have_q) {
  Hypergraph h = [&] {
    if (have_m || have_q) {
      if (!(have_m && have_q)) {
        throw std::invalid_argument("construction needs both --m and --q");
      }
      return construct_family(opt.m, opt.q, opt.n);
    }
    if (opt.family != "t2") {
      throw std::invalid_argument("unknown family: " + opt.family);
    }
    return family_t2(opt.n);
  }();

  const int target_height = (have_m || have_q) ? opt.q : opt.n;
  VertexSet target(target_height);
  for (int i = 0; i < target_height; ++i) target[i] = i + 1;

  json doc = json::parse(to_json(h));
  doc["target_prime"] = target;
  emit(opt, doc.dump(2));
  return kExitOk;
}

int cmd_oracle(const Options& opt) {
  const SearchLimits limits = limits_from(opt);
  const Hypergraph h = hypergraph_from_json(slurp(opt.input));
  const int k = opt.power;
  const int expbound = opt.expbound == 0 ? k : opt.expbound;
  if (expbound < k) {
    throw std::invalid_argument("--expbound must be at least the power");
  }

  const MonomialIdeal ordinary = dual_power_ordinary(h, k);
  AssProfile profile;
  profile.power = k;
  for (WitnessedPrime& wp : ass_oracle(ordinary, expbound, limits)) {
    if (h.has_edge(wp.prime)) {
      profile.minimal.push_back(wp.prime);
    } else {
      profile.embedded.push_back(std::move(wp));
    }
  }
  const bool equal = dual_power_symbolic(h, k, limits) == ordinary;

  json report;
  report["hypergraph"] = json::parse(to_json(h));
  report["power"] = k;
  report["expbound"] = expbound;
  report["profile"] = json::parse(to_json(profile));
  report["ordinary_equals_symbolic"] = equal;
  emit(opt, report.dump(2));

  if (!opt.output.empty()) {
    std::cout << "power " << k << ": " << profile.minimal.size()
              << " minimal + " << profile.embedded.size()
              << " non-minimal primes; ordinary "
              << (equal ? "equals" : "differs from") << " symbolic\n";
  }
  return kExitOk;
}

int cmd_difftest(const Options& opt, bool have_m) {
  const SearchLimits limits = limits_from(opt);
  if (opt.trials < 1) throw std::invalid_argument("--trials must be positive");
  DiffTestConfig cfg;
  cfg.trials = opt.trials;
  cfg.seed = opt.seed;
  cfg.max_n = opt.n == 0 ? 7 : opt.n;
  if (have_m) cfg.m = opt.m;
  cfg.limits = limits;

  std::ostringstream log;
  Xorshift64Star master(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    const DiffInstance inst = draw_instance(t, master, cfg);
    const auto failures = check_instance(inst.hypergraph, cfg.limits);
    log << "trial " << t << ": n=" << inst.hypergraph.vertex_count()
        << " m=" << inst.hypergraph.uniformity()
        << " e=" << inst.hypergraph.edge_count()
        << " seed=" << inst.instance_seed
        << (failures.empty() ? " ok" : " DISAGREE") << "\n";
    if (!failures.empty()) {
      log << "counterexample:\n" << to_json(inst.hypergraph) << "\n";
      for (const std::string& f : failures) log << "  " << f << "\n";
      emit(opt, log.str());
      if (!opt.output.empty()) std::cout << log.str();
      return kExitDisagreement;
    }
  }
  log << opt.trials << "/" << opt.trials << " instances agree\n";
  emit(opt, log.str());
  return kExitOk;
}

int cmd_export(const Options& opt) {
  const Hypergraph h = hypergraph_from_json(slurp(opt.input));
  emit(opt, macaulay2_script(h));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hypercover: associated primes of squares of Alexander duals of "
      "uniform hypergraph edge ideals"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Analyze a hypergraph: associated primes of the dual square "
                 "plus structural checks");
  analyze->add_option("--input", opt.input, "Hypergraph JSON file")->required();
  analyze->add_option("--output", opt.output, "Report JSON file");
  analyze->add_option("--max-space", opt.max_space, "Guard override (points)");

  CLI::App* construct = app.add_subcommand(
      "construct", "Construct a named family or the lifted/padded pipeline");
  construct->add_option("--family", opt.family, "Family name (t2)");
  construct->add_option("--n", opt.n, "Size of the result")->required();
  auto* copt_m = construct->add_option("--m", opt.m, "Uniformity (pipeline)");
  auto* copt_q = construct->add_option("--q", opt.q, "Target prime height (pipeline)");
  construct->add_option("--output", opt.output, "Hypergraph JSON file");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Oracle scan of a dual power, plus the symbolic comparison");
  oracle->add_option("--input", opt.input, "Hypergraph JSON file")->required();
  oracle->add_option("--power", opt.power, "Power k in {1,2,3}")
      ->check(CLI::Range(1, 3));
  oracle->add_option("--expbound", opt.expbound, "Witness exponent bound");
  oracle->add_option("--output", opt.output, "Report JSON file");
  oracle->add_option("--max-space", opt.max_space, "Guard override (points)");

  CLI::App* difftest = app.add_subcommand(
      "difftest", "Seeded random corpus with cross-route agreement checks");
  difftest->add_option("--trials", opt.trials, "Number of instances");
  difftest->add_option("--seed", opt.seed, "Master seed");
  difftest->add_option("--n", opt.n, "Maximum size (default 7)");
  auto* dopt_m = difftest->add_option("--m", opt.m, "Fixed uniformity (2 or 3)");
  difftest->add_option("--output", opt.output, "Verdict log file");
  difftest->add_option("--max-space", opt.max_space, "Guard override (points)");

  CLI::App* exportc = app.add_subcommand(
      "export", "Write a Macaulay2 cross-check script for the edge ideal");
  exportc->add_option("--input", opt.input, "Hypergraph JSON file")->required();
  exportc->add_option("--output", opt.output, "Script file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(construct)) {
      return cmd_construct(opt, copt_m->count() > 0, copt_q->count() > 0);
    }
    if (app.got_subcommand(oracle)) return cmd_oracle(opt);
    if (app.got_subcommand(difftest)) {
      return cmd_difftest(opt, dopt_m->count() > 0);
    }
    if (app.got_subcommand(exportc)) return cmd_export(opt);
    return kExitInput;
  } catch (const GuardLimitError& ex) {
    std::cerr << "guard: " << ex.what() << "\n";
    return kExitGuard;
  } catch (const ConsistencyError& ex) {
    std::cerr << "internal disagreement: " << ex.what() << "\n";
    return kExitDisagreement;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "input error: " << ex.what() << "\n";
    return kExitInput;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return kExitDisagreement;
  }
}
