// lkc: list-coloring solver front end.
//
//   lkc solve [FILE|-] [--json] [--oracle-check] [--parallel]
//   lkc oracle [FILE|-] [--json]
//   lkc validate [FILE|-] -r R [--cap N] [--json]
//   lkc gen --mode cluster|rp3free|random|apex -n N -k K [--seed S] ...
//   lkc bench [--sizes 1000,2000,...] [-k K] [--seed S] [--reps R] [--parallel]
//
// Exit codes: 0 admissible / ok, 1 not admissible / witness found,
// 2 input or usage error, 3 solver and oracle disagree.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lkc/generator.hpp"
#include "lkc/instance.hpp"
#include "lkc/scaling.hpp"
#include "lkc/solver.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitAdmissible = 0;
constexpr int kExitNotAdmissible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitDisagreement = 3;
constexpr lkc::Vertex kOracleCheckLimit = 20;

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lkc::InputError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

void print_verdict(const lkc::Verdict& v, bool json) {
  if (json) {
    ordered_json out;
    out["admissible"] = v.admissible;
    if (v.certificate) {
      ordered_json coloring = ordered_json::object();
      for (std::size_t i = 0; i < v.certificate->size(); ++i) {
        coloring[std::to_string(i + 1)] = (*v.certificate)[i];
      }
      out["coloring"] = std::move(coloring);
    } else {
      out["coloring"] = nullptr;
    }
    out["leaves_decided"] = v.stats.leaves_decided;
    out["branches"] = v.stats.reducer.branches;
    out["max_depth"] = v.stats.reducer.max_depth;
    out["time_ms"] = v.stats.time_ms;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << (v.admissible ? "admissible" : "not admissible") << "\n";
  if (v.certificate) {
    for (std::size_t i = 0; i < v.certificate->size(); ++i) {
      std::cout << "v " << i + 1 << " " << (*v.certificate)[i] << "\n";
    }
  }
  std::cout << "# leaves_decided=" << v.stats.leaves_decided
            << " branches=" << v.stats.reducer.branches
            << " max_depth=" << v.stats.reducer.max_depth
            << " dedup_hits=" << v.stats.reducer.dedup_hits
            << " phases=" << v.stats.matching_phases << " time_ms=" << v.stats.time_ms << "\n";
}

struct SolveArgs {
  std::string input = "-";
  bool json = false;
  bool oracle_check = false;
  bool parallel = false;
};

int cmd_solve(const SolveArgs& args) {
  const lkc::Instance inst = lkc::parse_instance(read_input(args.input));
  lkc::SolveOptions options;
  options.execution = args.parallel ? lkc::Execution::kParallel : lkc::Execution::kSerial;
  const lkc::Verdict verdict = lkc::decide(inst, options);
  print_verdict(verdict, args.json);

  if (args.oracle_check) {
    if (inst.order() > kOracleCheckLimit) {
      std::cerr << "oracle check skipped: n = " << inst.order() << " > " << kOracleCheckLimit << "\n";
    } else if (lkc::oracle_decide(inst).admissible != verdict.admissible) {
      std::cerr << "error: solver and oracle disagree\n";
      return kExitDisagreement;
    }
  }
  return verdict.admissible ? kExitAdmissible : kExitNotAdmissible;
}

int cmd_oracle(const SolveArgs& args) {
  const lkc::Instance inst = lkc::parse_instance(read_input(args.input));
  const lkc::Verdict verdict = lkc::oracle_decide(inst);
  print_verdict(verdict, args.json);
  return verdict.admissible ? kExitAdmissible : kExitNotAdmissible;
}

struct ValidateArgs {
  std::string input = "-";
  int r = 1;
  lkc::Vertex cap = lkc::kDefaultPackingCap;
  bool json = false;
};

int cmd_validate(const ValidateArgs& args) {
  const lkc::Instance inst = lkc::parse_instance(read_input(args.input));
  const lkc::ValidationReport report = lkc::validate(inst, args.r, args.cap);
  using Status = lkc::P3Packing::Status;
  const char* status = report.packing.status == Status::kFree      ? "yes"
                       : report.packing.status == Status::kWitness ? "no"
                                                                   : "skipped";
  if (args.json) {
    ordered_json out;
    out["list_range_ok"] = report.list_range_ok;
    out["empty_lists"] = report.empty_lists;
    out["r"] = args.r;
    out["rp3_free"] = status;
    ordered_json witness = ordered_json::array();
    for (const auto& t : report.packing.witness) witness.push_back({t.x + 1, t.y + 1, t.z + 1});
    out["witness"] = std::move(witness);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "list ranges: " << (report.list_range_ok ? "ok" : "bad") << "\n"
              << "empty lists: " << report.empty_lists << "\n"
              << args.r << "P3-free: " << status;
    if (report.packing.status == Status::kSkipped) std::cout << " (n > cap " << args.cap << ")";
    std::cout << "\n";
    for (const auto& t : report.packing.witness) {
      std::cout << "witness " << t.x + 1 << " " << t.y + 1 << " " << t.z + 1 << "\n";
    }
  }
  const bool bad = !report.list_range_ok || report.packing.status == Status::kWitness;
  return bad ? kExitNotAdmissible : kExitAdmissible;
}

struct GenArgs {
  std::string mode = "cluster";
  lkc::GenOptions options;
};

int cmd_gen(GenArgs args) {
  args.options.mode = lkc::parse_gen_mode(args.mode);
  std::cout << lkc::write_instance(lkc::generate(args.options));
  return 0;
}

struct BenchArgs {
  std::vector<lkc::Vertex> sizes{1000, 2000, 4000, 8000, 16000, 32000, 64000};
  lkc::Color k = 10;
  std::uint64_t seed = 1;
  int reps = 3;
  bool parallel = false;
};

int cmd_bench(const BenchArgs& args) {
  for (lkc::Vertex n : args.sizes) {
    if (n <= 0) {
      std::cerr << "error: bench sizes must be positive\n";
      return kExitInputError;
    }
  }
  const auto exec = args.parallel ? lkc::Execution::kParallel : lkc::Execution::kSerial;
  std::vector<double> xs, ys;
  std::cout << std::setw(8) << "n" << std::setw(10) << "|V(G)|" << std::setw(8) << "phases"
            << std::setw(12) << "time_ms" << "  instance_hash\n";
  for (lkc::Vertex n : args.sizes) {
    lkc::GenOptions gen;
    gen.mode = lkc::GenMode::kCluster;
    gen.n = n;
    gen.k = args.k;
    gen.seed = args.seed;
    const lkc::Instance inst = lkc::generate(gen);
    const auto t = lkc::time_matcher(inst, args.reps, exec);
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(lkc::fnv1a64(lkc::write_instance(inst))));
    std::cout << std::setw(8) << n << std::setw(10) << t.gamma_nodes << std::setw(8) << t.phases
              << std::setw(12) << std::fixed << std::setprecision(3) << t.time_ms << "  " << hash
              << "\n";
    xs.push_back(static_cast<double>(n));
    ys.push_back(std::max(t.time_ms, 1e-6));
  }
  if (xs.size() >= 2) {
    std::cout << "log-log slope: " << std::setprecision(3) << lkc::loglog_slope(xs, ys) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide list colorability with certificates"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Decide an instance file");
  solve->add_option("input", solve_args.input, "Instance file, or - for stdin");
  solve->add_flag("--json", solve_args.json, "Machine-readable output");
  solve->add_flag("--oracle-check", solve_args.oracle_check,
                  "Cross-check with the backtracking oracle (n <= 20)");
  solve->add_flag("--parallel", solve_args.parallel, "Decide profile leaves with OpenMP");

  SolveArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Decide with the backtracking oracle only");
  oracle->add_option("input", oracle_args.input, "Instance file, or - for stdin");
  oracle->add_flag("--json", oracle_args.json, "Machine-readable output");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand("validate", "Check list ranges and rP3-freeness");
  validate->add_option("input", validate_args.input, "Instance file, or - for stdin");
  validate->add_option("-r", validate_args.r, "Number of disjoint P3s to look for")
      ->required()
      ->check(CLI::PositiveNumber);
  validate->add_option("--cap", validate_args.cap, "Skip the packing search above this n")
      ->check(CLI::NonNegativeNumber);
  validate->add_flag("--json", validate_args.json, "Machine-readable output");

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Write a seeded random instance to stdout");
  gen->add_option("--mode", gen_args.mode, "cluster, rp3free, random or apex")
      ->check(CLI::IsMember({"cluster", "rp3free", "random", "apex"}));
  gen->add_option("-n", gen_args.options.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("-k", gen_args.options.k, "Color count")->required()->check(CLI::PositiveNumber);
  gen->add_option("-r", gen_args.options.r, "P3 packing bound for rp3free/apex")
      ->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.options.seed, "SplitMix64 seed");
  gen->add_option("--density", gen_args.options.density, "Edge probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--full-lists", gen_args.options.full_lists, "Give every vertex the list [k]");
  gen->add_option("--max-clique", gen_args.options.max_clique, "Largest cluster clique (default k)")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--cap", gen_args.options.cap, "rp3free: largest n for the packing check");
  gen->add_option("--budget", gen_args.options.budget, "rp3free: graph draws before giving up")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the matching stage on cluster instances");
  bench->add_option("--sizes", bench_args.sizes, "Comma-separated vertex counts")->delimiter(',');
  bench->add_option("-k", bench_args.k, "Color count")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "SplitMix64 seed");
  bench->add_option("--reps", bench_args.reps, "Repetitions per size (best kept)")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--parallel", bench_args.parallel, "Parallel color-class decomposition");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*solve) return cmd_solve(solve_args);
    if (*oracle) return cmd_oracle(oracle_args);
    if (*validate) return cmd_validate(validate_args);
    if (*gen) return cmd_gen(gen_args);
    if (*bench) return cmd_bench(bench_args);
  } catch (const lkc::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const lkc::GenerationError& e) {
    std::cerr << "generation error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
