// mak: solve, analyze, generate and benchmark multiagent knapsack instances.
//
// Exit codes: 0 ok, 1 usage or input error, 2 size cap exceeded,
// 3 solver disagreement in bench.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mak/bench.h"
#include "mak/dispatch.h"
#include "mak/errors.h"
#include "mak/generators.h"
#include "mak/io.h"
#include "mak/profiles.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSize = 2;
constexpr int kExitDisagreement = 3;

void AddCapFlags(CLI::App* app, mak::Caps& caps) {
  app->add_option("--cap-oracle-items", caps.oracle_max_items,
                  "max items for exhaustive search")
      ->capture_default_str();
  app->add_option("--cap-sc-detect-voters", caps.sc_detect_max_voters,
                  "max voters for single-crossing detection")
      ->capture_default_str();
  app->add_option("--cap-wmsc-cells", caps.wmsc_max_cells,
                  "max multicover table cells")
      ->capture_default_str();
  app->add_option("--cap-xp-guesses", caps.xp_max_guesses,
                  "max representative guesses")
      ->capture_default_str();
  app->add_option("--cap-xp-cells", caps.xp_max_cells,
                  "max multicover cells summed over guesses")
      ->capture_default_str();
  app->add_option("--cap-matching-voters", caps.matching_max_voters,
                  "max voters for the matching solver")
      ->capture_default_str();
  app->add_option("--cap-matching-k", caps.matching_max_k,
                  "max min(b, m) for the matching solver")
      ->capture_default_str();
  app->add_option("--cap-matching-guesses", caps.matching_max_guesses,
                  "max guesses / search nodes for the matching solver")
      ->capture_default_str();
  app->add_option("--cap-matching-cells", caps.matching_max_cells,
                  "max assignment cells summed over matching guesses")
      ->capture_default_str();
  app->add_option("--cap-polymul-voters", caps.polymul_max_voters,
                  "max voters for polynomial multiplication")
      ->capture_default_str();
  app->add_option("--cap-polymul-cells", caps.polymul_max_cells,
                  "max n * u_bar * b * 2^n")
      ->capture_default_str();
  app->add_option("--cap-kpcover-cells", caps.kpcover_max_cells,
                  "max 4^n * m * dim for kp-cover")
      ->capture_default_str();
  app->add_option("--cap-dp-cells", caps.dp_max_cells,
                  "max cells of pseudo-polynomial tables")
      ->capture_default_str();
}

std::string OrderToString(const mak::Instance& instance,
                          const std::vector<int>& order, bool voters) {
  std::string out;
  for (int x : order) {
    if (!out.empty()) out += ' ';
    out += voters ? instance.voter_id(x) : instance.item_id(x);
  }
  return out;
}

void PrintAnalysis(const mak::Instance& instance,
                   const mak::ProfileReport& report, bool json) {
  if (json) {
    nlohmann::ordered_json out;
    out["unanimous"] = report.is_unanimous;
    out["strongly_unanimous"] = report.is_strongly_unanimous;
    out["distance_to_su"] = report.distance_d;
    if (report.sc_order_verified) {
      out["sc_order_verified"] = *report.sc_order_verified;
    }
    if (report.sp_axis_verified) {
      out["sp_axis_verified"] = *report.sp_axis_verified;
    }
    out["sc_detection_ran"] = report.sc_detection_ran;
    if (report.sc_order) {
      nlohmann::ordered_json ids = nlohmann::ordered_json::array();
      for (int v : *report.sc_order) ids.push_back(instance.voter_id(v));
      out["sc_order"] = ids;
    } else {
      out["sc_order"] = nullptr;
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  std::cout << "unanimous: " << yes_no(report.is_unanimous) << "\n"
            << "strongly_unanimous: " << yes_no(report.is_strongly_unanimous)
            << "\n"
            << "distance_to_su: " << report.distance_d << "\n";
  if (report.sc_order_verified) {
    std::cout << "sc_order_verified: " << yes_no(*report.sc_order_verified)
              << "\n";
  }
  if (report.sp_axis_verified) {
    std::cout << "sp_axis_verified: " << yes_no(*report.sp_axis_verified)
              << "\n";
  }
  if (!report.sc_detection_ran) {
    if (report.sc_order) {
      std::cout << "sc_order: "
                << OrderToString(instance, *report.sc_order, true) << "\n";
    } else {
      std::cout << "sc_detection: skipped (voter cap)\n";
    }
  } else if (report.sc_order) {
    std::cout << "sc_detection: " << OrderToString(instance, *report.sc_order, true)
              << "\n";
  } else {
    std::cout << "sc_detection: none\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiagent knapsack solvers"};
  app.require_subcommand(1);

  mak::Caps caps;

  // solve
  auto* solve = app.add_subcommand("solve", "solve an instance file");
  std::string solve_file;
  std::string algo_name = "auto";
  std::string epsilon_text = "1/2";
  std::string indexing;
  bool solve_json = false;
  solve->add_option("file", solve_file, "instance JSON")->required();
  solve->add_option("--algo", algo_name,
                    "auto|oracle|xp|matching|su|single-voter|unanimous|"
                    "kpcover|polymul|sc|fptas")
      ->capture_default_str();
  solve->add_option("--epsilon", epsilon_text, "FPTAS accuracy as num/den")
      ->capture_default_str();
  solve->add_option("--indexing", indexing,
                    "kpcover: profit|cost, single-voter: budget|utility, "
                    "sc/fptas: cost|utility, polymul: schoolbook|fft");
  solve->add_flag("--json", solve_json, "print the report as JSON");
  AddCapFlags(solve, caps);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report profile structure");
  std::string analyze_file;
  bool analyze_json = false;
  analyze->add_option("file", analyze_file, "instance JSON")->required();
  analyze->add_flag("--json", analyze_json, "print the report as JSON");
  AddCapFlags(analyze, caps);

  // generate
  auto* generate = app.add_subcommand("generate", "write a random instance");
  mak::GeneratorParams params;
  std::string kind_name = "general";
  std::string rule_name = "diverse";
  std::string generate_out;
  generate->add_option("--kind", kind_name, "general|unanimous|su|sc|sp")
      ->capture_default_str();
  generate->add_option("-n,--voters", params.num_voters)->capture_default_str();
  generate->add_option("-m,--items", params.num_items)->capture_default_str();
  generate->add_option("--max-util", params.max_util)->capture_default_str();
  generate->add_option("--max-cost", params.max_cost)->capture_default_str();
  generate->add_option("-b,--budget", params.budget)->capture_default_str();
  generate->add_option("--rule", rule_name, "diverse|median|best")
      ->capture_default_str();
  generate->add_option("--lambda", params.lambda)->capture_default_str();
  generate->add_option("--seed", params.seed)->capture_default_str();
  generate->add_option("-o,--output", generate_out, "file (default stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "cross-check solvers on a suite");
  mak::BenchConfig config;
  std::string bench_out;
  bench->add_option("--seed", config.seed)->capture_default_str();
  bench->add_option("--per-cell", config.instances_per_cell,
                    "instances per (rule, kind, n, m) cell")
      ->capture_default_str();
  bench->add_option("--max-voters", config.max_voters)->capture_default_str();
  bench->add_option("--max-items", config.max_items)->capture_default_str();
  bench->add_option("--threads", config.threads, "0: all cores")
      ->capture_default_str();
  bench->add_flag("--timing", config.timing, "fill the millis column");
  bench->add_option("--counterexample-dir", config.counterexample_dir)
      ->capture_default_str();
  bench->add_option("-o,--output", bench_out, "CSV file (default stdout)");
  AddCapFlags(bench, caps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      const mak::Instance instance = mak::ReadInstanceFile(solve_file);
      mak::SolveOptions options;
      options.algorithm = mak::ParseAlgorithm(algo_name);
      options.epsilon = mak::ParseRational(epsilon_text);
      options.indexing = indexing;
      options.caps = caps;
      const mak::SolveReport report = mak::Solve(instance, options);
      std::cout << (solve_json ? mak::ReportToJson(instance, report)
                               : mak::ReportToText(instance, report));
    } else if (*analyze) {
      const mak::Instance instance = mak::ReadInstanceFile(analyze_file);
      PrintAnalysis(instance, mak::AnalyzeProfile(instance, caps),
                    analyze_json);
    } else if (*generate) {
      params.kind = mak::ParseGeneratorKind(kind_name);
      params.rule = mak::ParseRule(rule_name);
      const mak::Instance instance = mak::Generate(params);
      if (generate_out.empty()) {
        std::cout << mak::SerializeInstance(instance);
      } else {
        mak::WriteInstanceFile(generate_out, instance);
      }
    } else if (*bench) {
      config.caps = caps;
      const mak::BenchResult result =
          mak::RunBench(mak::DefaultSuite(config), config);
      if (bench_out.empty()) {
        mak::WriteBenchCsv(result, std::cout);
      } else {
        std::ofstream out(bench_out);
        if (!out) throw mak::InputError("cannot write '" + bench_out + "'");
        mak::WriteBenchCsv(result, out);
      }
      if (!result.disagreements.empty()) {
        for (const std::string& d : result.disagreements) {
          std::cerr << "disagreement: " << d << "\n";
        }
        for (const std::string& f : result.counterexample_files) {
          std::cerr << "counterexample written to " << f << "\n";
        }
        return kExitDisagreement;
      }
    }
  } catch (const mak::SizeError& e) {
    std::cerr << "size error: " << e.what() << "\n";
    return kExitSize;
  } catch (const mak::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
