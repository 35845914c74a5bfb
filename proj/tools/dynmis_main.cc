#include <cstdint>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynmis/bench.h"
#include "dynmis/generators.h"
#include "dynmis/pruning.h"
#include "dynmis/runner.h"
#include "dynmis/stream.h"

namespace {

using namespace dynmis;

const std::map<std::string, StreamModel> kModels = {
    {"gnp-insert", StreamModel::kGnpInsert},
    {"mixed", StreamModel::kMixed},
    {"sliding-window", StreamModel::kSlidingWindow},
    {"star-flip", StreamModel::kStarFlip},
};

const std::map<std::string, Mode> kModes = {{"mis", Mode::kMis}, {"mm", Mode::kMm}};

int Gen(const GeneratorParams& params, const std::string& out_path) {
  const UpdateStream stream = GenerateStream(params);
  const std::string comment = "model " + std::string(StreamModelName(params.model)) +
                              " seed " + std::to_string(params.seed);
  if (out_path.empty() || out_path == "-") {
    WriteStream(std::cout, stream, comment);
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 1;
  }
  WriteStream(out, stream, comment);
  return out ? 0 : 1;
}

int Run(const std::string& stream_path, RunOptions options, const std::string& csv_path) {
  const UpdateStream stream = ReadStreamFile(stream_path);
  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) {
      std::cerr << "cannot open " << csv_path << " for writing\n";
      return 1;
    }
    options.csv = &csv;
  }
  try {
    PrintSummary(std::cout, RunStream(stream, options));
  } catch (const VerificationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}

int PruneTest(const PruningParams& params) {
  PrintPruningReport(std::cout, RunPruningTest(params));
  return 0;
}

int Bench(const std::string& stream_path, Mode mode, std::uint64_t seed, std::size_t warmup) {
  const UpdateStream stream = ReadStreamFile(stream_path);
  PrintBenchReport(std::cout, BenchCompare(stream, mode, seed, warmup));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic maximal independent set and maximal matching"};
  app.require_subcommand(1);

  GeneratorParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an update stream");
  gen_cmd->add_option("--model", gen.model, "Stream model")
      ->transform(CLI::CheckedTransformer(kModels, CLI::ignore_case))
      ->default_str("mixed");
  gen_cmd->add_option("-n,--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--updates", gen.updates, "Number of model updates");
  gen_cmd->add_option("--target", gen.target_edges, "Target edge count (gnp-insert, mixed)");
  gen_cmd->add_option("--window", gen.window, "Window size (sliding-window)");
  gen_cmd->add_option("--hubs", gen.hubs, "Hub count (star-flip)")->capture_default_str();
  gen_cmd->add_option("--prefill", gen.prefill, "Random insertions before the model");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->capture_default_str();
  gen_cmd->add_option("-o,--out", gen_out, "Output path (default stdout)");

  std::string run_stream;
  std::string run_csv;
  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Replay a stream through a dynamic structure");
  run_cmd->add_option("stream", run_stream, "Stream file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--mode", run.mode, "mis or mm")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("mis");
  run_cmd->add_option("--seed", run.seed, "Ranking seed")->capture_default_str();
  run_cmd->add_option("--verify-every", run.verify_every,
                      "Check against the oracle every k updates (0 = never)")
      ->capture_default_str();
  run_cmd->add_option("--csv", run_csv, "Per-update metrics CSV path");

  PruningParams prune;
  auto* prune_cmd = app.add_subcommand("prune-test", "Measure residual degrees");
  prune_cmd->add_option("-n,--n", prune.n, "Vertex count")->capture_default_str();
  prune_cmd->add_option("--avg-degree", prune.avg_degree, "Average degree of the graph")
      ->capture_default_str();
  prune_cmd->add_option("--p", prune.thresholds, "Thresholds in (0, 1]")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  prune_cmd->add_option("--trials", prune.trials, "Fresh rankings per threshold")
      ->capture_default_str();
  prune_cmd->add_option("--seed", prune.seed, "Seed")->capture_default_str();

  std::string bench_stream;
  Mode bench_mode = Mode::kMis;
  std::uint64_t bench_seed = 1;
  std::size_t bench_warmup = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Compare dynamic updates with recomputation");
  bench_cmd->add_option("stream", bench_stream, "Stream file")
      ->required()
      ->check(CLI::ExistingFile);
  bench_cmd->add_option("--mode", bench_mode, "mis or mm")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case))
      ->default_str("mis");
  bench_cmd->add_option("--seed", bench_seed, "Ranking seed")->capture_default_str();
  bench_cmd->add_option("--warmup", bench_warmup, "Untimed leading updates")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen_cmd) return Gen(gen, gen_out);
    if (*run_cmd) return Run(run_stream, run, run_csv);
    if (*prune_cmd) return PruneTest(prune);
    if (*bench_cmd) return Bench(bench_stream, bench_mode, bench_seed, bench_warmup);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
