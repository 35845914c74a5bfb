#include "dynmis/bench.h"

#include <chrono>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "dynmis/dynamic_mis.h"
#include "dynmis/dynamic_mm.h"
#include "dynmis/static_oracle.h"

namespace dynmis {
namespace {

using Clock = std::chrono::steady_clock;

std::size_t CountTrue(const std::vector<bool>& flags) {
  std::size_t c = 0;
  for (bool f : flags) c += f ? 1 : 0;
  return c;
}

// Recompute route for the matching: mirrors the rank draws of DynamicMm so
// both routes see the same ranking.
class MatchingRecompute {
 public:
  MatchingRecompute(const Graph& start, std::uint64_t seed) : graph_(start), seed_(seed) {
    for (const EdgeKey& e : start.Edges()) ranks_.emplace(e, DrawEdgeRank(e, counts_[e]++, seed_));
  }

  std::size_t Apply(const Update& u) {
    graph_.Apply(u);
    if (u.op == UpdateOp::kInsert) {
      ranks_.insert_or_assign(u.edge, DrawEdgeRank(u.edge, counts_[u.edge]++, seed_));
    } else {
      ranks_.erase(u.edge);
    }
    const MmSolution solution = ComputeLfmm(graph_, ranks_);
    std::size_t matched = 0;
    for (const auto& [e, verdict] : solution.edges) matched += verdict.matched ? 1 : 0;
    return matched;
  }

 private:
  Graph graph_;
  std::uint64_t seed_;
  EdgeRankMap ranks_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> counts_;
};

}  // namespace

BenchReport BenchCompare(const UpdateStream& stream, Mode mode, std::uint64_t seed,
                         std::size_t warmup) {
  if (warmup > stream.updates.size()) {
    throw std::invalid_argument("warmup exceeds stream length");
  }
  Graph start(stream.header.n);
  for (std::size_t i = 0; i < warmup; ++i) start.Apply(stream.updates[i]);
  const std::vector<EdgeKey> initial = start.Edges();

  BenchReport report;
  report.warmup = warmup;
  report.timed_updates = stream.updates.size() - warmup;
  report.edges_after_warmup = initial.size();

  std::chrono::nanoseconds dynamic_total{0};
  std::chrono::nanoseconds recompute_total{0};
  std::vector<std::size_t> recompute_sizes;

  if (mode == Mode::kMis) {
    DynamicMis mis(stream.header.n, seed, initial);
    for (std::size_t i = warmup; i < stream.updates.size(); ++i) {
      const auto t0 = Clock::now();
      mis.Apply(stream.updates[i]);
      dynamic_total += Clock::now() - t0;
      report.solution_sizes.push_back(mis.MisSize());
    }
    Graph graph = start;
    const VertexRanking ranking(stream.header.n, seed);
    for (std::size_t i = warmup; i < stream.updates.size(); ++i) {
      const auto t0 = Clock::now();
      graph.Apply(stream.updates[i]);
      const MisSolution solution = ComputeLfmis(graph, ranking);
      recompute_total += Clock::now() - t0;
      recompute_sizes.push_back(CountTrue(solution.in_mis));
    }
  } else {
    DynamicMm mm(stream.header.n, seed, initial);
    for (std::size_t i = warmup; i < stream.updates.size(); ++i) {
      const auto t0 = Clock::now();
      mm.Apply(stream.updates[i]);
      dynamic_total += Clock::now() - t0;
      report.solution_sizes.push_back(mm.MatchingSize());
    }
    MatchingRecompute recompute(start, seed);
    for (std::size_t i = warmup; i < stream.updates.size(); ++i) {
      const auto t0 = Clock::now();
      const std::size_t matched = recompute.Apply(stream.updates[i]);
      recompute_total += Clock::now() - t0;
      recompute_sizes.push_back(matched);
    }
  }

  if (recompute_sizes != report.solution_sizes) {
    throw std::logic_error("dynamic and recomputed solutions disagree");
  }
  if (report.timed_updates > 0) {
    const auto count = static_cast<double>(report.timed_updates);
    report.dynamic_mean_ns = static_cast<double>(dynamic_total.count()) / count;
    report.recompute_mean_ns = static_cast<double>(recompute_total.count()) / count;
    report.speedup = report.dynamic_mean_ns > 0
                         ? report.recompute_mean_ns / report.dynamic_mean_ns
                         : 0;
  }
  return report;
}

void PrintBenchReport(std::ostream& out, const BenchReport& r) {
  out << "warmup updates     " << r.warmup << " (edges after: " << r.edges_after_warmup
      << ")\n"
      << "timed updates      " << r.timed_updates << '\n'
      << "dynamic mean ns    " << r.dynamic_mean_ns << '\n'
      << "recompute mean ns  " << r.recompute_mean_ns << '\n'
      << "speedup            " << r.speedup << "x\n";
}

}  // namespace dynmis
