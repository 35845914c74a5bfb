#include "dynmis/runner.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "dynmis/static_oracle.h"

namespace dynmis {
namespace {

double Mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Nearest-rank percentile.
double Percentile(std::vector<double> xs, double q) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(xs.size())));
  return xs[std::clamp<std::size_t>(rank, 1, xs.size()) - 1];
}

std::string Describe(const Rank& r) {
  if (r.IsInfinite()) return "inf";
  std::ostringstream out;
  out << r.value << "/" << r.owner << "/" << r.generation;
  return out.str();
}

std::size_t SolutionSize(const DynamicMis& mis) { return mis.MisSize(); }
std::size_t SolutionSize(const DynamicMm& mm) { return mm.MatchingSize(); }

template <typename Structure>
RunSummary Drive(Structure& structure, const UpdateStream& stream,
                 const RunOptions& options) {
  std::vector<double> affected, flipped, relevant, elapsed;
  const std::size_t count = stream.updates.size();
  affected.reserve(count);
  flipped.reserve(count);
  relevant.reserve(count);
  elapsed.reserve(count);

  RunSummary summary;
  if (options.csv != nullptr) WriteCsvHeader(*options.csv);
  for (std::size_t i = 0; i < count; ++i) {
    const Update& update = stream.updates[i];
    const auto report = structure.Apply(update);
    affected.push_back(static_cast<double>(report.affected.size()));
    flipped.push_back(static_cast<double>(report.flipped.size()));
    relevant.push_back(static_cast<double>(report.relevant_scanned));
    elapsed.push_back(static_cast<double>(report.elapsed.count()));
    summary.max_affected = std::max(summary.max_affected, report.affected.size());
    summary.max_flipped = std::max(summary.max_flipped, report.flipped.size());

    const std::size_t solution_size = SolutionSize(structure);
    if (options.csv != nullptr) {
      WriteCsvRow(*options.csv,
                  MetricsRow{i + 1, update, report.affected.size(),
                             report.flipped.size(), report.relevant_scanned,
                             report.queue_pops, report.elapsed.count(),
                             structure.graph().num_edges(), solution_size});
    }
    if (options.verify_every != 0 && (i + 1) % options.verify_every == 0) {
      if (auto divergence = VerifyAgainstOracle(structure)) {
        throw VerificationError(i + 1, *divergence);
      }
      ++summary.verifications;
    }
  }

  summary.updates = count;
  summary.mean_affected = Mean(affected);
  summary.mean_flipped = Mean(flipped);
  summary.mean_relevant = Mean(relevant);
  summary.mean_elapsed_ns = Mean(elapsed);
  summary.p95_affected = Percentile(affected, 0.95);
  summary.p95_flipped = Percentile(flipped, 0.95);
  summary.p95_elapsed_ns = Percentile(elapsed, 0.95);
  summary.final_edges = structure.graph().num_edges();
  summary.final_solution_size = SolutionSize(structure);
  return summary;
}

}  // namespace

std::optional<Mode> ParseMode(std::string_view name) {
  if (name == "mis") return Mode::kMis;
  if (name == "mm") return Mode::kMm;
  return std::nullopt;
}

std::string_view ModeName(Mode mode) { return mode == Mode::kMis ? "mis" : "mm"; }

std::optional<std::string> VerifyAgainstOracle(const DynamicMis& mis) {
  const MisSolution expected = ComputeLfmis(mis.graph(), mis.ranking());
  for (VertexId v = 0; v < mis.num_vertices(); ++v) {
    if (mis.InMis(v) != expected.in_mis[v] ||
        mis.EliminatorRank(v) != expected.eliminator[v]) {
      std::ostringstream out;
      out << "vertex " << v << ": have (m=" << mis.InMis(v)
          << ", k=" << Describe(mis.EliminatorRank(v)) << "), oracle (m="
          << expected.in_mis[v] << ", k=" << Describe(expected.eliminator[v]) << ")";
      return out.str();
    }
  }
  return mis.CheckInvariants();
}

std::optional<std::string> VerifyAgainstOracle(const DynamicMm& mm) {
  const MmSolution expected = ComputeLfmm(mm.graph(), mm.EdgeRanks());
  for (const auto& [e, verdict] : expected.edges) {
    const MmEdgeState& st = mm.edge_state(e);
    if (st.matched != verdict.matched || st.eliminator != verdict.eliminator) {
      std::ostringstream out;
      out << "edge " << ToString(e) << ": have (m=" << st.matched
          << ", k=" << Describe(st.eliminator) << "), oracle (m=" << verdict.matched
          << ", k=" << Describe(verdict.eliminator) << ")";
      return out.str();
    }
  }
  for (VertexId v = 0; v < mm.num_vertices(); ++v) {
    if (mm.VertexMatchRank(v) != expected.vertex_rank[v]) {
      return "vertex " + std::to_string(v) + ": match rank " +
             Describe(mm.VertexMatchRank(v)) + ", oracle " +
             Describe(expected.vertex_rank[v]);
    }
  }
  return mm.CheckInvariants();
}

void WriteCsvHeader(std::ostream& out) {
  out << "index,op,u,v,affected,flipped,relevant_scanned,queue_pops,elapsed_ns,"
         "edges,solution_size\n";
}

void WriteCsvRow(std::ostream& out, const MetricsRow& row) {
  out << row.index << ',' << (row.update.op == UpdateOp::kInsert ? "insert" : "delete")
      << ',' << row.update.edge.u << ',' << row.update.edge.v << ',' << row.affected
      << ',' << row.flipped << ',' << row.relevant_scanned << ',' << row.queue_pops
      << ',' << row.elapsed_ns << ',' << row.edges << ',' << row.solution_size << '\n';
}

VerificationError::VerificationError(std::size_t update_index,
                                     const std::string& detail)
    : std::runtime_error("divergence after update " + std::to_string(update_index) +
                         ": " + detail),
      update_index_(update_index) {}

RunSummary RunStream(const UpdateStream& stream, const RunOptions& options) {
  if (options.mode == Mode::kMis) {
    DynamicMis mis(stream.header.n, options.seed);
    return Drive(mis, stream, options);
  }
  DynamicMm mm(stream.header.n, options.seed);
  return Drive(mm, stream, options);
}

void PrintSummary(std::ostream& out, const RunSummary& s) {
  out << "updates            " << s.updates << '\n'
      << "verifications      " << s.verifications << '\n'
      << "affected mean/p95  " << s.mean_affected << " / " << s.p95_affected
      << " (max " << s.max_affected << ")\n"
      << "flipped mean/p95   " << s.mean_flipped << " / " << s.p95_flipped
      << " (max " << s.max_flipped << ")\n"
      << "relevant mean      " << s.mean_relevant << '\n'
      << "elapsed ns mean/p95 " << s.mean_elapsed_ns << " / " << s.p95_elapsed_ns << '\n'
      << "final edges        " << s.final_edges << '\n'
      << "final solution     " << s.final_solution_size << '\n';
}

}  // namespace dynmis
