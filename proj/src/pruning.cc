#include "dynmis/pruning.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "dynmis/generators.h"
#include "dynmis/ranking.h"
#include "dynmis/static_oracle.h"

namespace dynmis {

PruningReport RunPruningTest(const PruningParams& params) {
  for (double p : params.thresholds) {
    if (!(p > 0.0 && p <= 1.0)) throw std::invalid_argument("thresholds must lie in (0, 1]");
  }
  if (params.n < 2) throw std::invalid_argument("n must be at least 2");

  const std::size_t max_edges = params.n * (params.n - 1) / 2;
  const auto wanted = static_cast<std::size_t>(
      std::llround(static_cast<double>(params.n) * params.avg_degree / 2.0));
  GeneratorParams gen;
  gen.model = StreamModel::kGnpInsert;
  gen.n = params.n;
  gen.target_edges = std::min(wanted, max_edges);
  gen.seed = params.seed;

  Graph graph(params.n);
  for (const Update& u : GenerateStream(gen).updates) graph.Apply(u);
  const std::vector<EdgeKey> edges = graph.Edges();

  PruningReport report;
  report.n = params.n;
  report.edges = graph.num_edges();
  for (VertexId v = 0; v < params.n; ++v) {
    report.graph_max_degree = std::max(report.graph_max_degree, graph.Degree(v));
  }
  const double log_n = std::log(static_cast<double>(params.n));
  for (double p : params.thresholds) {
    PruningRow row;
    row.p = p;
    row.bound = log_n / p;
    report.rows.push_back(row);
  }

  for (std::size_t trial = 0; trial < params.trials; ++trial) {
    const std::uint64_t trial_seed = MixRandomBits(params.seed, 0x7072756e65ULL, trial, 0);
    const VertexRanking ranking(params.n, trial_seed);
    const MisSolution mis = ComputeLfmis(graph, ranking);
    EdgeRankMap edge_ranks;
    for (const EdgeKey& e : edges) edge_ranks.emplace(e, DrawEdgeRank(e, 0, trial_seed));
    const MmSolution mm = ComputeLfmm(graph, edge_ranks);

    for (PruningRow& row : report.rows) {
      const std::uint64_t threshold = ThresholdFromFraction(row.p);
      const std::size_t vertex_degree =
          InducedMaxDegree(graph, ResidualVertices(mis, threshold));
      const std::size_t edge_incidence =
          MaxIncidence(params.n, ResidualEdges(mm, threshold));
      row.vertex_degree.push_back(vertex_degree);
      row.edge_incidence.push_back(edge_incidence);
      row.max_vertex_degree = std::max(row.max_vertex_degree, vertex_degree);
      row.max_edge_incidence = std::max(row.max_edge_incidence, edge_incidence);
    }
  }
  for (PruningRow& row : report.rows) {
    row.vertex_ratio = static_cast<double>(row.max_vertex_degree) / row.bound;
    row.edge_ratio = static_cast<double>(row.max_edge_incidence) / row.bound;
  }
  return report;
}

void PrintPruningReport(std::ostream& out, const PruningReport& report) {
  out << "n=" << report.n << " edges=" << report.edges
      << " max_degree=" << report.graph_max_degree << '\n';
  out << "p,bound_ln_n_over_p,max_vertex_degree,vertex_ratio,max_edge_incidence,edge_ratio\n";
  for (const PruningRow& row : report.rows) {
    out << row.p << ',' << row.bound << ',' << row.max_vertex_degree << ','
        << row.vertex_ratio << ',' << row.max_edge_incidence << ',' << row.edge_ratio
        << '\n';
  }
}

}  // namespace dynmis
