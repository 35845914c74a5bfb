#ifndef DYNMIS_PRUNING_H_
#define DYNMIS_PRUNING_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace dynmis {

// Residual-degree measurement: on a fixed random graph, draw fresh vertex and
// edge rankings per trial and record, for every threshold p, the maximum
// degree of the subgraph induced by vertices whose eliminator rank exceeds p
// and the maximum number of incident edges whose eliminator rank exceeds p.
struct PruningParams {
  std::size_t n = 512;
  double avg_degree = 32;  // edge count is round(n * avg_degree / 2), capped
  std::vector<double> thresholds = {1.0 / 16, 1.0 / 8, 1.0 / 4};
  std::size_t trials = 20;
  std::uint64_t seed = 1;
};

struct PruningRow {
  double p = 0;
  double bound = 0;  // ln(n) / p
  std::vector<std::size_t> vertex_degree;   // per trial
  std::vector<std::size_t> edge_incidence;  // per trial
  std::size_t max_vertex_degree = 0;
  std::size_t max_edge_incidence = 0;
  double vertex_ratio = 0;  // max_vertex_degree / bound
  double edge_ratio = 0;    // max_edge_incidence / bound
};

struct PruningReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t graph_max_degree = 0;
  std::vector<PruningRow> rows;
};

// Throws std::invalid_argument when a threshold is outside (0, 1].
PruningReport RunPruningTest(const PruningParams& params);

void PrintPruningReport(std::ostream& out, const PruningReport& report);

}  // namespace dynmis

#endif  // DYNMIS_PRUNING_H_
