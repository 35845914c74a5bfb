#include "dynmis/clustering.h"

namespace dynmis {

VertexId ClusterOf(const DynamicMis& index, VertexId v) {
  return index.Eliminator(v);
}

std::vector<VertexId> PivotClustering(const DynamicMis& index) {
  std::vector<VertexId> out(index.num_vertices());
  for (VertexId v = 0; v < out.size(); ++v) out[v] = ClusterOf(index, v);
  return out;
}

std::size_t ClusterChanges(const MisUpdateReport& report) {
  return report.affected.size();
}

}  // namespace dynmis
