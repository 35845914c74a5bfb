#ifndef DYNMIS_CLUSTERING_H_
#define DYNMIS_CLUSTERING_H_

#include <cstddef>
#include <vector>

#include "dynmis/dynamic_mis.h"

namespace dynmis {

// Pivot clustering read off the maintained MIS: every vertex belongs to the
// cluster of its eliminator, so pivots are exactly the MIS members.

VertexId ClusterOf(const DynamicMis& index, VertexId v);

// Cluster id of every vertex, indexed by vertex.
std::vector<VertexId> PivotClustering(const DynamicMis& index);

// Number of vertices whose cluster changed in the update that produced
// `report`. Ranks are distinct, so this is the affected-set size.
std::size_t ClusterChanges(const MisUpdateReport& report);

}  // namespace dynmis

#endif  // DYNMIS_CLUSTERING_H_
