#ifndef DYNMIS_STATIC_ORACLE_H_
#define DYNMIS_STATIC_ORACLE_H_

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dynmis/graph.h"
#include "dynmis/ranking.h"

namespace dynmis {

// Greedy lexicographically-first MIS. `eliminator[v]` is the rank of the
// lowest-rank MIS member in the closed neighborhood of v.
struct MisSolution {
  std::vector<bool> in_mis;
  std::vector<Rank> eliminator;

  bool operator==(const MisSolution&) const = default;
};

MisSolution ComputeLfmis(const Graph& graph, const VertexRanking& ranking);

using EdgeRankMap = std::unordered_map<EdgeKey, Rank, EdgeKeyHash>;

struct EdgeVerdict {
  bool matched = false;
  Rank eliminator;

  bool operator==(const EdgeVerdict&) const = default;
};

// Greedy lexicographically-first maximal matching over edge ranks.
// `vertex_rank[v]` is the rank of v's matched edge, or Rank::Infinity().
struct MmSolution {
  std::unordered_map<EdgeKey, EdgeVerdict, EdgeKeyHash> edges;
  std::vector<Rank> vertex_rank;
};

// Throws std::invalid_argument if a present edge has no rank.
MmSolution ComputeLfmm(const Graph& graph, const EdgeRankMap& edge_ranks);

// Vertices whose eliminator rank value exceeds `threshold`.
std::vector<VertexId> ResidualVertices(const Graph& graph,
                                       const VertexRanking& ranking,
                                       std::uint64_t threshold);
std::vector<VertexId> ResidualVertices(const MisSolution& solution,
                                       std::uint64_t threshold);

// Maximum degree of the subgraph induced by `vertices`.
std::size_t InducedMaxDegree(const Graph& graph,
                             const std::vector<VertexId>& vertices);

// Edges whose eliminator rank value exceeds `threshold`.
std::vector<EdgeKey> ResidualEdges(const MmSolution& solution,
                                   std::uint64_t threshold);

// Largest number of `edges` incident to a single vertex.
std::size_t MaxIncidence(std::size_t n, const std::vector<EdgeKey>& edges);

}  // namespace dynmis

#endif  // DYNMIS_STATIC_ORACLE_H_
