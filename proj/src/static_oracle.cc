#include "dynmis/static_oracle.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dynmis {

MisSolution ComputeLfmis(const Graph& graph, const VertexRanking& ranking) {
  const std::size_t n = graph.num_vertices();
  if (ranking.size() < n) {
    throw std::invalid_argument("ranking does not cover every vertex");
  }
  MisSolution out;
  out.in_mis.assign(n, false);
  out.eliminator.assign(n, Rank::Infinity());
  for (VertexId v : ranking.OrderByRank()) {
    if (v >= n || !out.eliminator[v].IsInfinite()) continue;  // already killed
    out.in_mis[v] = true;
    out.eliminator[v] = ranking[v];
    for (VertexId u : graph.neighbors(v)) {
      if (out.eliminator[u].IsInfinite()) out.eliminator[u] = ranking[v];
    }
  }
  return out;
}

MmSolution ComputeLfmm(const Graph& graph, const EdgeRankMap& edge_ranks) {
  std::vector<std::pair<Rank, EdgeKey>> order;
  order.reserve(graph.num_edges());
  for (const EdgeKey& e : graph.Edges()) {
    auto it = edge_ranks.find(e);
    if (it == edge_ranks.end()) {
      throw std::invalid_argument("edge " + ToString(e) + " has no rank");
    }
    order.emplace_back(it->second, e);
  }
  std::sort(order.begin(), order.end());

  MmSolution out;
  out.vertex_rank.assign(graph.num_vertices(), Rank::Infinity());
  for (const auto& [rank, e] : order) {
    if (out.vertex_rank[e.u].IsInfinite() && out.vertex_rank[e.v].IsInfinite()) {
      out.vertex_rank[e.u] = rank;
      out.vertex_rank[e.v] = rank;
    }
  }
  // With at most one matched edge per vertex, the lowest-rank matched edge
  // touching e is the smaller of its endpoints' matched ranks.
  out.edges.reserve(order.size());
  for (const auto& [rank, e] : order) {
    Rank elim = std::min(out.vertex_rank[e.u], out.vertex_rank[e.v]);
    out.edges.emplace(e, EdgeVerdict{elim == rank, elim});
  }
  return out;
}

std::vector<VertexId> ResidualVertices(const MisSolution& solution,
                                       std::uint64_t threshold) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < solution.eliminator.size(); ++v) {
    if (solution.eliminator[v].value > threshold) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> ResidualVertices(const Graph& graph,
                                       const VertexRanking& ranking,
                                       std::uint64_t threshold) {
  return ResidualVertices(ComputeLfmis(graph, ranking), threshold);
}

std::size_t InducedMaxDegree(const Graph& graph,
                             const std::vector<VertexId>& vertices) {
  std::vector<bool> member(graph.num_vertices(), false);
  for (VertexId v : vertices) member[v] = true;
  std::size_t best = 0;
  for (VertexId v : vertices) {
    std::size_t d = 0;
    for (VertexId u : graph.neighbors(v)) d += member[u] ? 1 : 0;
    best = std::max(best, d);
  }
  return best;
}

std::vector<EdgeKey> ResidualEdges(const MmSolution& solution,
                                   std::uint64_t threshold) {
  std::vector<EdgeKey> out;
  for (const auto& [e, verdict] : solution.edges) {
    if (verdict.eliminator.value > threshold) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MaxIncidence(std::size_t n, const std::vector<EdgeKey>& edges) {
  std::vector<std::size_t> count(n, 0);
  std::size_t best = 0;
  for (const EdgeKey& e : edges) {
    best = std::max({best, ++count[e.u], ++count[e.v]});
  }
  return best;
}

}  // namespace dynmis
