#ifndef DYNMIS_DYNAMIC_MM_H_
#define DYNMIS_DYNAMIC_MM_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dynmis/graph.h"
#include "dynmis/ranking.h"
#include "dynmis/static_oracle.h"
#include "dynmis/update_report.h"

namespace dynmis {

// Affected/flipped edges. On insertion the new edge is always listed as
// affected, and as flipped when it enters the matching. A deleted edge is
// never listed.
using MmUpdateReport = UpdateReport<EdgeKey>;

struct MmEdgeState {
  bool matched = false;
  Rank eliminator;  // rank of the lowest-rank matched edge touching this one
  Rank rank;        // drawn at insertion
};

struct MmVertexState {
  // Rank of the matched incident edge, Rank::Infinity() if unmatched.
  Rank match_rank = Rank::Infinity();
  // All present incident edges keyed by (eliminator rank, edge).
  std::set<std::pair<Rank, EdgeKey>> incident;
};

// Maintains the lexicographically-first maximal matching over random edge
// ranks under edge insertions and deletions.
//
// Not thread-safe; updates and reads must be externally serialized.
class DynamicMm {
 public:
  DynamicMm(std::size_t n, std::uint64_t seed,
            std::span<const EdgeKey> initial_edges = {});

  MmUpdateReport InsertEdge(VertexId a, VertexId b);
  MmUpdateReport DeleteEdge(VertexId a, VertexId b);
  MmUpdateReport Apply(const Update& update);

  // Matched edges in canonical sorted order.
  std::vector<EdgeKey> Matching() const;
  std::size_t MatchingSize() const { return matched_count_; }
  // Throws std::out_of_range for an absent edge.
  bool IsMatched(const EdgeKey& e) const;
  const MmEdgeState& edge_state(const EdgeKey& e) const;
  const Rank& VertexMatchRank(VertexId v) const { return vertices_[v].match_rank; }
  const MmVertexState& vertex_state(VertexId v) const { return vertices_[v]; }

  // Ranks of every present edge, the form the static oracle consumes.
  EdgeRankMap EdgeRanks() const;

  std::size_t num_vertices() const { return vertices_.size(); }
  std::uint64_t seed() const { return seed_; }
  const Graph& graph() const { return graph_; }

  // Returns a description of the first violated structural invariant.
  std::optional<std::string> CheckInvariants() const;

 private:
  struct PendingUpdate {
    UpdateOp op = UpdateOp::kInsert;
    EdgeKey edge;
    Rank threshold;  // rank of the updated edge
    std::set<std::pair<Rank, EdgeKey>> queue;
    std::unordered_map<EdgeKey, Rank, EdgeKeyHash> previous;  // k before update
  };

  Rank NextRank(const EdgeKey& e);
  bool UpdateDataStructures(const EdgeKey& e);
  bool RemoveUpdatedEdge();
  void CollectRelevant(const EdgeKey& e, std::vector<EdgeKey>& out) const;
  void UpdateAdjacencyLists(const std::vector<EdgeKey>& affected);
  const Rank& PreviousEliminator(const EdgeKey& e) const;
  void SetMatched(MmEdgeState& st, bool matched);

  std::uint64_t seed_;
  Graph graph_;
  std::unordered_map<EdgeKey, MmEdgeState, EdgeKeyHash> edges_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> insert_counts_;
  std::vector<MmVertexState> vertices_;
  std::size_t matched_count_ = 0;
  PendingUpdate pending_;
};

}  // namespace dynmis

#endif  // DYNMIS_DYNAMIC_MM_H_
