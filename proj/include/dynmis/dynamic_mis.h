#ifndef DYNMIS_DYNAMIC_MIS_H_
#define DYNMIS_DYNAMIC_MIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dynmis/graph.h"
#include "dynmis/ranking.h"
#include "dynmis/update_report.h"

namespace dynmis {

using MisUpdateReport = UpdateReport<VertexId>;

// Per-vertex bookkeeping. Between updates:
//   in_mis  <=> eliminator == rank of the vertex
//   lower   == { (k(u), u) : u neighbor, k(u) <= k(v) }
//   upper   == { u : u neighbor, k(u) >= k(v) }
// Neighbors sharing the same eliminator sit in both collections.
struct MisVertexState {
  bool in_mis = true;
  Rank eliminator;
  std::set<std::pair<Rank, VertexId>> lower;
  std::set<VertexId> upper;
  // Lower-rank flipped neighbors discovered during the running update.
  std::vector<VertexId> blamers;
};

// Maintains the lexicographically-first MIS of a graph on a fixed vertex set
// under edge insertions and deletions. Each update touches only the vertices
// whose eliminator changes plus their relevant neighbors.
//
// Not thread-safe; updates and reads must be externally serialized.
class DynamicMis {
 public:
  DynamicMis(std::size_t n, std::uint64_t seed,
             std::span<const EdgeKey> initial_edges = {});

  // Throw GraphError on self-loops, out-of-range ids, inserting a present
  // edge or deleting an absent one. The structure is unchanged on error.
  MisUpdateReport InsertEdge(VertexId a, VertexId b);
  MisUpdateReport DeleteEdge(VertexId a, VertexId b);
  MisUpdateReport Apply(const Update& update);

  bool InMis(VertexId v) const { return states_[v].in_mis; }
  const Rank& EliminatorRank(VertexId v) const { return states_[v].eliminator; }
  VertexId Eliminator(VertexId v) const {
    return VertexRanking::OwnerOf(states_[v].eliminator);
  }
  // MIS members in increasing id order.
  std::vector<VertexId> MisMembers() const;
  std::size_t MisSize() const;

  // Neighbors u of v whose eliminator rank (as of the start of the running
  // update, or currently when idle) is at least `threshold`. Found by a range
  // scan of `lower` and a filtered scan of `upper`. While an update is
  // running, the updated edge is treated as already applied.
  std::vector<VertexId> FindRelevantNeighbors(VertexId v,
                                              const Rank& threshold) const;

  std::size_t num_vertices() const { return states_.size(); }
  const VertexRanking& ranking() const { return ranking_; }
  const Graph& graph() const { return graph_; }
  const MisVertexState& state(VertexId v) const { return states_[v]; }

  // Full scan of the per-vertex invariants. Returns a description of the
  // first violation, if any. O((n + m) log n).
  std::optional<std::string> CheckInvariants() const;

 private:
  friend class DynamicMisTestPeer;

  struct PendingUpdate {
    bool active = false;
    UpdateOp op = UpdateOp::kInsert;
    VertexId low = 0;   // endpoint with the smaller rank
    VertexId high = 0;  // endpoint with the larger rank
    Rank threshold;     // rank of `low`
    std::set<Rank> queue;
    std::vector<std::pair<VertexId, std::vector<VertexId>>> relevant;
  };

  void BeginUpdate(const Update& update);
  void EndUpdate();
  bool IsAffected(VertexId v) const;
  bool UpdateEliminator(VertexId v, std::span<const VertexId> relevant);
  void UpdateAdjacencyLists();

  // Eliminator rank before the running update.
  const Rank& PreviousEliminator(VertexId v) const {
    return prev_stamp_[v] == epoch_ ? prev_eliminator_[v]
                                    : states_[v].eliminator;
  }
  void Attach(VertexId x, VertexId y);
  void Detach(VertexId x, VertexId y);
  void Place(VertexId x, VertexId y);

  VertexRanking ranking_;
  Graph graph_;
  std::vector<MisVertexState> states_;

  PendingUpdate pending_;
  std::vector<Rank> prev_eliminator_;
  std::vector<std::uint64_t> prev_stamp_;
  std::uint64_t epoch_ = 1;
};

}  // namespace dynmis

#endif  // DYNMIS_DYNAMIC_MIS_H_
