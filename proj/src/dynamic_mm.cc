#include "dynmis/dynamic_mm.h"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace dynmis {

DynamicMm::DynamicMm(std::size_t n, std::uint64_t seed,
                     std::span<const EdgeKey> initial_edges)
    : seed_(seed), graph_(n), vertices_(n) {
  for (const EdgeKey& e : initial_edges) {
    graph_.Insert(e);
    MmEdgeState st;
    st.rank = NextRank(e);
    edges_.emplace(e, st);
  }

  MmSolution initial = ComputeLfmm(graph_, EdgeRanks());
  for (auto& [e, st] : edges_) {
    const EdgeVerdict& verdict = initial.edges.at(e);
    SetMatched(st, verdict.matched);
    st.eliminator = verdict.eliminator;
    vertices_[e.u].incident.emplace(st.eliminator, e);
    vertices_[e.v].incident.emplace(st.eliminator, e);
  }
  for (VertexId v = 0; v < n; ++v) {
    vertices_[v].match_rank = initial.vertex_rank[v];
  }
}

Rank DynamicMm::NextRank(const EdgeKey& e) {
  return DrawEdgeRank(e, insert_counts_[e]++, seed_);
}

void DynamicMm::SetMatched(MmEdgeState& st, bool matched) {
  if (st.matched == matched) return;
  st.matched = matched;
  if (matched) {
    ++matched_count_;
  } else {
    --matched_count_;
  }
}

MmUpdateReport DynamicMm::InsertEdge(VertexId a, VertexId b) {
  return Apply(Update::Insert(a, b));
}

MmUpdateReport DynamicMm::DeleteEdge(VertexId a, VertexId b) {
  return Apply(Update::Delete(a, b));
}

MmUpdateReport DynamicMm::Apply(const Update& update) {
  const auto start = std::chrono::steady_clock::now();
  graph_.Apply(update);  // validates; throws before any state changes

  const EdgeKey f = update.edge;
  pending_.op = update.op;
  pending_.edge = f;
  pending_.queue.clear();
  pending_.previous.clear();
  if (update.op == UpdateOp::kInsert) {
    MmEdgeState st;
    st.rank = NextRank(f);
    st.eliminator = st.rank;
    edges_.insert_or_assign(f, st);
  }
  pending_.threshold = edges_.at(f).rank;

  MmUpdateReport report;
  std::vector<EdgeKey> relevant;
  std::vector<EdgeKey> affected;
  std::optional<Rank> last_popped;
  pending_.queue.emplace(pending_.threshold, f);
  while (!pending_.queue.empty()) {
    const auto [rank, e] = *pending_.queue.begin();
    pending_.queue.erase(pending_.queue.begin());
    ++report.queue_pops;
    if (last_popped && !(*last_popped < rank)) {
      throw std::logic_error("work queue popped ranks out of order");
    }
    last_popped = rank;

    bool flipped;
    if (e == f && update.op == UpdateOp::kDelete) {
      flipped = RemoveUpdatedEdge();
    } else {
      const Rank before = edges_.at(e).eliminator;
      flipped = UpdateDataStructures(e);
      if (e == f) {
        report.affected.push_back(e);
      } else if (edges_.at(e).eliminator != before) {
        pending_.previous.emplace(e, before);
        report.affected.push_back(e);
      }
      if (flipped) report.flipped.push_back(e);
    }

    if (flipped) {
      relevant.clear();
      CollectRelevant(e, relevant);
      report.relevant_scanned += relevant.size();
      for (const EdgeKey& other : relevant) {
        const Rank& r = edges_.at(other).rank;
        if (r > rank) pending_.queue.emplace(r, other);
      }
    }
  }
  UpdateAdjacencyLists(report.affected);
  pending_.previous.clear();

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

bool DynamicMm::UpdateDataStructures(const EdgeKey& e) {
  MmEdgeState& st = edges_.at(e);
  MmVertexState& u = vertices_[e.u];
  MmVertexState& v = vertices_[e.v];
  const Rank x = std::min(u.match_rank, v.match_rank);
  const bool was_matched = st.matched;
  if (x >= st.rank) {
    SetMatched(st, true);
    st.eliminator = st.rank;
    u.match_rank = st.rank;
    v.match_rank = st.rank;
  } else {
    SetMatched(st, false);
    st.eliminator = x;
    if (was_matched) {
      if (u.match_rank == st.rank) u.match_rank = Rank::Infinity();
      if (v.match_rank == st.rank) v.match_rank = Rank::Infinity();
    }
  }
  return was_matched != st.matched;
}

bool DynamicMm::RemoveUpdatedEdge() {
  MmEdgeState& st = edges_.at(pending_.edge);
  if (!st.matched) return false;
  SetMatched(st, false);
  for (VertexId w : {pending_.edge.u, pending_.edge.v}) {
    if (vertices_[w].match_rank == st.rank) vertices_[w].match_rank = Rank::Infinity();
  }
  return true;
}

void DynamicMm::CollectRelevant(const EdgeKey& e, std::vector<EdgeKey>& out) const {
  // The incident collections still hold pre-update keys here.
  const std::pair<Rank, EdgeKey> from{pending_.threshold, EdgeKey{0, 0}};
  for (VertexId w : {e.u, e.v}) {
    const auto& incident = vertices_[w].incident;
    for (auto it = incident.lower_bound(from); it != incident.end(); ++it) {
      const EdgeKey& other = it->second;
      if (other == e) continue;
      if (pending_.op == UpdateOp::kDelete && other == pending_.edge) continue;
      out.push_back(other);
    }
  }
}

const Rank& DynamicMm::PreviousEliminator(const EdgeKey& e) const {
  auto it = pending_.previous.find(e);
  return it != pending_.previous.end() ? it->second : edges_.at(e).eliminator;
}

void DynamicMm::UpdateAdjacencyLists(const std::vector<EdgeKey>& affected) {
  const EdgeKey f = pending_.edge;
  if (pending_.op == UpdateOp::kInsert) {
    const Rank& k = edges_.at(f).eliminator;
    vertices_[f.u].incident.emplace(k, f);
    vertices_[f.v].incident.emplace(k, f);
  } else {
    const Rank k = edges_.at(f).eliminator;
    vertices_[f.u].incident.erase({k, f});
    vertices_[f.v].incident.erase({k, f});
    edges_.erase(f);
  }
  for (const EdgeKey& e : affected) {
    if (e == f) continue;
    const Rank& old_key = PreviousEliminator(e);
    const Rank& new_key = edges_.at(e).eliminator;
    for (VertexId w : {e.u, e.v}) {
      vertices_[w].incident.erase({old_key, e});
      vertices_[w].incident.emplace(new_key, e);
    }
  }
}

std::vector<EdgeKey> DynamicMm::Matching() const {
  std::vector<EdgeKey> out;
  out.reserve(matched_count_);
  for (const auto& [e, st] : edges_) {
    if (st.matched) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool DynamicMm::IsMatched(const EdgeKey& e) const { return edge_state(e).matched; }

const MmEdgeState& DynamicMm::edge_state(const EdgeKey& e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) {
    throw std::out_of_range("unknown edge " + ToString(e));
  }
  return it->second;
}

EdgeRankMap DynamicMm::EdgeRanks() const {
  EdgeRankMap out;
  out.reserve(edges_.size());
  for (const auto& [e, st] : edges_) out.emplace(e, st.rank);
  return out;
}

std::optional<std::string> DynamicMm::CheckInvariants() const {
  auto fail = [](const std::string& what) { return std::optional<std::string>(what); };
  if (edges_.size() != graph_.num_edges()) return fail("edge table size mismatch");

  std::vector<std::set<std::pair<Rank, EdgeKey>>> expected(vertices_.size());
  std::vector<Rank> min_matched(vertices_.size(), Rank::Infinity());
  std::vector<int> matched_at(vertices_.size(), 0);
  std::size_t matched = 0;
  for (const auto& [e, st] : edges_) {
    if (!graph_.HasEdge(e)) return fail("edge " + ToString(e) + " not in graph");
    if (st.matched != (st.eliminator == st.rank)) {
      return fail("edge " + ToString(e) + ": flag disagrees with eliminator");
    }
    expected[e.u].emplace(st.eliminator, e);
    expected[e.v].emplace(st.eliminator, e);
    if (st.matched) {
      ++matched;
      for (VertexId w : {e.u, e.v}) {
        min_matched[w] = std::min(min_matched[w], st.rank);
        if (++matched_at[w] > 1) {
          return fail("vertex " + std::to_string(w) + " has two matched edges");
        }
      }
    }
  }
  if (matched != matched_count_) return fail("matched count out of sync");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].match_rank != min_matched[v]) {
      return fail("vertex " + std::to_string(v) + ": stale match rank");
    }
    if (vertices_[v].incident != expected[v]) {
      return fail("vertex " + std::to_string(v) + ": incident collection mismatch");
    }
  }
  // Unmatched edges are blocked by a lower-rank matched edge (maximality).
  for (const auto& [e, st] : edges_) {
    if (st.matched) continue;
    const Rank& blocker = std::min(min_matched[e.u], min_matched[e.v]);
    if (st.eliminator != blocker || !(blocker < st.rank)) {
      return fail("edge " + ToString(e) + ": not blocked by its eliminator");
    }
  }
  return std::nullopt;
}

}  // namespace dynmis
