#include "dynmis/dynamic_mis.h"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include "dynmis/static_oracle.h"

namespace dynmis {

DynamicMis::DynamicMis(std::size_t n, std::uint64_t seed,
                       std::span<const EdgeKey> initial_edges)
    : ranking_(n, seed),
      graph_(n),
      states_(n),
      prev_eliminator_(n),
      prev_stamp_(n, 0) {
  for (const EdgeKey& e : initial_edges) graph_.Insert(e);

  // Pre-processing: one greedy pass in rank order, then fill the adjacency
  // collections from the final eliminators.
  MisSolution initial = ComputeLfmis(graph_, ranking_);
  for (VertexId v = 0; v < n; ++v) {
    states_[v].in_mis = initial.in_mis[v];
    states_[v].eliminator = initial.eliminator[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId u : graph_.neighbors(v)) Attach(v, u);
  }
}

MisUpdateReport DynamicMis::InsertEdge(VertexId a, VertexId b) {
  return Apply(Update::Insert(a, b));
}

MisUpdateReport DynamicMis::DeleteEdge(VertexId a, VertexId b) {
  return Apply(Update::Delete(a, b));
}

MisUpdateReport DynamicMis::Apply(const Update& update) {
  const auto start = std::chrono::steady_clock::now();
  BeginUpdate(update);

  MisUpdateReport report;
  const Rank* last_popped = nullptr;
  pending_.queue.insert(ranking_[pending_.high]);
  while (!pending_.queue.empty()) {
    const Rank rank = *pending_.queue.begin();
    pending_.queue.erase(pending_.queue.begin());
    ++report.queue_pops;
    if (last_popped != nullptr && !(*last_popped < rank)) {
      throw std::logic_error("work queue popped ranks out of order");
    }
    last_popped = &ranking_[VertexRanking::OwnerOf(rank)];

    const VertexId v = VertexRanking::OwnerOf(rank);
    if (IsAffected(v)) {
      std::vector<VertexId> relevant = FindRelevantNeighbors(v, pending_.threshold);
      report.affected.push_back(v);
      if (UpdateEliminator(v, relevant)) {
        report.flipped.push_back(v);
        for (VertexId u : relevant) {
          if (ranking_[u] > ranking_[v]) {
            pending_.queue.insert(ranking_[u]);
            states_[u].blamers.push_back(v);
          }
        }
      }
      report.relevant_scanned += relevant.size();
      pending_.relevant.emplace_back(v, std::move(relevant));
    }
    states_[v].blamers.clear();
  }
  UpdateAdjacencyLists();
  EndUpdate();

  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

void DynamicMis::BeginUpdate(const Update& update) {
  graph_.Apply(update);  // validates; throws before any state changes

  ++epoch_;
  pending_.active = true;
  pending_.op = update.op;
  const auto [u, v] = update.edge;
  const bool u_lower = ranking_[u] < ranking_[v];
  pending_.low = u_lower ? u : v;
  pending_.high = u_lower ? v : u;
  pending_.threshold = ranking_[pending_.low];
  pending_.queue.clear();
  pending_.relevant.clear();
}

void DynamicMis::EndUpdate() {
  ++epoch_;  // retire the saved pre-update eliminators
  pending_.active = false;
  pending_.relevant.clear();
}

bool DynamicMis::IsAffected(VertexId v) const {
  const MisVertexState& st = states_[v];
  if (v == pending_.high) {
    return states_[pending_.low].in_mis && st.eliminator >= pending_.threshold;
  }
  // The old eliminator left the MIS.
  for (VertexId u : st.blamers) {
    if (ranking_[u] == st.eliminator) return true;
  }
  // Or a neighbor below the old eliminator joined it.
  const Rank* lowest_joined = nullptr;
  for (VertexId u : st.blamers) {
    if (states_[u].in_mis &&
        (lowest_joined == nullptr || ranking_[u] < *lowest_joined)) {
      lowest_joined = &ranking_[u];
    }
  }
  return lowest_joined != nullptr && *lowest_joined < st.eliminator;
}

std::vector<VertexId> DynamicMis::FindRelevantNeighbors(
    VertexId v, const Rank& threshold) const {
  const MisVertexState& st = states_[v];
  const Rank& own = PreviousEliminator(v);
  std::vector<VertexId> out;

  for (auto it = st.lower.lower_bound({threshold, 0}); it != st.lower.end(); ++it) {
    out.push_back(it->second);
  }
  for (VertexId u : st.upper) {
    const Rank& k = PreviousEliminator(u);
    // Equal-eliminator neighbors were already taken from `lower`.
    if (k >= threshold && k != own) out.push_back(u);
  }

  if (pending_.active && (v == pending_.low || v == pending_.high)) {
    const VertexId partner = v == pending_.low ? pending_.high : pending_.low;
    if (pending_.op == UpdateOp::kDelete) {
      std::erase(out, partner);
    } else if (PreviousEliminator(partner) >= threshold) {
      out.push_back(partner);
    }
  }
  return out;
}

bool DynamicMis::UpdateEliminator(VertexId v, std::span<const VertexId> relevant) {
  const Rank* lowest = nullptr;
  for (VertexId u : relevant) {
    if (states_[u].in_mis && (lowest == nullptr || ranking_[u] < *lowest)) {
      lowest = &ranking_[u];
    }
  }

  MisVertexState& st = states_[v];
  if (prev_stamp_[v] != epoch_) {
    prev_eliminator_[v] = st.eliminator;
    prev_stamp_[v] = epoch_;
  }
  const bool was_in = st.in_mis;
  if (lowest == nullptr || *lowest > ranking_[v]) {
    st.in_mis = true;
    st.eliminator = ranking_[v];
  } else {
    st.in_mis = false;
    st.eliminator = *lowest;
  }
  return was_in != st.in_mis;
}

void DynamicMis::Attach(VertexId x, VertexId y) {
  const Rank& kx = states_[x].eliminator;
  const Rank& ky = states_[y].eliminator;
  if (ky <= kx) states_[x].lower.emplace(ky, y);
  if (ky >= kx) states_[x].upper.insert(y);
}

void DynamicMis::Detach(VertexId x, VertexId y) {
  MisVertexState& st = states_[x];
  st.lower.erase({PreviousEliminator(y), y});
  st.lower.erase({states_[y].eliminator, y});
  st.upper.erase(y);
}

void DynamicMis::Place(VertexId x, VertexId y) {
  Detach(x, y);
  Detach(y, x);
  Attach(x, y);
  Attach(y, x);
}

void DynamicMis::UpdateAdjacencyLists() {
  if (pending_.op == UpdateOp::kInsert) {
    Place(pending_.low, pending_.high);
  } else {
    Detach(pending_.low, pending_.high);
    Detach(pending_.high, pending_.low);
  }
  // Every pair whose placement changed has an affected endpoint v and the
  // other endpoint among v's relevant neighbors.
  for (const auto& [v, relevant] : pending_.relevant) {
    for (VertexId u : relevant) Place(v, u);
  }
}

std::vector<VertexId> DynamicMis::MisMembers() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < states_.size(); ++v) {
    if (states_[v].in_mis) out.push_back(v);
  }
  return out;
}

std::size_t DynamicMis::MisSize() const {
  return static_cast<std::size_t>(
      std::count_if(states_.begin(), states_.end(),
                    [](const MisVertexState& s) { return s.in_mis; }));
}

std::optional<std::string> DynamicMis::CheckInvariants() const {
  auto fail = [](VertexId v, const std::string& what) {
    std::ostringstream out;
    out << "vertex " << v << ": " << what;
    return std::optional<std::string>(out.str());
  };
  if (pending_.active || !pending_.queue.empty()) {
    return std::optional<std::string>("update still in progress");
  }
  for (VertexId v = 0; v < states_.size(); ++v) {
    const MisVertexState& st = states_[v];
    if (st.in_mis != (st.eliminator == ranking_[v])) {
      return fail(v, "membership flag disagrees with eliminator");
    }
    if (!st.blamers.empty()) return fail(v, "scratch list not cleared");

    // Lowest-rank member of the closed neighborhood. Implies independence
    // and maximality.
    Rank lowest = st.in_mis ? ranking_[v] : Rank::Infinity();
    for (VertexId u : graph_.neighbors(v)) {
      if (states_[u].in_mis) lowest = std::min(lowest, ranking_[u]);
    }
    if (lowest != st.eliminator) return fail(v, "eliminator is not the lowest member");

    std::set<std::pair<Rank, VertexId>> lower;
    std::set<VertexId> upper;
    for (VertexId u : graph_.neighbors(v)) {
      const Rank& ku = states_[u].eliminator;
      if (ku <= st.eliminator) lower.emplace(ku, u);
      if (ku >= st.eliminator) upper.insert(u);
    }
    if (lower != st.lower) return fail(v, "lower collection mismatch");
    if (upper != st.upper) return fail(v, "upper collection mismatch");
    for (VertexId u : st.upper) {
      if (!states_[u].lower.contains({st.eliminator, v})) {
        return fail(v, "upper/lower symmetry broken with " + std::to_string(u));
      }
    }
  }
  return std::nullopt;
}

}  // namespace dynmis
