#include "dynmis/graph.h"

#include <algorithm>
#include <sstream>

namespace dynmis {

EdgeKey EdgeKey::Of(VertexId a, VertexId b) {
  if (a == b) {
    throw GraphError(GraphError::Kind::kSelfLoop,
                     "self-loop on vertex " + std::to_string(a));
  }
  return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

std::string ToString(const EdgeKey& e) {
  std::ostringstream out;
  out << "(" << e.u << "," << e.v << ")";
  return out.str();
}

void Graph::CheckVertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw GraphError(GraphError::Kind::kOutOfRange,
                     "vertex " + std::to_string(v) + " out of range [0, " +
                         std::to_string(adjacency_.size()) + ")");
  }
}

void Graph::CheckEdge(const EdgeKey& e) const {
  if (e.u == e.v) {
    throw GraphError(GraphError::Kind::kSelfLoop,
                     "self-loop on vertex " + std::to_string(e.u));
  }
  CheckVertex(e.u);
  CheckVertex(e.v);
}

void Graph::Insert(const EdgeKey& e) {
  CheckEdge(e);
  if (!adjacency_[e.u].insert(e.v).second) {
    throw GraphError(GraphError::Kind::kDuplicateInsert,
                     "edge " + ToString(e) + " already present");
  }
  adjacency_[e.v].insert(e.u);
  ++num_edges_;
}

void Graph::Delete(const EdgeKey& e) {
  CheckEdge(e);
  if (adjacency_[e.u].erase(e.v) == 0) {
    throw GraphError(GraphError::Kind::kMissingDelete,
                     "edge " + ToString(e) + " not present");
  }
  adjacency_[e.v].erase(e.u);
  --num_edges_;
}

void Graph::Apply(const Update& update) {
  if (update.op == UpdateOp::kInsert) {
    Insert(update.edge);
  } else {
    Delete(update.edge);
  }
}

bool Graph::HasEdge(const EdgeKey& e) const {
  if (e.u >= adjacency_.size() || e.v >= adjacency_.size()) return false;
  return adjacency_[e.u].contains(e.v);
}

std::size_t Graph::Degree(VertexId v) const {
  CheckVertex(v);
  return adjacency_[v].size();
}

const Graph::Neighbors& Graph::neighbors(VertexId v) const {
  CheckVertex(v);
  return adjacency_[v];
}

std::vector<EdgeKey> Graph::Edges() const {
  std::vector<EdgeKey> edges;
  edges.reserve(num_edges_);
  for (VertexId u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace dynmis
