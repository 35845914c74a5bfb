#ifndef DYNMIS_GRAPH_H_
#define DYNMIS_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace dynmis {

using VertexId = std::uint32_t;

// Unordered vertex pair stored with u < v. Self-loops are not representable.
struct EdgeKey {
  VertexId u = 0;
  VertexId v = 0;

  // Canonicalizes (a, b); throws GraphError(kSelfLoop) when a == b.
  static EdgeKey Of(VertexId a, VertexId b);

  VertexId Other(VertexId x) const { return x == u ? v : u; }
  bool Touches(VertexId x) const { return x == u || x == v; }
  bool SharesEndpoint(const EdgeKey& o) const {
    return Touches(o.u) || Touches(o.v);
  }
  std::uint64_t Packed() const {
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  auto operator<=>(const EdgeKey&) const = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.Packed() * 0x9E3779B97F4A7C15ULL);
  }
};

std::string ToString(const EdgeKey& e);

enum class UpdateOp : std::uint8_t { kInsert, kDelete };

struct Update {
  UpdateOp op = UpdateOp::kInsert;
  EdgeKey edge;

  static Update Insert(VertexId a, VertexId b) {
    return {UpdateOp::kInsert, EdgeKey::Of(a, b)};
  }
  static Update Delete(VertexId a, VertexId b) {
    return {UpdateOp::kDelete, EdgeKey::Of(a, b)};
  }

  bool operator==(const Update&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  enum class Kind { kSelfLoop, kOutOfRange, kDuplicateInsert, kMissingDelete };

  GraphError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Simple undirected graph over the fixed vertex set [0, n).
class Graph {
 public:
  using Neighbors = std::unordered_set<VertexId>;

  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  void Insert(const EdgeKey& e);
  void Delete(const EdgeKey& e);
  void Apply(const Update& update);

  bool HasEdge(const EdgeKey& e) const;
  std::size_t Degree(VertexId v) const;
  const Neighbors& neighbors(VertexId v) const;

  // All edges in canonical sorted order.
  std::vector<EdgeKey> Edges() const;

  // Throws GraphError unless v < n (and, for edges, both endpoints are).
  void CheckVertex(VertexId v) const;
  void CheckEdge(const EdgeKey& e) const;

  bool operator==(const Graph& other) const {
    return num_edges_ == other.num_edges_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<Neighbors> adjacency_;
  std::size_t num_edges_ = 0;
};

}  // namespace dynmis

#endif  // DYNMIS_GRAPH_H_
