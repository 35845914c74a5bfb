#ifndef DYNMIS_RANKING_H_
#define DYNMIS_RANKING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "dynmis/graph.h"

namespace dynmis {

// A random rank standing in for a uniform real in [0, 1].
//
// `value` is the random draw over the full 64-bit range. `owner` identifies
// the vertex (or packed edge key) that drew it and `generation` counts prior
// insertions of the same edge key, so ranks of distinct owners never compare
// equal. Ordering is lexicographic on (value, owner, generation).
struct Rank {
  std::uint64_t value = 0;
  std::uint64_t owner = 0;
  std::uint32_t generation = 0;

  // Sentinel above every drawn rank; used for "no matched edge".
  static constexpr Rank Infinity() {
    return {std::numeric_limits<std::uint64_t>::max(),
            std::numeric_limits<std::uint64_t>::max(),
            std::numeric_limits<std::uint32_t>::max()};
  }
  // Sentinel below every drawn rank.
  static constexpr Rank Lowest() { return {0, 0, 0}; }

  bool IsInfinite() const { return *this == Infinity(); }

  // value / 2^64, for reporting.
  double Fraction() const;

  auto operator<=>(const Rank&) const = default;
};

// Converts a fraction p in [0, 1] to a threshold on Rank::value. p >= 1 maps
// to the maximum value, so no rank exceeds it.
std::uint64_t ThresholdFromFraction(double p);

// Deterministic 64-bit mixer keyed by (seed, stream tag, owner, nonce).
std::uint64_t MixRandomBits(std::uint64_t seed, std::uint64_t tag,
                            std::uint64_t owner, std::uint64_t nonce);

// The fixed vertex ranking chosen at pre-processing. Immutable.
class VertexRanking {
 public:
  VertexRanking() = default;
  VertexRanking(std::size_t n, std::uint64_t seed);

  std::size_t size() const { return ranks_.size(); }
  std::uint64_t seed() const { return seed_; }
  const Rank& operator[](VertexId v) const { return ranks_[v]; }
  std::span<const Rank> ranks() const { return ranks_; }

  // Vertex ids sorted by increasing rank.
  std::vector<VertexId> OrderByRank() const;

  static VertexId OwnerOf(const Rank& r) { return static_cast<VertexId>(r.owner); }

  bool operator==(const VertexRanking&) const = default;

 private:
  std::uint64_t seed_ = 0;
  std::vector<Rank> ranks_;
};

// Rank of an edge at its arrival. `nonce` is the number of earlier insertions
// of the same key, so a re-inserted edge draws an independent rank.
Rank DrawEdgeRank(const EdgeKey& edge, std::uint32_t nonce, std::uint64_t seed);

inline EdgeKey EdgeOwnerOf(const Rank& r) {
  return {static_cast<VertexId>(r.owner >> 32),
          static_cast<VertexId>(r.owner & 0xFFFFFFFFULL)};
}

}  // namespace dynmis

#endif  // DYNMIS_RANKING_H_
