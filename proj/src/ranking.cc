#include "dynmis/ranking.h"

#include <algorithm>
#include <cmath>

namespace dynmis {
namespace {

constexpr std::uint64_t kVertexTag = 0x7665727465780000ULL;
constexpr std::uint64_t kEdgeTag = 0x6564676500000000ULL;

// SplitMix64 finalizer.
std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

double Rank::Fraction() const {
  return std::ldexp(static_cast<double>(value), -64);
}

std::uint64_t ThresholdFromFraction(double p) {
  if (p <= 0.0) return 0;
  if (p >= 1.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

std::uint64_t MixRandomBits(std::uint64_t seed, std::uint64_t tag,
                            std::uint64_t owner, std::uint64_t nonce) {
  std::uint64_t h = Mix64(seed ^ tag);
  h = Mix64(h ^ owner);
  return Mix64(h ^ (nonce * 0xD6E8FEB86659FD93ULL));
}

VertexRanking::VertexRanking(std::size_t n, std::uint64_t seed)
    : seed_(seed), ranks_(n) {
  for (std::size_t v = 0; v < n; ++v) {
    ranks_[v] = Rank{MixRandomBits(seed, kVertexTag, v, 0), v, 0};
  }
}

std::vector<VertexId> VertexRanking::OrderByRank() const {
  std::vector<VertexId> order(ranks_.size());
  for (std::size_t v = 0; v < order.size(); ++v) order[v] = static_cast<VertexId>(v);
  std::sort(order.begin(), order.end(),
            [&](VertexId a, VertexId b) { return ranks_[a] < ranks_[b]; });
  return order;
}

Rank DrawEdgeRank(const EdgeKey& edge, std::uint32_t nonce, std::uint64_t seed) {
  return Rank{MixRandomBits(seed, kEdgeTag, edge.Packed(), nonce), edge.Packed(),
              nonce};
}

}  // namespace dynmis
