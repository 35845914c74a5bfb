#include "dynmis/generators.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace dynmis {
namespace {

// mt19937_64 output is fully specified by the standard; the bounded draws
// below avoid the implementation-defined distributions so that streams are
// reproducible across standard libraries.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }
  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

// Present edge set with O(1) uniform sampling and removal.
class EdgePool {
 public:
  bool Contains(const EdgeKey& e) const { return index_.contains(e); }
  std::size_t size() const { return edges_.size(); }

  void Add(const EdgeKey& e) {
    index_.emplace(e, edges_.size());
    edges_.push_back(e);
  }
  void Remove(EdgeKey e) {
    const std::size_t slot = index_.at(e);
    index_.erase(e);
    if (slot + 1 != edges_.size()) {
      edges_[slot] = edges_.back();
      index_[edges_[slot]] = slot;
    }
    edges_.pop_back();
  }
  EdgeKey Sample(StreamRng& rng) const { return edges_[rng.Below(edges_.size())]; }

 private:
  std::vector<EdgeKey> edges_;
  std::unordered_map<EdgeKey, std::size_t, EdgeKeyHash> index_;
};

class Builder {
 public:
  Builder(const GeneratorParams& params)
      : n_(params.n), max_edges_(params.n * (params.n - 1) / 2), rng_(params.seed) {
    stream_.header.n = params.n;
  }

  std::size_t max_edges() const { return max_edges_; }
  std::size_t edges() const { return pool_.size(); }
  bool Contains(const EdgeKey& e) const { return pool_.Contains(e); }

  EdgeKey InsertRandom() {
    EdgeKey e;
    do {
      const auto a = static_cast<VertexId>(rng_.Below(n_));
      auto b = static_cast<VertexId>(rng_.Below(n_ - 1));
      if (b >= a) ++b;
      e = EdgeKey::Of(a, b);
    } while (pool_.Contains(e));
    Insert(e);
    return e;
  }
  void Insert(const EdgeKey& e) {
    pool_.Add(e);
    stream_.updates.push_back({UpdateOp::kInsert, e});
  }
  void Delete(EdgeKey e) {
    pool_.Remove(e);
    stream_.updates.push_back({UpdateOp::kDelete, e});
  }
  void DeleteRandom() { Delete(pool_.Sample(rng_)); }

  StreamRng& rng() { return rng_; }
  UpdateStream Finish() { return std::move(stream_); }

 private:
  std::size_t n_;
  std::size_t max_edges_;
  StreamRng rng_;
  EdgePool pool_;
  UpdateStream stream_;
};

void Require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

std::optional<StreamModel> ParseStreamModel(std::string_view name) {
  if (name == "gnp-insert") return StreamModel::kGnpInsert;
  if (name == "mixed") return StreamModel::kMixed;
  if (name == "sliding-window") return StreamModel::kSlidingWindow;
  if (name == "star-flip") return StreamModel::kStarFlip;
  return std::nullopt;
}

std::string_view StreamModelName(StreamModel model) {
  switch (model) {
    case StreamModel::kGnpInsert: return "gnp-insert";
    case StreamModel::kMixed: return "mixed";
    case StreamModel::kSlidingWindow: return "sliding-window";
    case StreamModel::kStarFlip: return "star-flip";
  }
  return "unknown";
}

UpdateStream GenerateStream(const GeneratorParams& params) {
  Require(params.n >= 1, "n must be at least 1");
  Require(params.n <= std::numeric_limits<VertexId>::max(), "n too large");
  Builder b(params);
  Require(params.prefill <= b.max_edges(), "prefill exceeds the number of vertex pairs");

  std::deque<EdgeKey> window;
  for (std::size_t i = 0; i < params.prefill; ++i) window.push_back(b.InsertRandom());

  switch (params.model) {
    case StreamModel::kGnpInsert: {
      Require(params.target_edges <= b.max_edges(),
              "target_edges exceeds the number of vertex pairs");
      while (b.edges() < params.target_edges) b.InsertRandom();
      break;
    }
    case StreamModel::kMixed: {
      Require(params.target_edges >= 1, "mixed model needs target_edges >= 1");
      Require(params.target_edges <= b.max_edges(),
              "target_edges exceeds the number of vertex pairs");
      const double target = static_cast<double>(params.target_edges);
      for (std::size_t i = 0; i < params.updates; ++i) {
        bool insert;
        if (b.edges() == 0) {
          insert = true;
        } else if (b.edges() == b.max_edges()) {
          insert = false;
        } else {
          const double drift = (target - static_cast<double>(b.edges())) / (2.0 * target);
          insert = b.rng().Unit() < std::clamp(0.5 + drift, 0.0, 1.0);
        }
        if (insert) {
          b.InsertRandom();
        } else {
          b.DeleteRandom();
        }
      }
      break;
    }
    case StreamModel::kSlidingWindow: {
      Require(params.window >= 1, "sliding-window model needs window >= 1");
      Require(params.window < b.max_edges(), "window must leave room for a fresh edge");
      std::size_t emitted = 0;
      while (emitted < params.updates) {
        window.push_back(b.InsertRandom());
        ++emitted;
        while (window.size() > params.window && emitted < params.updates) {
          b.Delete(window.front());
          window.pop_front();
          ++emitted;
        }
      }
      break;
    }
    case StreamModel::kStarFlip: {
      Require(params.hubs >= 1 && params.hubs < params.n,
              "star-flip model needs 1 <= hubs < n");
      const std::size_t leaves = params.n - params.hubs;
      for (std::size_t i = 0; i < params.updates; ++i) {
        const auto hub = static_cast<VertexId>(b.rng().Below(params.hubs));
        const auto leaf = static_cast<VertexId>(params.hubs + b.rng().Below(leaves));
        const EdgeKey e = EdgeKey::Of(hub, leaf);
        if (b.Contains(e)) {
          b.Delete(e);
        } else {
          b.Insert(e);
        }
      }
      break;
    }
  }
  return b.Finish();
}

}  // namespace dynmis
