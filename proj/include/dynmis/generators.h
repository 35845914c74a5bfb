#ifndef DYNMIS_GENERATORS_H_
#define DYNMIS_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "dynmis/stream.h"

namespace dynmis {

// Oblivious update-stream models. All are deterministic in their parameters.
enum class StreamModel {
  kGnpInsert,      // uniform random insertions until target_edges are present
  kMixed,          // random inserts/deletes drifting toward target_edges
  kSlidingWindow,  // insert a fresh edge, then delete the oldest beyond `window`
  kStarFlip,       // toggle random edges between `hubs` hub vertices and leaves
};

std::optional<StreamModel> ParseStreamModel(std::string_view name);
std::string_view StreamModelName(StreamModel model);

struct GeneratorParams {
  StreamModel model = StreamModel::kMixed;
  std::size_t n = 0;
  std::size_t updates = 0;       // ignored by kGnpInsert
  std::size_t target_edges = 0;  // kGnpInsert and kMixed
  std::size_t window = 0;        // kSlidingWindow
  std::size_t hubs = 4;          // kStarFlip; hubs are vertices [0, hubs)
  std::size_t prefill = 0;       // random insertions emitted before the model
  std::uint64_t seed = 0;
};

// Throws std::invalid_argument for parameters that cannot be realized
// (e.g. more edges than the vertex set admits).
UpdateStream GenerateStream(const GeneratorParams& params);

}  // namespace dynmis

#endif  // DYNMIS_GENERATORS_H_
