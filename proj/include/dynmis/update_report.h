#ifndef DYNMIS_UPDATE_REPORT_H_
#define DYNMIS_UPDATE_REPORT_H_

#include <chrono>
#include <cstddef>
#include <vector>

namespace dynmis {

// Telemetry for a single edge update. `Item` is VertexId for the MIS
// structure and EdgeKey for the matching structure. Both sets are listed in
// the order they were settled, which is increasing rank.
template <typename Item>
struct UpdateReport {
  std::vector<Item> affected;  // eliminator changed
  std::vector<Item> flipped;   // membership changed; subset of affected
  std::size_t relevant_scanned = 0;
  std::size_t queue_pops = 0;
  std::chrono::nanoseconds elapsed{0};
};

}  // namespace dynmis

#endif  // DYNMIS_UPDATE_REPORT_H_
