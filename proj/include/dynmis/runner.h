#ifndef DYNMIS_RUNNER_H_
#define DYNMIS_RUNNER_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dynmis/dynamic_mis.h"
#include "dynmis/dynamic_mm.h"
#include "dynmis/stream.h"

namespace dynmis {

enum class Mode { kMis, kMm };

std::optional<Mode> ParseMode(std::string_view name);
std::string_view ModeName(Mode mode);

// Compares the maintained state with a from-scratch oracle run and the
// structure's own invariant scan. Returns the first divergence found.
std::optional<std::string> VerifyAgainstOracle(const DynamicMis& mis);
std::optional<std::string> VerifyAgainstOracle(const DynamicMm& mm);

// One CSV row per update.
struct MetricsRow {
  std::size_t index = 0;
  Update update;
  std::size_t affected = 0;
  std::size_t flipped = 0;
  std::size_t relevant_scanned = 0;
  std::size_t queue_pops = 0;
  std::int64_t elapsed_ns = 0;
  std::size_t edges = 0;
  std::size_t solution_size = 0;
};

void WriteCsvHeader(std::ostream& out);
void WriteCsvRow(std::ostream& out, const MetricsRow& row);

struct RunOptions {
  Mode mode = Mode::kMis;
  std::uint64_t seed = 1;
  // Verify after every verify_every-th update; 0 disables verification.
  std::size_t verify_every = 0;
  std::ostream* csv = nullptr;
};

struct RunSummary {
  std::size_t updates = 0;
  std::size_t verifications = 0;
  double mean_affected = 0;
  double mean_flipped = 0;
  double mean_relevant = 0;
  double mean_elapsed_ns = 0;
  double p95_affected = 0;
  double p95_flipped = 0;
  double p95_elapsed_ns = 0;
  std::size_t max_affected = 0;
  std::size_t max_flipped = 0;
  std::size_t final_edges = 0;
  std::size_t final_solution_size = 0;
};

class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::size_t update_index, const std::string& detail);
  // 1-based index of the update after which the divergence was seen.
  std::size_t update_index() const { return update_index_; }

 private:
  std::size_t update_index_;
};

// Drives the chosen structure from an empty graph on n vertices. Throws
// VerificationError on the first divergence.
RunSummary RunStream(const UpdateStream& stream, const RunOptions& options);

void PrintSummary(std::ostream& out, const RunSummary& summary);

}  // namespace dynmis

#endif  // DYNMIS_RUNNER_H_
