#ifndef DYNMIS_BENCH_H_
#define DYNMIS_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dynmis/runner.h"
#include "dynmis/stream.h"

namespace dynmis {

// Dynamic maintenance versus recomputing the greedy solution from scratch
// after every update, over the same stream.
struct BenchReport {
  std::size_t warmup = 0;
  std::size_t timed_updates = 0;
  std::size_t edges_after_warmup = 0;
  double dynamic_mean_ns = 0;
  double recompute_mean_ns = 0;
  double speedup = 0;  // recompute_mean_ns / dynamic_mean_ns
  // Solution size after each timed update; identical for both routes.
  std::vector<std::size_t> solution_sizes;
};

// The first `warmup` updates build the starting graph untimed: the dynamic
// structure is constructed on it and the recompute route starts from it.
// Throws std::logic_error if the two routes disagree on a solution size.
BenchReport BenchCompare(const UpdateStream& stream, Mode mode, std::uint64_t seed,
                         std::size_t warmup = 0);

void PrintBenchReport(std::ostream& out, const BenchReport& report);

}  // namespace dynmis

#endif  // DYNMIS_BENCH_H_
