#pragma once

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isingdos/lattice.hpp"

namespace isingdos {

/// A benchmarked run disagreed with the single-worker result.
class BenchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchRecord {
  LatticeSpec spec;
  int num_workers = 1;
  /// Minimum wall time over the repeats.
  double wall_seconds = 0.0;
  /// Per-worker durations from the fastest repeat.
  std::vector<double> per_worker_seconds;
  /// Single-worker wall time divided by this record's wall time.
  double speedup_vs_one = 1.0;
};

/// Times the full enumeration for each worker count, `repeats` times each.
///
/// The single-worker run is always measured first and serves as both the
/// speedup baseline and the reference histogram; any run whose histogram
/// differs from it raises BenchError. Throws std::invalid_argument for an
/// empty list, a worker count below 1, or repeats below 1.
std::vector<BenchRecord> run_bench(const LatticeSpec& spec, std::span<const int> worker_counts, int repeats);

/// CSV with header `rows,cols,depth,N,workers,wall_seconds,speedup`, rows ordered
/// by (N, workers). Times are written in shortest round-trip form.
std::string emit_scaling_report(std::span<const BenchRecord> records);

/// Inverse of emit_scaling_report; per-worker times are not part of the CSV.
std::vector<BenchRecord> parse_scaling_report(std::istream& in);

}  // namespace isingdos
