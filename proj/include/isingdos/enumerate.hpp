#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "isingdos/histogram.hpp"
#include "isingdos/kernels.hpp"
#include "isingdos/lattice.hpp"

namespace isingdos {

/// Half-open range [start, end) of configuration indices handled by one worker.
struct Shard {
  int shard_id = 0;
  int num_shards = 1;
  ConfigIndex start = 0;
  ConfigIndex end = 0;

  ConfigIndex size() const { return end - start; }
};

/// Splits [0, 2^N) into `num_shards` contiguous ranges whose sizes differ by at
/// most one; the first (2^N mod num_shards) shards get the extra index.
/// Throws std::invalid_argument unless 1 <= num_shards <= 2^N.
std::vector<Shard> make_shards(const LatticeSpec& spec, std::int64_t num_shards);

/// Classifies every configuration in the shard by (spin excess, energy).
///
/// Walks the range one lowest-word block at a time: the contribution of all
/// other words is computed once per block and only the lowest column varies in
/// the inner loop.
DoSHistogram enumerate_shard(const LatticeSpec& spec, const KernelTables& tables, const Shard& shard);

/// Elementwise sum of partial histograms. Throws std::invalid_argument if any
/// part belongs to a different lattice.
DoSHistogram merge(const LatticeSpec& spec, std::span<const DoSHistogram> parts);

struct EnumerationRun {
  DoSHistogram dos;
  /// Wall time of each worker, measured inside the worker.
  std::vector<double> worker_seconds;
  double wall_seconds = 0.0;
};

/// Full enumeration on `num_workers` threads, one shard each, merged in shard order.
EnumerationRun enumerate_parallel(const LatticeSpec& spec, int num_workers);

/// Convenience wrapper returning only the merged histogram.
DoSHistogram enumerate_dos(const LatticeSpec& spec, int num_workers = 1);

}  // namespace isingdos
