#include "isingdos/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <string>
#include <thread>

namespace isingdos {

namespace {

struct TableKernel {
  const std::uint8_t* counts;
  const Word* shifts;
  Word mask;

  int count(Word w) const { return counts[w]; }
  int column(Word w) const { return counts[~(w ^ shifts[w]) & mask]; }
  int row(Word a, Word b) const { return counts[~(a ^ b) & mask]; }
};

struct DirectKernel {
  int rows;
  Word mask;

  int count(Word w) const { return std::popcount(w); }
  int column(Word w) const { return std::popcount(~(w ^ rotate_left(w, rows)) & mask); }
  int row(Word a, Word b) const { return std::popcount(~(a ^ b) & mask); }
};

template <typename Kernel>
void walk(const LatticeSpec& spec, const Kernel& kernel, const Shard& shard, DoSHistogram& hist) {
  const int rows = spec.rows();
  const int bonds = spec.bonds();
  const ConfigIndex block = ConfigIndex{1} << rows;

  // Bonds touching word 0 vary in the inner loop; the rest are fixed per block.
  std::vector<int> partners;
  std::vector<WordBond> fixed_bonds;
  for (const WordBond& bond : inter_word_bonds(spec)) {
    if (bond.a == 0) {
      partners.push_back(bond.b);
    } else if (bond.b == 0) {
      partners.push_back(bond.a);
    } else {
      fixed_bonds.push_back(bond);
    }
  }
  std::vector<Word> words(static_cast<std::size_t>(spec.words()), 0);
  std::vector<Word> partner_words(partners.size(), 0);

  ConfigIndex index = shard.start;
  while (index < shard.end) {
    const ConfigIndex base = index & ~(block - 1);
    const auto lo = static_cast<Word>(index - base);
    const auto hi = static_cast<Word>(std::min(base + block, shard.end) - base);

    int fixed_aligned = 0;
    int fixed_up = 0;
    for (int w = 1; w < spec.words(); ++w) {
      const auto word = static_cast<Word>(base >> (w * rows)) & kernel.mask;
      words[static_cast<std::size_t>(w)] = word;
      fixed_aligned += kernel.column(word);
      fixed_up += kernel.count(word);
    }
    for (const WordBond& bond : fixed_bonds) {
      fixed_aligned += kernel.row(words[static_cast<std::size_t>(bond.a)], words[static_cast<std::size_t>(bond.b)]);
    }
    for (std::size_t k = 0; k < partners.size(); ++k) {
      partner_words[k] = words[static_cast<std::size_t>(partners[k])];
    }

    for (Word v = lo; v < hi; ++v) {
      int aligned = fixed_aligned + kernel.column(v);
      for (Word p : partner_words) aligned += kernel.row(v, p);
      // m index = #up; e index = (E + B) / 2 = B - aligned.
      ++hist.at_index(fixed_up + kernel.count(v), bonds - aligned);
    }
    index = base + hi;
  }
}

}  // namespace

std::vector<Shard> make_shards(const LatticeSpec& spec, std::int64_t num_shards) {
  const ConfigIndex total = spec.configurations();
  if (num_shards < 1 || static_cast<ConfigIndex>(num_shards) > total) {
    throw std::invalid_argument("num_shards must be in [1, 2^" + std::to_string(spec.spins()) +
                                "] (got " + std::to_string(num_shards) + ")");
  }
  const auto p = static_cast<ConfigIndex>(num_shards);
  const ConfigIndex base_size = total / p;
  const ConfigIndex remainder = total % p;
  std::vector<Shard> shards;
  shards.reserve(static_cast<std::size_t>(p));
  ConfigIndex start = 0;
  for (ConfigIndex i = 0; i < p; ++i) {
    const ConfigIndex size = base_size + (i < remainder ? 1 : 0);
    shards.push_back({static_cast<int>(i), static_cast<int>(num_shards), start, start + size});
    start += size;
  }
  return shards;
}

DoSHistogram enumerate_shard(const LatticeSpec& spec, const KernelTables& tables, const Shard& shard) {
  if (tables.rows() != spec.rows()) {
    throw std::invalid_argument("kernel tables built for a different column height");
  }
  if (shard.start > shard.end || shard.end > spec.configurations()) {
    throw std::invalid_argument("shard range outside [0, 2^N)");
  }
  DoSHistogram hist(spec);
  if (tables.has_tables()) {
    walk(spec, TableKernel{tables.popcount_table().data(), tables.shift_table().data(), tables.mask()},
         shard, hist);
  } else {
    walk(spec, DirectKernel{spec.rows(), tables.mask()}, shard, hist);
  }
  return hist;
}

DoSHistogram merge(const LatticeSpec& spec, std::span<const DoSHistogram> parts) {
  DoSHistogram merged(spec);
  for (const DoSHistogram& part : parts) merged += part;
  return merged;
}

EnumerationRun enumerate_parallel(const LatticeSpec& spec, int num_workers) {
  using Clock = std::chrono::steady_clock;
  const auto shards = make_shards(spec, num_workers);
  const KernelTables tables = KernelTables::for_rows(spec.rows());

  std::vector<DoSHistogram> parts(shards.size(), DoSHistogram(spec));
  std::vector<double> seconds(shards.size(), 0.0);

  const auto started = Clock::now();
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards.size());
    for (std::size_t i = 0; i < shards.size(); ++i) {
      workers.emplace_back([&, i] {
        const auto t0 = Clock::now();
        parts[i] = enumerate_shard(spec, tables, shards[i]);
        seconds[i] = std::chrono::duration<double>(Clock::now() - t0).count();
      });
    }
  }
  DoSHistogram merged = merge(spec, parts);
  const double wall = std::chrono::duration<double>(Clock::now() - started).count();
  return {std::move(merged), std::move(seconds), wall};
}

DoSHistogram enumerate_dos(const LatticeSpec& spec, int num_workers) {
  return enumerate_parallel(spec, num_workers).dos;
}

}  // namespace isingdos
