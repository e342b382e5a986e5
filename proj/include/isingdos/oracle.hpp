#pragma once

#include <cstdint>
#include <vector>

#include "isingdos/histogram.hpp"
#include "isingdos/lattice.hpp"

namespace isingdos::oracle {

/// Naive reference path: explicit +-1 spins and per-site neighbour loops.
/// Shares no code with the bit-word kernels.

/// Largest lattice the oracle will enumerate.
inline constexpr int kOracleMaxSpins = 24;

/// Spins in row-major (row, col, layer) order, each +1 or -1.
struct SpinArray {
  std::vector<int> spins;

  int at(const LatticeSpec& spec, int row, int col, int layer) const {
    return spins[static_cast<std::size_t>((row * spec.cols() + col) * spec.depth() + layer)];
  }
};

/// Spin (r, c, l) is up when bit ((l * cols + c) * rows + r) of the index is set.
SpinArray decode(std::uint64_t index, const LatticeSpec& spec);

/// -J * sum over periodic nearest-neighbour bonds of S_i S_j, each bond once,
/// returned in units of J.
int energy(const SpinArray& spins, const LatticeSpec& spec);

/// Sum of all spins.
int magnetization(const SpinArray& spins);

/// Density of states by decoding and scoring every configuration.
/// Throws LatticeError when N > kOracleMaxSpins.
DoSHistogram full_dos(const LatticeSpec& spec);

/// log Z by direct summation of exp(-H / T) over every configuration, with
/// H = J E - h M. No shift is applied, so keep (|E| + |h| N) / T well below ~700.
double log_partition(const LatticeSpec& spec, double field, double temperature);

}  // namespace isingdos::oracle
