#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isingdos/lattice.hpp"

namespace isingdos {

/// One occupied cell of a density of states.
struct DoSCell {
  std::uint64_t count;
  int magnetization;  // M, spin excess
  int energy;         // E in units of J

  friend bool operator==(const DoSCell&, const DoSCell&) = default;
};

/// Exact density of states g(M, E) stored densely over the reachable grid.
///
/// Cells are indexed by m = (M + N) / 2 in [0, N] and e = (E + B) / 2 in
/// [0, B], with E the exchange energy in units of J. Cells whose (M, E) parity
/// differs from (N, B) are unreachable and always zero.
class DoSHistogram {
 public:
  explicit DoSHistogram(LatticeSpec spec);

  const LatticeSpec& spec() const { return spec_; }

  /// True when (M, E) lies on the grid with the right parity.
  bool contains(int magnetization, int energy) const;

  std::uint64_t count(int magnetization, int energy) const;
  /// Throws std::out_of_range when (M, E) is not a grid point.
  void add(int magnetization, int energy, std::uint64_t count = 1);

  // Raw index access for the enumeration hot loop.
  std::uint64_t& at_index(int m_index, int e_index) {
    return counts_[static_cast<std::size_t>(m_index) * energy_bins_ + static_cast<std::size_t>(e_index)];
  }
  std::uint64_t at_index(int m_index, int e_index) const {
    return counts_[static_cast<std::size_t>(m_index) * energy_bins_ + static_cast<std::size_t>(e_index)];
  }
  int magnetization_bins() const { return spec_.spins() + 1; }
  int energy_bins() const { return static_cast<int>(energy_bins_); }

  /// Sum over all cells; 2^N for a complete enumeration.
  std::uint64_t total() const;

  /// Nonzero cells ordered by M descending, then E ascending.
  std::vector<DoSCell> cells() const;

  /// Elementwise sum. Throws std::invalid_argument on mismatched lattices.
  DoSHistogram& operator+=(const DoSHistogram& other);

  friend bool operator==(const DoSHistogram&, const DoSHistogram&) = default;

 private:
  LatticeSpec spec_;
  std::size_t energy_bins_;
  std::vector<std::uint64_t> counts_;
};

/// Exact binomial coefficient C(n, k); exact for every n up to kMaxSpins.
std::uint64_t binomial(int n, int k);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> failures;
};

/// Outcome of the consistency checks over a density of states.
struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_string() const;
};

/// Check names used in VerificationReport.
inline constexpr const char* kCheckTotal = "total_count";
inline constexpr const char* kCheckBinomial = "binomial_marginals";
inline constexpr const char* kCheckSymmetry = "flip_symmetry";
inline constexpr const char* kCheckGrid = "energy_grid";

/// Checks total = 2^N, per-M marginals against C(N, (N + M) / 2), g(M, E) = g(-M, E),
/// and that every occupied E has the parity of B and lies in [-B, B].
VerificationReport verify_dos(const DoSHistogram& dos);

}  // namespace isingdos
