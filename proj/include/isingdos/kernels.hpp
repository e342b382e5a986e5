#pragma once

#include <cstdint>
#include <vector>

#include "isingdos/lattice.hpp"

namespace isingdos {

/// Column heights up to this bound get precomputed lookup tables (2^16 entries each).
inline constexpr int kTableCap = 16;

/// Kernighan bit count: clears the lowest set bit until the word is empty.
constexpr int popcount(std::uint64_t word) {
  int count = 0;
  while (word != 0) {
    word &= word - 1;
    ++count;
  }
  return count;
}

/// Rotates the low `bits` bits of `word` left by one position.
constexpr Word rotate_left(Word word, int bits) {
  const Word mask = static_cast<Word>((std::uint64_t{1} << bits) - 1);
  return static_cast<Word>(((word << 1) | (word >> (bits - 1))) & mask);
}

/// Per-column-height lookup state for the energy and spin-excess kernels.
///
/// With tables, `popcount_table[j]` is the number of set bits of j and
/// `shift_table[j]` is j with its `rows` significant bits rotated left by one.
/// Without tables (rows > kTableCap) both are empty and the kernels compute
/// counts and rotations directly.
class KernelTables {
 public:
  /// Builds the lookup tables; throws LatticeError unless 2 <= rows <= kTableCap.
  static KernelTables build(int rows);
  /// Tables when rows fits under kTableCap, the direct fallback otherwise.
  static KernelTables for_rows(int rows);

  int rows() const { return rows_; }
  Word mask() const { return mask_; }
  bool has_tables() const { return !popcount_table_.empty(); }

  const std::vector<std::uint8_t>& popcount_table() const { return popcount_table_; }
  const std::vector<Word>& shift_table() const { return shift_table_; }

  int count(Word word) const {
    return has_tables() ? popcount_table_[word] : popcount(word);
  }
  Word shifted(Word word) const {
    return has_tables() ? shift_table_[word] : rotate_left(word, rows_);
  }

 private:
  explicit KernelTables(int rows);

  int rows_;
  Word mask_;
  std::vector<std::uint8_t> popcount_table_;
  std::vector<Word> shift_table_;
};

/// Equal-spin pairs between two neighbouring columns: popcount(~(a ^ b) & mask).
inline int aligned_row_bonds(Word a, Word b, const KernelTables& tables) {
  return tables.count(~(a ^ b) & tables.mask());
}

/// Equal-spin vertical pairs inside one periodic column.
inline int aligned_column_bonds(Word word, const KernelTables& tables) {
  return tables.count(~(word ^ tables.shifted(word)) & tables.mask());
}

/// M = 2 * (#up) - N.
int spin_excess(const Configuration& config, const LatticeSpec& spec);

/// Number of aligned bonds (En) over the whole periodic lattice.
int aligned_bonds(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables);

/// Exchange energy in units of J: B - 2 * En, each bond counted once.
int bond_energy(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables);

/// Exchange energy J * (B - 2 * En). For J = 1 in 2D this is 2 * (N - En).
double total_energy(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables);

}  // namespace isingdos
