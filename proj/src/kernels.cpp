#include "isingdos/kernels.hpp"

#include <string>

namespace isingdos {

KernelTables::KernelTables(int rows)
    : rows_(rows), mask_(static_cast<Word>((std::uint64_t{1} << rows) - 1)) {}

KernelTables KernelTables::build(int rows) {
  if (rows < 2 || rows > kTableCap) {
    throw LatticeError("lookup tables need 2 <= rows <= " + std::to_string(kTableCap) +
                       " (got " + std::to_string(rows) + ")");
  }
  KernelTables tables(rows);
  const std::size_t size = std::size_t{1} << rows;
  tables.popcount_table_.resize(size);
  tables.shift_table_.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    const auto word = static_cast<Word>(j);
    tables.popcount_table_[j] = static_cast<std::uint8_t>(popcount(word));
    tables.shift_table_[j] = rotate_left(word, rows);
  }
  return tables;
}

KernelTables KernelTables::for_rows(int rows) {
  if (rows <= kTableCap) return build(rows);
  if (rows > kMaxRows) {
    throw LatticeError("rows exceeds the column word cap of " + std::to_string(kMaxRows));
  }
  return KernelTables(rows);
}

int spin_excess(const Configuration& config, const LatticeSpec& spec) {
  int up = 0;
  for (Word w : config.words) up += popcount(w);
  return 2 * up - spec.spins();
}

int aligned_bonds(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables) {
  int aligned = 0;
  for (Word w : config.words) aligned += aligned_column_bonds(w, tables);
  for (const WordBond& bond : inter_word_bonds(spec)) {
    aligned += aligned_row_bonds(config.words[static_cast<std::size_t>(bond.a)],
                                 config.words[static_cast<std::size_t>(bond.b)], tables);
  }
  return aligned;
}

int bond_energy(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables) {
  return spec.bonds() - 2 * aligned_bonds(config, spec, tables);
}

double total_energy(const Configuration& config, const LatticeSpec& spec, const KernelTables& tables) {
  return spec.coupling() * bond_energy(config, spec, tables);
}

}  // namespace isingdos
