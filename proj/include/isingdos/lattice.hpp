#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace isingdos {

/// Thrown when lattice dimensions or other construction arguments are out of range.
class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest supported spin count; configuration indices stay well inside 64 bits.
inline constexpr int kMaxSpins = 40;
/// Largest column height; a column must fit the significant bits of a 32-bit word.
inline constexpr int kMaxRows = 30;

using Word = std::uint32_t;
using ConfigIndex = std::uint64_t;

/// Geometry of a periodic square (depth == 1) or simple-cubic (depth >= 2) lattice.
///
/// Spins are packed column by column: each column of `rows` spins is one bit-word,
/// and words are laid out as word = layer * cols + col. Within the global
/// configuration index, spin (row r, col c, layer l) lives at bit
/// ((l * cols + c) * rows + r). A set bit is spin up (+1).
class LatticeSpec {
 public:
  /// Validates the dimensions and throws LatticeError naming the violated bound.
  LatticeSpec(int rows, int cols, int depth = 1, double coupling = 1.0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int depth() const { return depth_; }
  double coupling() const { return coupling_; }

  bool is_3d() const { return depth_ > 1; }
  int spins() const { return rows_ * cols_ * depth_; }
  /// Nearest-neighbour bonds with periodic wrap: 2N in 2D, 3N in 3D.
  int bonds() const { return spins() * (is_3d() ? 3 : 2); }
  int words() const { return cols_ * depth_; }
  Word word_mask() const { return static_cast<Word>((std::uint64_t{1} << rows_) - 1); }
  /// 2^N, the size of the configuration space.
  ConfigIndex configurations() const { return ConfigIndex{1} << spins(); }

  int word_index(int col, int layer) const { return layer * cols_ + col; }

  std::string describe() const;

  friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

 private:
  int rows_;
  int cols_;
  int depth_;
  double coupling_;
};

/// One spin configuration as an array of column bit-words.
struct Configuration {
  ConfigIndex index = 0;
  std::vector<Word> words;

  static Configuration decode(ConfigIndex index, const LatticeSpec& spec);
  static Configuration from_words(std::vector<Word> words, const LatticeSpec& spec);
  ConfigIndex encode(const LatticeSpec& spec) const;
};

/// Unordered pair of word indices whose bits are coupled position by position.
struct WordBond {
  int a;
  int b;
};

/// Inter-word bonds: along the column axis in every layer and, in 3D, along the
/// layer axis for every column. Each entry contributes `rows` spin bonds.
std::vector<WordBond> inter_word_bonds(const LatticeSpec& spec);

}  // namespace isingdos
