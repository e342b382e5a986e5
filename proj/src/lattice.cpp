#include "isingdos/lattice.hpp"

#include <sstream>

namespace isingdos {

LatticeSpec::LatticeSpec(int rows, int cols, int depth, double coupling)
    : rows_(rows), cols_(cols), depth_(depth), coupling_(coupling) {
  if (rows < 2 || cols < 2) {
    throw LatticeError("degenerate periodic axis: rows and cols must be >= 2 (got " +
                       std::to_string(rows) + "x" + std::to_string(cols) + ")");
  }
  if (depth < 1) {
    throw LatticeError("depth must be >= 1 (got " + std::to_string(depth) + ")");
  }
  if (rows > kMaxRows) {
    throw LatticeError("rows exceeds the column word cap of " + std::to_string(kMaxRows) +
                       " (got " + std::to_string(rows) + ")");
  }
  // Checked in 64 bits so huge arguments cannot overflow the product.
  const std::int64_t n = std::int64_t{rows} * cols * depth;
  if (n > kMaxSpins) {
    throw LatticeError("spin count N=" + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kMaxSpins));
  }
}

std::string LatticeSpec::describe() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_;
  if (is_3d()) os << "x" << depth_;
  return os.str();
}

Configuration Configuration::decode(ConfigIndex index, const LatticeSpec& spec) {
  Configuration config;
  config.index = index;
  config.words.resize(static_cast<std::size_t>(spec.words()));
  const Word mask = spec.word_mask();
  for (int w = 0; w < spec.words(); ++w) {
    config.words[static_cast<std::size_t>(w)] = static_cast<Word>(index >> (w * spec.rows())) & mask;
  }
  return config;
}

Configuration Configuration::from_words(std::vector<Word> words, const LatticeSpec& spec) {
  if (static_cast<int>(words.size()) != spec.words()) {
    throw LatticeError("expected " + std::to_string(spec.words()) + " words, got " +
                       std::to_string(words.size()));
  }
  for (Word w : words) {
    if ((w & ~spec.word_mask()) != 0) throw LatticeError("word has bits above the column height");
  }
  Configuration config;
  config.words = std::move(words);
  config.index = config.encode(spec);
  return config;
}

ConfigIndex Configuration::encode(const LatticeSpec& spec) const {
  ConfigIndex index = 0;
  for (int w = 0; w < spec.words(); ++w) {
    index |= ConfigIndex{words[static_cast<std::size_t>(w)]} << (w * spec.rows());
  }
  return index;
}

std::vector<WordBond> inter_word_bonds(const LatticeSpec& spec) {
  std::vector<WordBond> bonds;
  for (int layer = 0; layer < spec.depth(); ++layer) {
    for (int col = 0; col < spec.cols(); ++col) {
      const int here = spec.word_index(col, layer);
      bonds.push_back({here, spec.word_index((col + 1) % spec.cols(), layer)});
      if (spec.is_3d()) {
        bonds.push_back({here, spec.word_index(col, (layer + 1) % spec.depth())});
      }
    }
  }
  return bonds;
}

}  // namespace isingdos
