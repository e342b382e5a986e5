#include <doctest.h>

#include "isingdos/lattice.hpp"

using namespace isingdos;

TEST_CASE("spin and bond counts") {
  const LatticeSpec square(4, 4);
  CHECK(square.spins() == 16);
  CHECK(square.bonds() == 32);
  CHECK(square.words() == 4);
  CHECK(square.word_mask() == 15U);
  CHECK(square.configurations() == 65536U);

  const LatticeSpec cube(2, 2, 3);
  CHECK(cube.is_3d());
  CHECK(cube.spins() == 12);
  CHECK(cube.bonds() == 36);
  CHECK(cube.words() == 6);
  CHECK(cube.describe() == "2x2x3");
}

TEST_CASE("construction rejects degenerate and oversized lattices") {
  CHECK_THROWS_AS(LatticeSpec(1, 5), LatticeError);
  CHECK_THROWS_AS(LatticeSpec(5, 1), LatticeError);
  CHECK_THROWS_AS(LatticeSpec(4, 4, 0), LatticeError);
  CHECK_THROWS_AS(LatticeSpec(7, 6), LatticeError);       // N = 42
  CHECK_THROWS_AS(LatticeSpec(31, 2), LatticeError);      // taller than a column word
  CHECK_THROWS_AS(LatticeSpec(1000, 1000000), LatticeError);
  CHECK_NOTHROW(LatticeSpec(20, 2));                      // N = 40, at the cap
  CHECK_NOTHROW(LatticeSpec(5, 8));

  try {
    LatticeSpec(1, 5);
    FAIL("expected throw");
  } catch (const LatticeError& e) {
    CHECK(std::string(e.what()).find("degenerate periodic axis") != std::string::npos);
  }
  try {
    LatticeSpec(6, 7);
    FAIL("expected throw");
  } catch (const LatticeError& e) {
    CHECK(std::string(e.what()).find("cap of 40") != std::string::npos);
  }
}

TEST_CASE("decode and encode are inverse over the whole configuration space") {
  for (const LatticeSpec& spec : {LatticeSpec(4, 4), LatticeSpec(3, 5), LatticeSpec(2, 2, 2), LatticeSpec(2, 3, 2)}) {
    CAPTURE(spec.describe());
    for (ConfigIndex index = 0; index < spec.configurations(); ++index) {
      const Configuration config = Configuration::decode(index, spec);
      REQUIRE(config.words.size() == static_cast<std::size_t>(spec.words()));
      for (Word w : config.words) REQUIRE(w <= spec.word_mask());
      REQUIRE(config.encode(spec) == index);
    }
  }
}

TEST_CASE("from_words validates word count and stray bits") {
  const LatticeSpec spec(4, 4);
  const auto config = Configuration::from_words({0b0001, 0, 0, 0b1000}, spec);
  CHECK(config.index == ((ConfigIndex{0b1000} << 12) | 1));
  CHECK_THROWS_AS(Configuration::from_words({0, 0, 0}, spec), LatticeError);
  CHECK_THROWS_AS(Configuration::from_words({0b10000, 0, 0, 0}, spec), LatticeError);
}

TEST_CASE("inter-word bonds cover every neighbouring column pair once") {
  const auto square = inter_word_bonds(LatticeSpec(4, 4));
  REQUIRE(square.size() == 4);
  CHECK(square.back().a == 3);
  CHECK(square.back().b == 0);

  // Two columns: both periodic neighbours are the same word, so the pair appears twice.
  const auto narrow = inter_word_bonds(LatticeSpec(3, 2));
  REQUIRE(narrow.size() == 2);
  CHECK(narrow[0].b == 1);
  CHECK(narrow[1].b == 0);

  const LatticeSpec cube(2, 3, 2);
  const auto cubic = inter_word_bonds(cube);
  CHECK(cubic.size() == static_cast<std::size_t>(2 * cube.words()));
  // Intra-word bonds (rows per word) plus rows per inter-word pair give B.
  CHECK(cube.rows() * (cube.words() + static_cast<int>(cubic.size())) == cube.bonds());
}
