#include <doctest.h>

#include <cmath>

#include "isingdos/enumerate.hpp"
#include "isingdos/kernels.hpp"
#include "isingdos/oracle.hpp"
#include "isingdos/thermo.hpp"
#include "test_support.hpp"

using namespace isingdos;

namespace {

oracle::SpinArray uniform(const LatticeSpec& spec, int value) {
  return {std::vector<int>(static_cast<std::size_t>(spec.spins()), value)};
}

oracle::SpinArray checkerboard(const LatticeSpec& spec) {
  oracle::SpinArray s = uniform(spec, 1);
  for (int r = 0; r < spec.rows(); ++r) {
    for (int c = 0; c < spec.cols(); ++c) {
      s.spins[static_cast<std::size_t>(r * spec.cols() + c)] = (r + c) % 2 == 0 ? 1 : -1;
    }
  }
  return s;
}

const std::vector<LatticeSpec>& small_lattices() {
  static const std::vector<LatticeSpec> lattices{LatticeSpec(2, 2), LatticeSpec(2, 3), LatticeSpec(3, 3),
                                                 LatticeSpec(2, 4), LatticeSpec(3, 4), LatticeSpec(4, 4),
                                                 LatticeSpec(2, 2, 2), LatticeSpec(2, 2, 3)};
  return lattices;
}

}  // namespace

TEST_CASE("oracle energy examples") {
  const LatticeSpec four(4, 4);
  CHECK(oracle::energy(uniform(four, 1), four) == -32);
  CHECK(oracle::energy(checkerboard(four), four) == 32);
  const LatticeSpec three(3, 3);
  CHECK(oracle::energy(uniform(three, 1), three) == -18);
}

TEST_CASE("oracle magnetization examples") {
  CHECK(oracle::magnetization(uniform(LatticeSpec(4, 4), 1)) == 16);
  auto half = uniform(LatticeSpec(4, 4), 1);
  for (std::size_t i = 0; i < 8; ++i) half.spins[i] = -1;
  CHECK(oracle::magnetization(half) == 0);
  auto one_down = uniform(LatticeSpec(3, 3), 1);
  one_down.spins[4] = -1;
  CHECK(oracle::magnetization(one_down) == 7);
}

TEST_CASE("oracle decode places spin (r, c, l) at bit ((l*cols + c)*rows + r)") {
  const LatticeSpec spec(3, 4, 2);
  const auto s = oracle::decode(ConfigIndex{1} << ((1 * 4 + 2) * 3 + 1), spec);
  CHECK(s.at(spec, 1, 2, 1) == 1);
  CHECK(oracle::magnetization(s) == 2 - spec.spins());
}

TEST_CASE("kernel and oracle agree on every configuration") {
  for (const LatticeSpec& spec : small_lattices()) {
    CAPTURE(spec.describe());
    const auto tables = KernelTables::build(spec.rows());
    for (ConfigIndex i = 0; i < spec.configurations(); ++i) {
      const auto spins = oracle::decode(i, spec);
      const auto config = Configuration::decode(i, spec);
      REQUIRE(oracle::energy(spins, spec) == bond_energy(config, spec, tables));
      REQUIRE(oracle::magnetization(spins) == spin_excess(config, spec));
    }
  }
}

TEST_CASE("oracle full DoS") {
  const auto two = oracle::full_dos(LatticeSpec(2, 2));
  CHECK(two.count(4, -8) == 1);
  CHECK(two.count(-4, -8) == 1);
  CHECK(two.count(2, 0) == 4);
  CHECK(two.count(-2, 0) == 4);
  CHECK(two.count(0, 0) == 4);
  CHECK(two.count(0, 8) == 2);
  CHECK(two.total() == 16);

  CHECK(oracle::full_dos(LatticeSpec(4, 4)) == testing::reference_4x4_histogram());

  const auto cube = oracle::full_dos(LatticeSpec(2, 2, 2));
  CHECK(cube.total() == 256);
  std::uint64_t ground = 0;
  for (int m = -8; m <= 8; m += 2) ground += cube.count(m, -24);
  CHECK(ground == 2);

  for (const LatticeSpec& spec : small_lattices()) {
    const auto dos = oracle::full_dos(spec);
    CHECK_MESSAGE(verify_dos(dos).passed(), spec.describe());
    CHECK(dos == enumerate_dos(spec, 2));
  }
}

TEST_CASE("oracle refuses lattices above its cap") {
  CHECK_THROWS_AS(oracle::full_dos(LatticeSpec(5, 5)), LatticeError);
  CHECK_THROWS_AS(oracle::log_partition(LatticeSpec(5, 5), 0.0, 1.0), LatticeError);
}

TEST_CASE("direct Boltzmann sum agrees with the DoS route") {
  for (const LatticeSpec& spec : small_lattices()) {
    const auto dos = enumerate_dos(spec);
    for (double h : {0.0, 0.5}) {
      for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const double direct = oracle::log_partition(spec, h, t);
        const double via_dos = partition_point(dos, h, t).log_z;
        CHECK_MESSAGE(std::abs(direct - via_dos) <= 1e-10 * std::abs(direct), spec.describe(), " h=", h, " T=", t);
      }
    }
  }
}
