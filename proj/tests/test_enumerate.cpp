#include <doctest.h>

#include <random>

#include "isingdos/enumerate.hpp"
#include "isingdos/oracle.hpp"
#include "test_support.hpp"

using namespace isingdos;

namespace {

// Hand enumeration of the 16 states of the periodic 2x2 lattice (B = 8).
DoSHistogram hand_2x2() {
  DoSHistogram dos(LatticeSpec(2, 2));
  dos.add(4, -8, 1);
  dos.add(-4, -8, 1);
  dos.add(2, 0, 4);
  dos.add(-2, 0, 4);
  dos.add(0, 0, 4);
  dos.add(0, 8, 2);
  return dos;
}

// Per-configuration classification through the naive path, for index ranges.
DoSHistogram classify_range(const LatticeSpec& spec, ConfigIndex start, ConfigIndex end) {
  DoSHistogram dos(spec);
  for (ConfigIndex i = start; i < end; ++i) {
    const auto spins = oracle::decode(i, spec);
    dos.add(oracle::magnetization(spins), oracle::energy(spins, spec));
  }
  return dos;
}

}  // namespace

TEST_CASE("make_shards examples") {
  const LatticeSpec spec(4, 4);
  const auto one = make_shards(spec, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].start == 0);
  CHECK(one[0].end == 65536);

  const auto four = make_shards(spec, 4);
  REQUIRE(four.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(four[static_cast<std::size_t>(i)].start == static_cast<ConfigIndex>(16384 * i));
    CHECK(four[static_cast<std::size_t>(i)].end == static_cast<ConfigIndex>(16384 * (i + 1)));
    CHECK(four[static_cast<std::size_t>(i)].shard_id == i);
    CHECK(four[static_cast<std::size_t>(i)].num_shards == 4);
  }

  const auto three = make_shards(LatticeSpec(2, 2), 3);
  REQUIRE(three.size() == 3);
  CHECK(three[0].size() == 6);
  CHECK(three[1].size() == 5);
  CHECK(three[2].size() == 5);
}

TEST_CASE("make_shards rejects out-of-range counts") {
  CHECK_THROWS_AS(make_shards(LatticeSpec(2, 2), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_shards(LatticeSpec(2, 2), -3), std::invalid_argument);
  CHECK_THROWS_AS(make_shards(LatticeSpec(2, 2), 17), std::invalid_argument);
  CHECK(make_shards(LatticeSpec(2, 2), 16).size() == 16);
}

TEST_CASE("shards partition the index space with near-equal sizes") {
  for (const LatticeSpec& spec : {LatticeSpec(2, 2), LatticeSpec(3, 3), LatticeSpec(4, 5)}) {
    for (std::int64_t p : {1, 2, 3, 5, 7, 8, 13, 16}) {
      const auto shards = make_shards(spec, p);
      REQUIRE(shards.size() == static_cast<std::size_t>(p));
      ConfigIndex expected_start = 0;
      ConfigIndex smallest = shards[0].size();
      ConfigIndex largest = shards[0].size();
      for (const Shard& s : shards) {
        REQUIRE(s.start == expected_start);
        expected_start = s.end;
        smallest = std::min(smallest, s.size());
        largest = std::max(largest, s.size());
      }
      CHECK(expected_start == spec.configurations());
      CHECK(largest - smallest <= 1);
    }
  }
}

TEST_CASE("2x2 full enumeration matches the hand count") {
  const LatticeSpec spec(2, 2);
  const auto tables = KernelTables::build(2);
  const auto dos = enumerate_shard(spec, tables, make_shards(spec, 1)[0]);
  CHECK(dos == hand_2x2());
  CHECK(dos.total() == 16);
  CHECK(dos.cells().size() == 6);
}

TEST_CASE("4x4 full enumeration matches the reference DoS") {
  const LatticeSpec spec(4, 4);
  const auto dos = enumerate_shard(spec, KernelTables::build(4), make_shards(spec, 1)[0]);
  CHECK(dos.count(0, 0) == 4356);
  CHECK(dos == testing::reference_4x4_histogram());
}

TEST_CASE("empty shard gives an empty histogram") {
  const LatticeSpec spec(3, 3);
  const auto dos = enumerate_shard(spec, KernelTables::build(3), Shard{0, 1, 100, 100});
  CHECK(dos.total() == 0);
  CHECK(dos.cells().empty());
}

TEST_CASE("enumerate_shard validates its inputs") {
  const LatticeSpec spec(3, 3);
  CHECK_THROWS_AS(enumerate_shard(spec, KernelTables::build(4), Shard{0, 1, 0, 8}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_shard(spec, KernelTables::build(3), Shard{0, 1, 8, 4}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_shard(spec, KernelTables::build(3), Shard{0, 1, 0, 513}), std::invalid_argument);
}

TEST_CASE("every index in a shard is visited exactly once") {
  // Arbitrary, block-misaligned ranges compared against a per-index classification.
  std::mt19937_64 rng(11);
  for (const LatticeSpec& spec : {LatticeSpec(3, 3), LatticeSpec(4, 2, 2), LatticeSpec(2, 2, 3)}) {
    const auto tables = KernelTables::build(spec.rows());
    for (int trial = 0; trial < 25; ++trial) {
      ConfigIndex a = rng() % (spec.configurations() + 1);
      ConfigIndex b = rng() % (spec.configurations() + 1);
      if (a > b) std::swap(a, b);
      const auto dos = enumerate_shard(spec, tables, Shard{0, 1, a, b});
      REQUIRE(dos.total() == b - a);
      REQUIRE(dos == classify_range(spec, a, b));
    }
  }
}

TEST_CASE("tall columns use the direct kernels") {
  const LatticeSpec spec(18, 2);
  const auto tables = KernelTables::for_rows(18);
  REQUIRE_FALSE(tables.has_tables());
  const ConfigIndex start = (ConfigIndex{5} << 18) + 12345;
  const ConfigIndex end = start + 300000;  // spans two lowest-word blocks
  CHECK(enumerate_shard(spec, tables, Shard{0, 1, start, end}) == classify_range(spec, start, end));
}

TEST_CASE("merge is order- and shard-count-independent") {
  for (const LatticeSpec& spec : {LatticeSpec(4, 4), LatticeSpec(3, 4), LatticeSpec(2, 2, 2)}) {
    const auto tables = KernelTables::build(spec.rows());
    const auto whole = enumerate_shard(spec, tables, make_shards(spec, 1)[0]);
    for (std::int64_t p : {1, 2, 3, 4, 8}) {
      std::vector<DoSHistogram> parts;
      for (const Shard& s : make_shards(spec, p)) parts.push_back(enumerate_shard(spec, tables, s));
      CHECK(merge(spec, parts) == whole);
      std::reverse(parts.begin(), parts.end());
      CHECK(merge(spec, parts) == whole);
    }
  }
}

TEST_CASE("merge of halves and of nothing") {
  const LatticeSpec spec(2, 2);
  const auto tables = KernelTables::build(2);
  const std::vector<DoSHistogram> halves{enumerate_shard(spec, tables, Shard{0, 2, 0, 8}),
                                         enumerate_shard(spec, tables, Shard{1, 2, 8, 16})};
  CHECK(merge(spec, halves) == hand_2x2());
  CHECK(merge(spec, {}).total() == 0);
  const std::vector<DoSHistogram> mixed{DoSHistogram(spec), DoSHistogram(LatticeSpec(2, 3))};
  CHECK_THROWS_AS(merge(spec, mixed), std::invalid_argument);
}

TEST_CASE("parallel enumeration is deterministic across worker counts") {
  for (const LatticeSpec& spec : {LatticeSpec(4, 4), LatticeSpec(3, 4)}) {
    const auto reference = enumerate_dos(spec, 1);
    for (int workers : {2, 3, 4, 8}) {
      const auto run = enumerate_parallel(spec, workers);
      CHECK(run.dos == reference);
      CHECK(run.worker_seconds.size() == static_cast<std::size_t>(workers));
      CHECK(run.wall_seconds > 0.0);
    }
  }
}
