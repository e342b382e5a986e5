#include "isingdos/oracle.hpp"

#include <cmath>
#include <string>

namespace isingdos::oracle {

namespace {

void require_oracle_size(const LatticeSpec& spec) {
  if (spec.spins() > kOracleMaxSpins) {
    throw LatticeError("oracle enumeration is capped at N=" + std::to_string(kOracleMaxSpins) +
                       " (got N=" + std::to_string(spec.spins()) + ")");
  }
}

}  // namespace

SpinArray decode(std::uint64_t index, const LatticeSpec& spec) {
  SpinArray out;
  out.spins.assign(static_cast<std::size_t>(spec.spins()), -1);
  for (int r = 0; r < spec.rows(); ++r) {
    for (int c = 0; c < spec.cols(); ++c) {
      for (int l = 0; l < spec.depth(); ++l) {
        const int bit = (l * spec.cols() + c) * spec.rows() + r;
        if ((index >> bit) & 1U) {
          out.spins[static_cast<std::size_t>((r * spec.cols() + c) * spec.depth() + l)] = 1;
        }
      }
    }
  }
  return out;
}

int energy(const SpinArray& spins, const LatticeSpec& spec) {
  const int rows = spec.rows();
  const int cols = spec.cols();
  const int depth = spec.depth();
  int sum = 0;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      for (int l = 0; l < depth; ++l) {
        const int s = spins.at(spec, r, c, l);
        sum += s * spins.at(spec, (r + 1) % rows, c, l);
        sum += s * spins.at(spec, r, (c + 1) % cols, l);
        if (depth > 1) sum += s * spins.at(spec, r, c, (l + 1) % depth);
      }
    }
  }
  return -sum;
}

int magnetization(const SpinArray& spins) {
  int sum = 0;
  for (int s : spins.spins) sum += s;
  return sum;
}

DoSHistogram full_dos(const LatticeSpec& spec) {
  require_oracle_size(spec);
  DoSHistogram dos(spec);
  const std::uint64_t total = spec.configurations();
  for (std::uint64_t index = 0; index < total; ++index) {
    const SpinArray spins = decode(index, spec);
    dos.add(magnetization(spins), energy(spins, spec));
  }
  return dos;
}

double log_partition(const LatticeSpec& spec, double field, double temperature) {
  require_oracle_size(spec);
  long double z = 0.0L;
  const std::uint64_t total = spec.configurations();
  for (std::uint64_t index = 0; index < total; ++index) {
    const SpinArray spins = decode(index, spec);
    const long double h = static_cast<long double>(spec.coupling()) * energy(spins, spec) -
                          static_cast<long double>(field) * magnetization(spins);
    z += std::exp(-h / static_cast<long double>(temperature));
  }
  return static_cast<double>(std::log(z));
}

}  // namespace isingdos::oracle
