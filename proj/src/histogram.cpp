#include "isingdos/histogram.hpp"

#include <sstream>
#include <stdexcept>

namespace isingdos {

DoSHistogram::DoSHistogram(LatticeSpec spec)
    : spec_(spec),
      energy_bins_(static_cast<std::size_t>(spec.bonds()) + 1),
      counts_(static_cast<std::size_t>(spec.spins() + 1) * energy_bins_, 0) {}

bool DoSHistogram::contains(int magnetization, int energy) const {
  const int n = spec_.spins();
  const int b = spec_.bonds();
  if (magnetization < -n || magnetization > n || energy < -b || energy > b) return false;
  return ((magnetization + n) % 2 == 0) && ((energy + b) % 2 == 0);
}

std::uint64_t DoSHistogram::count(int magnetization, int energy) const {
  if (!contains(magnetization, energy)) return 0;
  return at_index((magnetization + spec_.spins()) / 2, (energy + spec_.bonds()) / 2);
}

void DoSHistogram::add(int magnetization, int energy, std::uint64_t count) {
  if (!contains(magnetization, energy)) {
    throw std::out_of_range("cell (M=" + std::to_string(magnetization) + ", E=" +
                            std::to_string(energy) + ") is not on the " + spec_.describe() +
                            " grid");
  }
  at_index((magnetization + spec_.spins()) / 2, (energy + spec_.bonds()) / 2) += count;
}

std::uint64_t DoSHistogram::total() const {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts_) sum += c;
  return sum;
}

std::vector<DoSCell> DoSHistogram::cells() const {
  std::vector<DoSCell> out;
  for (int m = magnetization_bins() - 1; m >= 0; --m) {
    for (int e = 0; e < energy_bins(); ++e) {
      const std::uint64_t c = at_index(m, e);
      if (c != 0) out.push_back({c, 2 * m - spec_.spins(), 2 * e - spec_.bonds()});
    }
  }
  return out;
}

DoSHistogram& DoSHistogram::operator+=(const DoSHistogram& other) {
  if (!(spec_ == other.spec_)) {
    throw std::invalid_argument("cannot merge histograms of different lattices (" +
                                spec_.describe() + " vs " + other.spec_.describe() + ")");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  return *this;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  // result * (n - k + i) / i stays exact since each prefix is C(n - k + i, i).
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return result;
}

bool VerificationReport::passed() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& check : checks) {
    os << (check.passed ? "PASS " : "FAIL ") << check.name << "\n";
    for (const auto& failure : check.failures) os << "  " << failure << "\n";
  }
  return os.str();
}

VerificationReport verify_dos(const DoSHistogram& dos) {
  const LatticeSpec& spec = dos.spec();
  const int n = spec.spins();
  VerificationReport report;

  CheckResult total{kCheckTotal, true, {}};
  const std::uint64_t expected_total = spec.configurations();
  const std::uint64_t actual_total = dos.total();
  if (actual_total != expected_total) {
    total.passed = false;
    std::ostringstream os;
    os << "total " << actual_total << " != 2^" << n << " = " << expected_total;
    if (actual_total > expected_total) {
      os << " (excess " << actual_total - expected_total << ")";
    } else {
      os << " (missing " << expected_total - actual_total << ")";
    }
    total.failures.push_back(os.str());
  }
  report.checks.push_back(std::move(total));

  CheckResult marginals{kCheckBinomial, true, {}};
  for (int m = 0; m < dos.magnetization_bins(); ++m) {
    std::uint64_t row = 0;
    for (int e = 0; e < dos.energy_bins(); ++e) row += dos.at_index(m, e);
    const std::uint64_t expected = binomial(n, m);
    if (row != expected) {
      marginals.passed = false;
      marginals.failures.push_back("M=" + std::to_string(2 * m - n) + ": sum " + std::to_string(row) +
                                   " != C(" + std::to_string(n) + "," + std::to_string(m) +
                                   ") = " + std::to_string(expected));
    }
  }
  report.checks.push_back(std::move(marginals));

  CheckResult symmetry{kCheckSymmetry, true, {}};
  for (int m = 0; m < dos.magnetization_bins() / 2; ++m) {
    const int mirror = n - m;
    for (int e = 0; e < dos.energy_bins(); ++e) {
      if (dos.at_index(m, e) != dos.at_index(mirror, e)) {
        symmetry.passed = false;
        const int energy = 2 * e - spec.bonds();
        symmetry.failures.push_back("g(" + std::to_string(2 * m - n) + "," + std::to_string(energy) +
                                    ")=" + std::to_string(dos.at_index(m, e)) + " != g(" +
                                    std::to_string(n - 2 * m) + "," + std::to_string(energy) +
                                    ")=" + std::to_string(dos.at_index(mirror, e)));
      }
    }
  }
  report.checks.push_back(std::move(symmetry));

  // Dense storage only holds grid points, so this can fail only through a
  // histogram whose magnetization/energy parities disagree with the lattice.
  CheckResult grid{kCheckGrid, true, {}};
  for (const DoSCell& cell : dos.cells()) {
    if (!dos.contains(cell.magnetization, cell.energy)) {
      grid.passed = false;
      grid.failures.push_back("cell (M=" + std::to_string(cell.magnetization) +
                              ", E=" + std::to_string(cell.energy) + ") off grid");
    }
  }
  report.checks.push_back(std::move(grid));

  return report;
}

}  // namespace isingdos
