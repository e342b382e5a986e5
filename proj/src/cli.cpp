#include "isingdos/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <thread>
#include <variant>

#include <CLI11.hpp>

#include "isingdos/bench.hpp"
#include "isingdos/dos_io.hpp"
#include "isingdos/enumerate.hpp"
#include "isingdos/oracle.hpp"
#include "isingdos/thermo.hpp"

namespace isingdos::cli {

namespace {

struct LatticeArgs {
  int rows = 0;
  int cols = 0;
  int depth = 1;
  double coupling = 1.0;
};

void add_lattice_options(CLI::App* cmd, LatticeArgs& args, bool with_coupling) {
  cmd->add_option("--rows", args.rows, "Column height (spins per bit-word)")->required();
  cmd->add_option("--cols", args.cols, "Number of columns")->required();
  cmd->add_option("--depth", args.depth, "Number of layers; 1 for a square lattice")->capture_default_str();
  if (with_coupling) cmd->add_option("--J", args.coupling, "Uniform exchange coupling")->capture_default_str();
}

int fail(std::ostream& err, int code, const std::string& check, const std::string& message) {
  err << "error: " << check << ": " << message << "\n";
  return code;
}

/// Output sink that is either the caller's stream ("-") or a file.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (*file_) stream_ = file_.get();
    }
  }
  bool ok() const { return stream_ != nullptr; }
  std::ostream& stream() { return *stream_; }
  bool flush() {
    stream_->flush();
    return static_cast<bool>(*stream_);
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

int default_workers() {
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

int cmd_dos(const LatticeArgs& lattice, int workers, const std::string& out_path, bool json,
            std::ostream& out, std::ostream& err) {
  std::optional<LatticeSpec> spec;
  try {
    spec.emplace(lattice.rows, lattice.cols, lattice.depth, lattice.coupling);
  } catch (const LatticeError& e) {
    return fail(err, kCheckFailed, "lattice", e.what());
  }
  if (static_cast<ConfigIndex>(workers) > spec->configurations()) {
    return fail(err, kCheckFailed, "workers",
                "more workers than configurations (2^" + std::to_string(spec->spins()) + ")");
  }
  Sink sink(out_path, out);
  if (!sink.ok()) return fail(err, kIo, "io", "cannot open '" + out_path + "' for writing");

  const EnumerationRun run = enumerate_parallel(*spec, workers);
  if (json) {
    write_dos_json(sink.stream(), run.dos);
  } else {
    write_dos_csv(sink.stream(), run.dos);
  }
  if (!sink.flush()) return fail(err, kIo, "io", "failed writing '" + out_path + "'");

  // Keep stdout clean for the data when it is the destination.
  std::ostream& summary = out_path == "-" ? err : out;
  summary << "lattice " << spec->describe() << " N=" << spec->spins() << " B=" << spec->bonds()
          << " configurations=" << run.dos.total() << " cells=" << run.dos.cells().size()
          << " workers=" << workers << " elapsed_seconds=" << run.wall_seconds << "\n";
  return kOk;
}

/// Loads a DoS file, reporting failures on `err`. Returns the exit code on failure.
std::variant<DoSHistogram, int> load_dos(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) return fail(err, kIo, "io", "cannot open '" + path + "'");
  try {
    return read_dos(in);
  } catch (const FormatError& e) {
    return fail(err, kCheckFailed, "parse", e.what());
  }
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  auto loaded = load_dos(path, err);
  if (std::holds_alternative<int>(loaded)) return std::get<int>(loaded);
  const DoSHistogram& dos = std::get<DoSHistogram>(loaded);
  const VerificationReport report = verify_dos(dos);
  if (!report.passed()) {
    std::string failed;
    for (const auto& check : report.checks) {
      if (!check.passed) failed += (failed.empty() ? "" : ",") + check.name;
    }
    err << "error: verify: failed checks: " << failed << "\n";
  }
  out << "lattice " << dos.spec().describe() << " N=" << dos.spec().spins() << " total=" << dos.total()
      << "\n"
      << report.to_string();
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_thermo(const std::string& path, double field, double tmin, std::optional<double> tmax, double tstep,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::vector<double> temps;
  try {
    temps = temperature_grid(tmin, tmax.value_or(tmin), tstep);
  } catch (const ThermoError& e) {
    return fail(err, kCheckFailed, "temperature", e.what());
  }
  auto loaded = load_dos(path, err);
  if (std::holds_alternative<int>(loaded)) return std::get<int>(loaded);
  const DoSHistogram& dos = std::get<DoSHistogram>(loaded);

  std::vector<ThermoPoint> points;
  try {
    points = thermo_sweep(dos, field, temps);
  } catch (const ThermoError& e) {
    return fail(err, kCheckFailed, "thermo", e.what());
  }
  Sink sink(out_path, out);
  if (!sink.ok()) return fail(err, kIo, "io", "cannot open '" + out_path + "' for writing");
  std::ostream& os = sink.stream();
  os << "T,h,log_Z,F,U,C,M_mean,chi\n";
  for (const ThermoPoint& p : points) {
    os << format_double(p.temperature) << "," << format_double(p.field) << "," << format_double(p.log_z) << ","
       << format_double(p.free_energy) << "," << format_double(p.internal_energy) << ","
       << format_double(p.specific_heat) << "," << format_double(p.mean_magnetization) << ","
       << format_double(p.susceptibility) << "\n";
  }
  if (!sink.flush()) return fail(err, kIo, "io", "failed writing '" + out_path + "'");
  return kOk;
}

int cmd_oracle_check(const LatticeArgs& lattice, std::ostream& out, std::ostream& err) {
  std::optional<LatticeSpec> spec;
  try {
    spec.emplace(lattice.rows, lattice.cols, lattice.depth, lattice.coupling);
  } catch (const LatticeError& e) {
    return fail(err, kCheckFailed, "lattice", e.what());
  }
  if (spec->spins() > oracle::kOracleMaxSpins) {
    return fail(err, kCheckFailed, "oracle_cap",
                "N=" + std::to_string(spec->spins()) + " exceeds the oracle cap of " +
                    std::to_string(oracle::kOracleMaxSpins));
  }
  const DoSHistogram fast = enumerate_dos(*spec, 1);
  const DoSHistogram slow = oracle::full_dos(*spec);

  std::vector<std::string> mismatches;
  for (int m = 0; m < fast.magnetization_bins(); ++m) {
    for (int e = 0; e < fast.energy_bins(); ++e) {
      if (fast.at_index(m, e) != slow.at_index(m, e)) {
        mismatches.push_back("M=" + std::to_string(2 * m - spec->spins()) + " E=" +
                             std::to_string(2 * e - spec->bonds()) + " kernel=" +
                             std::to_string(fast.at_index(m, e)) + " oracle=" + std::to_string(slow.at_index(m, e)));
      }
    }
  }
  if (!mismatches.empty()) {
    err << "error: oracle_equivalence: " << mismatches.size() << " mismatching cells\n";
    for (const auto& line : mismatches) err << "  " << line << "\n";
    return kCheckFailed;
  }
  out << "lattice " << spec->describe() << " N=" << spec->spins() << ": kernel and oracle agree on "
      << fast.cells().size() << " cells\n";
  return kOk;
}

int cmd_bench(const LatticeArgs& lattice, const std::vector<int>& workers, int repeats,
              const std::string& out_path, std::ostream& out, std::ostream& err) {
  std::optional<LatticeSpec> spec;
  try {
    spec.emplace(lattice.rows, lattice.cols, lattice.depth, lattice.coupling);
  } catch (const LatticeError& e) {
    return fail(err, kCheckFailed, "lattice", e.what());
  }
  for (int w : workers) {
    if (static_cast<ConfigIndex>(w) > spec->configurations()) {
      return fail(err, kCheckFailed, "workers", "more workers than configurations");
    }
  }
  Sink sink(out_path, out);
  if (!sink.ok()) return fail(err, kIo, "io", "cannot open '" + out_path + "' for writing");
  std::vector<BenchRecord> records;
  try {
    records = run_bench(*spec, workers, repeats);
  } catch (const BenchError& e) {
    return fail(err, kCheckFailed, "bench_consistency", e.what());
  }
  sink.stream() << emit_scaling_report(records);
  if (!sink.flush()) return fail(err, kIo, "io", "failed writing '" + out_path + "'");
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact density of states and thermodynamics of periodic Ising lattices", "isingdos"};
  app.require_subcommand(1);

  LatticeArgs lattice;
  int workers = default_workers();
  std::string out_path = "-";
  bool json = false;
  auto* dos = app.add_subcommand("dos", "Enumerate all configurations and write g(M, E)");
  add_lattice_options(dos, lattice, true);
  dos->add_option("--workers", workers, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  dos->add_option("--out", out_path, "Output path, '-' for stdout")->capture_default_str();
  dos->add_flag("--json", json, "Write JSON instead of CSV");

  std::string dos_path;
  auto* verify = app.add_subcommand("verify", "Check a DoS file (total, binomial marginals, symmetry)");
  verify->add_option("dos", dos_path, "DoS file")->required();

  double field = 0.0;
  double tmin = 1.0;
  std::optional<double> tmax;
  double tstep = 1.0;
  auto* thermo = app.add_subcommand("thermo", "Evaluate Z and observables over a temperature grid");
  thermo->add_option("--dos", dos_path, "DoS file")->required();
  thermo->add_option("--field", field, "External field h")->capture_default_str();
  thermo->add_option("--tmin", tmin, "First temperature")->required();
  thermo->add_option("--tmax", tmax, "Last temperature (default: tmin)");
  thermo->add_option("--tstep", tstep, "Temperature step")->capture_default_str();
  thermo->add_option("--out", out_path, "Output path, '-' for stdout")->capture_default_str();

  auto* oracle_check = app.add_subcommand("oracle-check", "Compare the bit-kernel DoS with the naive oracle");
  add_lattice_options(oracle_check, lattice, false);

  std::vector<int> worker_list{1};
  int repeats = 3;
  auto* bench = app.add_subcommand("bench", "Time the enumeration across worker counts");
  add_lattice_options(bench, lattice, false);
  bench->add_option("--workers", worker_list, "Comma-separated worker counts")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  bench->add_option("--repeats", repeats, "Repeats per worker count; the minimum is kept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", out_path, "Output path, '-' for stdout")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  if (dos->parsed()) return cmd_dos(lattice, workers, out_path, json, out, err);
  if (verify->parsed()) return cmd_verify(dos_path, out, err);
  if (thermo->parsed()) return cmd_thermo(dos_path, field, tmin, tmax, tstep, out_path, out, err);
  if (oracle_check->parsed()) return cmd_oracle_check(lattice, out, err);
  if (bench->parsed()) return cmd_bench(lattice, worker_list, repeats, out_path, out, err);
  return fail(err, kUsage, "usage", "no subcommand");
}

}  // namespace isingdos::cli
