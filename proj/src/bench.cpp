#include "isingdos/bench.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>

#include "isingdos/dos_io.hpp"
#include "isingdos/enumerate.hpp"

namespace isingdos {

namespace {

struct Timing {
  double wall = 0.0;
  std::vector<double> per_worker;
};

// Without a reference, the first repeat becomes the reference for the rest.
Timing fastest_of(const LatticeSpec& spec, int workers, int repeats, const DoSHistogram* reference,
                  DoSHistogram* first_result) {
  Timing best;
  for (int r = 0; r < repeats; ++r) {
    EnumerationRun run = enumerate_parallel(spec, workers);
    if (reference != nullptr && !(run.dos == *reference)) {
      throw BenchError("histogram from " + std::to_string(workers) + " workers on " + spec.describe() +
                       " differs from the single-worker result");
    }
    if (r == 0 || run.wall_seconds < best.wall) {
      best.wall = run.wall_seconds;
      best.per_worker = run.worker_seconds;
    }
    if (reference == nullptr && first_result != nullptr) {
      *first_result = std::move(run.dos);
      reference = first_result;
    }
  }
  return best;
}

}  // namespace

std::vector<BenchRecord> run_bench(const LatticeSpec& spec, std::span<const int> worker_counts, int repeats) {
  if (worker_counts.empty()) throw std::invalid_argument("worker list is empty");
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  for (int w : worker_counts) {
    if (w < 1) throw std::invalid_argument("worker counts must be >= 1 (got " + std::to_string(w) + ")");
  }

  DoSHistogram reference(spec);
  const Timing baseline = fastest_of(spec, 1, repeats, nullptr, &reference);

  std::vector<BenchRecord> records;
  for (int workers : worker_counts) {
    const Timing t = workers == 1 ? baseline : fastest_of(spec, workers, repeats, &reference, nullptr);
    records.push_back({spec, workers, t.wall, t.per_worker, baseline.wall / t.wall});
  }
  return records;
}

std::string emit_scaling_report(std::span<const BenchRecord> records) {
  std::vector<const BenchRecord*> sorted;
  for (const auto& r : records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(), [](const BenchRecord* a, const BenchRecord* b) {
    if (a->spec.spins() != b->spec.spins()) return a->spec.spins() < b->spec.spins();
    return a->num_workers < b->num_workers;
  });
  std::ostringstream os;
  os << "rows,cols,depth,N,workers,wall_seconds,speedup\n";
  for (const BenchRecord* r : sorted) {
    os << r->spec.rows() << "," << r->spec.cols() << "," << r->spec.depth() << "," << r->spec.spins()
       << "," << r->num_workers << "," << format_double(r->wall_seconds) << ","
       << format_double(r->speedup_vs_one) << "\n";
  }
  return os.str();
}

std::vector<BenchRecord> parse_scaling_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "rows,cols,depth,N,workers,wall_seconds,speedup") {
    throw std::runtime_error("scaling report: missing or unexpected header");
  }
  std::vector<BenchRecord> records;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 7) {
      throw std::runtime_error("scaling report line " + std::to_string(line_no) + ": expected 7 fields");
    }
    auto number = [&](const std::string& s, auto& out) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw std::runtime_error("scaling report line " + std::to_string(line_no) + ": bad number '" + s + "'");
      }
    };
    int rows = 0, cols = 0, depth = 0, n = 0, workers = 0;
    double wall = 0.0, speedup = 0.0;
    number(fields[0], rows);
    number(fields[1], cols);
    number(fields[2], depth);
    number(fields[3], n);
    number(fields[4], workers);
    number(fields[5], wall);
    number(fields[6], speedup);
    LatticeSpec spec(rows, cols, depth);
    if (spec.spins() != n) {
      throw std::runtime_error("scaling report line " + std::to_string(line_no) + ": N does not match dimensions");
    }
    records.push_back({spec, workers, wall, {}, speedup});
  }
  return records;
}

}  // namespace isingdos
