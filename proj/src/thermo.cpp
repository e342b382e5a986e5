#include "isingdos/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace isingdos {

namespace {

void require_temperature(double temperature) {
  if (!(temperature > 0.0) || !std::isfinite(temperature)) {
    throw ThermoError("temperature must be positive and finite (got " + std::to_string(temperature) + ")");
  }
}

}  // namespace

ThermoPoint partition_point(const DoSHistogram& dos, double field, double temperature) {
  require_temperature(temperature);
  if (!std::isfinite(field)) throw ThermoError("field must be finite");
  if (dos.total() != dos.spec().configurations()) {
    throw ThermoError("density of states fails the total-count check (total " +
                      std::to_string(dos.total()) + ", expected 2^" +
                      std::to_string(dos.spec().spins()) + ")");
  }

  const double coupling = dos.spec().coupling();
  const auto cells = dos.cells();

  struct Term {
    double weight;
    double energy;
    double magnetization;
  };
  std::vector<Term> terms;
  terms.reserve(cells.size());
  double max_exponent = -std::numeric_limits<double>::infinity();
  for (const DoSCell& cell : cells) {
    const double energy = coupling * cell.energy - field * cell.magnetization;
    const double exponent = std::log(static_cast<double>(cell.count)) - energy / temperature;
    max_exponent = std::max(max_exponent, exponent);
    terms.push_back({exponent, energy, static_cast<double>(cell.magnetization)});
  }

  double z = 0.0;
  for (Term& term : terms) {
    term.weight = std::exp(term.weight - max_exponent);
    z += term.weight;
  }

  double mean_h = 0.0;
  double mean_m = 0.0;
  for (const Term& term : terms) {
    mean_h += term.weight * term.energy;
    mean_m += term.weight * term.magnetization;
  }
  mean_h /= z;
  mean_m /= z;

  double var_h = 0.0;
  double var_m = 0.0;
  for (const Term& term : terms) {
    const double dh = term.energy - mean_h;
    const double dm = term.magnetization - mean_m;
    var_h += term.weight * dh * dh;
    var_m += term.weight * dm * dm;
  }
  var_h /= z;
  var_m /= z;

  ThermoPoint point;
  point.field = field;
  point.temperature = temperature;
  point.log_z = max_exponent + std::log(z);
  point.free_energy = -temperature * point.log_z;
  point.internal_energy = mean_h;
  point.specific_heat = var_h / (temperature * temperature);
  point.mean_magnetization = mean_m;
  point.susceptibility = var_m / temperature;
  return point;
}

std::vector<ThermoPoint> thermo_sweep(const DoSHistogram& dos, double field,
                                      std::span<const double> temperatures) {
  if (temperatures.empty()) throw ThermoError("temperature list is empty");
  for (std::size_t i = 0; i < temperatures.size(); ++i) {
    require_temperature(temperatures[i]);
    if (i > 0 && !(temperatures[i] > temperatures[i - 1])) {
      throw ThermoError("temperatures must be strictly increasing");
    }
  }
  std::vector<ThermoPoint> points;
  points.reserve(temperatures.size());
  for (double t : temperatures) points.push_back(partition_point(dos, field, t));
  return points;
}

std::vector<double> temperature_grid(double tmin, double tmax, double tstep) {
  require_temperature(tmin);
  if (!(tstep > 0.0) || !std::isfinite(tstep)) throw ThermoError("temperature step must be positive");
  if (!(tmax >= tmin) || !std::isfinite(tmax)) throw ThermoError("tmax must be >= tmin");
  std::vector<double> grid;
  const double slack = 1e-9 * tstep;
  for (long k = 0;; ++k) {
    const double t = tmin + static_cast<double>(k) * tstep;
    if (t > tmax + slack) break;
    grid.push_back(t);
  }
  return grid;
}

}  // namespace isingdos
