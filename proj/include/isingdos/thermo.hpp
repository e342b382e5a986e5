#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "isingdos/histogram.hpp"

namespace isingdos {

/// Thrown for temperatures outside (0, inf) or a histogram that fails the total-count check.
class ThermoError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact observables at one (h, T). Energies include the field term H = J E - h M;
/// k_B = 1 and T is in units of |J|.
struct ThermoPoint {
  double field = 0.0;
  double temperature = 0.0;
  double log_z = 0.0;
  double free_energy = 0.0;         // -T log Z
  double internal_energy = 0.0;     // <H>
  double specific_heat = 0.0;       // (<H^2> - <H>^2) / T^2
  double mean_magnetization = 0.0;  // <M>
  double susceptibility = 0.0;      // (<M^2> - <M>^2) / T
};

/// Evaluates Z = sum g(M, E) exp(-(J E - h M) / T) in the log domain.
///
/// Weights are shifted by the largest exponent before exponentiation, so
/// log Z and the moments stay finite however low T is. Moments are central
/// (two-pass) to keep the variances non-negative.
ThermoPoint partition_point(const DoSHistogram& dos, double field, double temperature);

/// One point per temperature; temperatures must be positive and strictly increasing.
std::vector<ThermoPoint> thermo_sweep(const DoSHistogram& dos, double field,
                                      std::span<const double> temperatures);

/// tmin, tmin + tstep, ... up to tmax (inclusive within a small fraction of tstep).
std::vector<double> temperature_grid(double tmin, double tmax, double tstep);

}  // namespace isingdos
