#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bellpulse/pulse_dynamics.hpp"

namespace bellpulse {

enum class Metric { TimeAveragedC, MinC, CAtHorizon };

Metric metric_from_string(const std::string& s); // "time_averaged_c" | "min_c" | "c_at_horizon"
std::string to_string(Metric m);

// Sweep specification.  All times are scaled (t~ = omega_p t); omega_p
// converts back to absolute units for the dynamics.  TimeAveragedC and MinC
// are evaluated on a fixed internal grid of kMetricSamples uniform points
// over [0, horizon] so results are deterministic and comparable across taus.
struct ScanSpec {
    double tau_lo = 0.0;   // scaled, > 0
    double tau_hi = 0.0;   // scaled, > tau_lo
    int grid_points = 2;   // >= 2
    Metric metric = Metric::TimeAveragedC;
    double horizon = 30.0; // scaled, > 0
    int fixed_N = -1;      // >= 0: fixed pulse count; -1: fill-horizon N = floor(horizon/tau)
    double omega_p = 1.0;

    static constexpr int kMetricSamples = 601;

    void validate() const; // throws DomainError
};

struct ScanResult {
    std::vector<std::pair<double, double>> rows; // (tau_s scaled, metric value)
    double best_tau = 0.0;
    double best_value = 0.0;
};

// metric value for one pulse interval (Physical normalization throughout)
double evaluate_metric(const ModeSet& modes, const ScanSpec& spec, double tau_scaled);

// Uniform grid over [tau_lo, tau_hi]; ties broken toward the smallest tau.
// If the best grid row is a strict interior maximum, the peak is refined by
// golden section between its neighbours; best_value never drops below the
// grid maximum.
ScanResult scan_tau(const ModeSet& modes, const ScanSpec& spec);

// Golden-section maximization of the metric on [lo, hi] (scaled), after
// checking the bracket actually encloses a peak (midpoint above endpoints);
// stops when the bracket is narrower than 1e-4.  Returns (tau_star, value).
std::pair<double, double> refine_peak(const ModeSet& modes, const ScanSpec& spec,
                                      double lo, double hi);

// header: tau_s_scaled,metric_value  + trailing summary comment line
// "# best_tau_s = <v>, best_value = <v>"
void save_scan_csv(const ScanResult& res, const std::string& path);
ScanResult load_scan_csv(const std::string& path);

} // namespace bellpulse
