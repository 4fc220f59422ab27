#pragma once

#include <string>
#include <vector>

#include "bellpulse/fock_oracle.hpp"
#include "bellpulse/pulse_dynamics.hpp"
#include "bellpulse/reservoir.hpp"
#include "bellpulse/scan.hpp"

namespace bellpulse {

// Flat key = value run description shared by all subcommands.  All times and
// frequencies are scaled: times in units of 1/omega_p, frequencies in units
// of omega_p (omega_p itself defaults to 1).  Unknown keys are rejected.
//
//   coupling.shape / coupling.s / coupling.omega_p / coupling.gamma_p
//   discretization.K / discretization.support_halfwidth
//   schedule.kind (uniform|explicit) / schedule.N / schedule.tau_s_scaled /
//     schedule.times_scaled (comma separated)
//   topology (common|noncommon)
//   normalization (physical|paper_literal)
//   grid.t_max_scaled / grid.samples
//   oracle.enabled / oracle.fock_dim / oracle.heisenberg_J / oracle.omega0
//   output.path / output.format (csv)
//   scan.tau_lo / scan.tau_hi / scan.grid_points / scan.metric
//     (time_averaged_c|min_c|c_at_horizon) / scan.horizon /
//     scan.n_rule (fill_horizon|fixed) / scan.fixed_N
struct RunConfig {
    CouplingFunction coupling;

    int K = 1000;
    double support_halfwidth = 6.0;

    PulseSchedule::Kind sched_kind = PulseSchedule::Kind::Uniform;
    int N = 0;
    double tau_s_scaled = 1.0;
    std::vector<double> times_scaled;

    Topology topology = Topology::Common;
    Normalization normalization = Normalization::Physical;

    double t_max_scaled = 30.0;
    int samples = 3001;

    bool oracle_enabled = false;
    int fock_dim = 40;
    double heisenberg_J_scaled = 0.0;
    double omega0_scaled = 10.0;

    std::string out_path;
    std::string out_format = "csv";

    double scan_tau_lo = 0.0;
    double scan_tau_hi = 0.0;
    int scan_grid_points = 2;
    Metric scan_metric = Metric::TimeAveragedC;
    double scan_horizon = 30.0;
    std::string scan_n_rule = "fill_horizon"; // or "fixed"
    int scan_fixed_N = 0;

    void validate() const; // throws ConfigError
};

// Parse a config file ('#' comments, blank lines ignored).  Errors carry the
// offending line number and key.
RunConfig parse_config_file(const std::string& path);

// Apply one "key=value" override on top of a parsed config.
void apply_override(RunConfig& cfg, const std::string& assignment);

// Builders: convert the scaled config into absolute-unit module inputs.
// Validation failures are rethrown as ConfigError naming the key group.
ModeSet make_modes(const RunConfig& cfg);
PulseSchedule make_schedule(const RunConfig& cfg);
std::vector<double> make_grid(const RunConfig& cfg);  // absolute times
OracleConfig make_oracle_config(const RunConfig& cfg, const ModeSet& modes);
ScanSpec make_scan_spec(const RunConfig& cfg);

} // namespace bellpulse
