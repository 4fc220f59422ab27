#pragma once

#include <complex>
#include <string>
#include <vector>

#include "bellpulse/pulse_schedule.hpp"
#include "bellpulse/reservoir.hpp"

namespace bellpulse {

// C(0) = 1 for the physical Wootters concurrence of the Bell initial state;
// PaperLiteral keeps the 1/2 prefactor of the printed closed form (C(0) = 1/2).
enum class Normalization { Physical, PaperLiteral };

Normalization normalization_from_string(const std::string& s); // "physical" | "paper_literal"
std::string to_string(Normalization n);

// Displacement amplitude of one mode at time t under the pulse train.
// Uniform schedules use the closed form
//   h e^{-iw(t - N tau)} { (1 - e^{iw(t - N tau)})
//                          + sum_{m=1}^{N} (-1)^m e^{-i m w tau} (1 - e^{iw tau}) }
// with N truncated to the pulses already applied (N_eff = min(N, floor(t/tau))).
// Explicit schedules evaluate the equivalent sign-toggled segment integral in
// the same phase frame, so the two representations agree as complex numbers
// whenever the explicit times form a uniform train.  |alpha| is continuous in
// t; the phase convention jumps at pulse instants (only |alpha|^2 is physical).
std::complex<double> alpha_k(double h_k_sq, double omega_k, double t,
                             const PulseSchedule& sched);

// Gamma(t) = 2 sum_k |alpha_k(t)|^2  (common reservoir decoherence exponent)
double decoherence_exponent(const ModeSet& modes, double t, const PulseSchedule& sched);

// exp(-Gamma) (Physical) or exp(-Gamma)/2 (PaperLiteral)
double concurrence_common(const ModeSet& modes, double t, const PulseSchedule& sched,
                          Normalization norm = Normalization::Physical);

// independent reservoirs, one per qubit: prod_n exp(-1/2 sum_k |alpha_k|^2);
// with identical mode sets the exponent is half the common-reservoir one
double concurrence_noncommon(const ModeSet& modes1, const ModeSet& modes2, double t,
                             const PulseSchedule& sched,
                             Normalization norm = Normalization::Physical);

// continuum free-decay reference, Gaussian coupling only:
// Gamma_cont(t) = 4 s (1 - cos(omega_p t) e^{-gamma_p^2 t^2 / 4})
double free_decay_closed_form(const CouplingFunction& cf, double t);

struct TraceSample {
    double t = 0.0;           // scaled time  t~ = omega_p * t
    double gamma = 0.0;       // decoherence exponent, = -ln c_physical
    double c_physical = 1.0;  // in [0,1]
    double c_literal = 0.5;   // = c_physical / 2 identically
    double entropy = 0.0;     // entropy_from_concurrence(c_physical)
    double purity = 1.0;      // (1 + c_physical^2) / 2
};

struct Trace {
    std::vector<TraceSample> samples;
    // which concurrence column summaries and comparisons should read; the
    // sample columns themselves always carry both normalizations
    Normalization norm = Normalization::Physical;

    double selected_c(std::size_t i) const;
};

// t_grid is ascending absolute time; omega_p only rescales the exported axis
Trace trace_common(const ModeSet& modes, const std::vector<double>& t_grid,
                   const PulseSchedule& sched,
                   Normalization norm = Normalization::Physical, double omega_p = 1.0);
Trace trace_noncommon(const ModeSet& modes1, const ModeSet& modes2,
                      const std::vector<double>& t_grid, const PulseSchedule& sched,
                      Normalization norm = Normalization::Physical, double omega_p = 1.0);

// header: t_scaled,gamma,c_physical,c_literal,entropy_log4,purity
void save_trace_csv(const Trace& tr, const std::string& path);
Trace load_trace_csv(const std::string& path);

} // namespace bellpulse
