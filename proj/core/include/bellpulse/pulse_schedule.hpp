#pragma once

#include <vector>

#include "bellpulse/errors.hpp"

namespace bellpulse {

// Train of ideal, instantaneous pi pulses applied simultaneously to both
// qubits (X (x) X on the qubit pair).
struct PulseSchedule {
    enum class Kind { Uniform, Explicit };

    Kind kind = Kind::Uniform;
    int n_pulses = 0;            // Uniform: N >= 0 pulses at tau_s, 2 tau_s, ...
    double tau_s = 1.0;          // Uniform: interval, > 0
    std::vector<double> times;   // Explicit: strictly ascending, all > 0

    static PulseSchedule none();
    static PulseSchedule uniform(int n, double tau);
    static PulseSchedule at_times(std::vector<double> t);

    void validate() const;       // throws DomainError

    // number of pulses with pulse time <= t (a pulse coincident with t counts)
    int count_up_to(double t) const;
    // the corresponding pulse times, ascending
    std::vector<double> times_up_to(double t) const;
};

} // namespace bellpulse
