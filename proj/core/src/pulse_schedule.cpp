#include "bellpulse/pulse_schedule.hpp"

#include <algorithm>
#include <cmath>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

PulseSchedule PulseSchedule::none() {
    return uniform(0, 1.0);
}

PulseSchedule PulseSchedule::uniform(int n, double tau) {
    PulseSchedule s;
    s.kind = Kind::Uniform;
    s.n_pulses = n;
    s.tau_s = tau;
    s.validate();
    return s;
}

PulseSchedule PulseSchedule::at_times(std::vector<double> t) {
    PulseSchedule s;
    s.kind = Kind::Explicit;
    s.times = std::move(t);
    s.validate();
    return s;
}

void PulseSchedule::validate() const {
    if (kind == Kind::Uniform) {
        if (n_pulses < 0)
            throw DomainError("pulse schedule: N must be >= 0, got " + std::to_string(n_pulses));
        if (!(tau_s > 0.0))
            throw DomainError("pulse schedule: tau_s must be > 0, got " + fmt_g12(tau_s));
    } else {
        for (std::size_t j = 0; j < times.size(); ++j) {
            if (!(times[j] > 0.0))
                throw DomainError("pulse schedule: explicit times must be > 0");
            if (j > 0 && !(times[j] > times[j - 1]))
                throw DomainError("pulse schedule: explicit times must be strictly ascending");
        }
    }
}

int PulseSchedule::count_up_to(double t) const {
    if (t < 0.0)
        return 0;
    if (kind == Kind::Uniform) {
        if (n_pulses == 0)
            return 0;
        return std::min(n_pulses, static_cast<int>(std::floor(t / tau_s)));
    }
    const auto it = std::upper_bound(times.begin(), times.end(), t);
    return static_cast<int>(it - times.begin());
}

std::vector<double> PulseSchedule::times_up_to(double t) const {
    const int n = count_up_to(t);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (kind == Kind::Uniform) {
        for (int j = 1; j <= n; ++j)
            out.push_back(j * tau_s);
    } else {
        out.assign(times.begin(), times.begin() + n);
    }
    return out;
}

} // namespace bellpulse
