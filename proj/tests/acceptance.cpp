// Acceptance gate: eight end-to-end checks of the dephasing model, each
// printed as a single PASS/FAIL line.  Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bellpulse/density_matrix.hpp"
#include "bellpulse/fock_oracle.hpp"
#include "bellpulse/measures.hpp"
#include "bellpulse/pulse_dynamics.hpp"
#include "bellpulse/reservoir.hpp"
#include "bellpulse/scan.hpp"
#include "helpers.hpp"

using namespace bellpulse;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g;
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) { // keep the first failure's description
            ok = false;
            detail = msg;
        }
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// indices of strict interior local maxima of the sampled curve
std::vector<std::size_t> local_maxima(const std::vector<double>& y) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] > y[i - 1] && y[i] > y[i + 1])
            idx.push_back(i);
    return idx;
}

// ---- 1: truncated-Fock oracle vs the analytic concurrence --------------

void criterion_oracle_adjudication(Check& c) {
    const CouplingFunction cf{};
    const auto grid = linspace(0.0, 2.0 * kTwoPi, 200);
    const std::vector<PulseSchedule> schedules = {
        PulseSchedule::none(), PulseSchedule::uniform(1, kTwoPi),
        PulseSchedule::uniform(2, kPi)};

    const auto modes = discretize(cf, 1, 6.0 / 1000);
    for (const auto& sched : schedules) {
        OracleConfig oc;
        oc.modes = modes;
        oc.fock_dim = 40;
        oc.schedule = sched;
        oc.t_grid = grid;
        const auto rep = compare(trace_common(modes, grid, sched), evolve(oc), 1e-6);
        c.require(rep.pass && rep.max_rel_err < 1e-6,
                  "relative error " + fmt(rep.max_rel_err) + " at N = " +
                      std::to_string(sched.n_pulses));
    }

    // the literal normalization must be exactly half, not approximately
    const auto sched = PulseSchedule::uniform(1, kTwoPi);
    for (const double t : grid) {
        const double phys = concurrence_common(modes, t, sched, Normalization::Physical);
        const double lit = concurrence_common(modes, t, sched, Normalization::PaperLiteral);
        c.require(lit == 0.5 * phys, "literal normalization is not exactly half at t = " +
                                         fmt(t));
    }
}

// ---- 2: dense discretization vs the continuum free decay ---------------

void criterion_continuum(Check& c) {
    const CouplingFunction cf{};
    const auto modes = discretize(cf, 2000, 6.0);
    const auto none = PulseSchedule::none();
    double worst = 0.0, worst_t = 0.0;
    for (const double t : linspace(0.0, 20.0, 401)) {
        const double cont = free_decay_closed_form(cf, t);
        const double disc = decoherence_exponent(modes, t, none);
        const double rel = std::abs(disc - cont) / std::max(cont, 0.01);
        if (rel > worst) {
            worst = rel;
            worst_t = t;
        }
    }
    c.require(worst <= 1e-3,
              "relative exponent error " + fmt(worst) + " at t = " + fmt(worst_t));
}

// ---- 3: the four pulse regimes ------------------------------------------

void criterion_regimes(Check& c) {
    const CouplingFunction cf{};
    const auto modes = discretize(cf, 1000, 6.0);
    const auto grid = linspace(0.0, 30.0, 3001);

    const auto curve = [&](const PulseSchedule& sched) {
        std::vector<double> y;
        y.reserve(grid.size());
        for (const double t : grid)
            y.push_back(concurrence_common(modes, t, sched));
        return y;
    };
    const auto free_c = curve(PulseSchedule::none());

    // (a) free decay oscillates with the reservoir period and damps
    {
        const auto peaks = local_maxima(free_c);
        c.require(peaks.size() >= 3, "free decay shows fewer than 3 revival peaks");
        if (peaks.size() >= 3) {
            for (std::size_t n = 1; n <= 3; ++n) {
                const double expected = kTwoPi * static_cast<double>(n);
                const double got = grid[peaks[n - 1]];
                c.require(std::abs(got - expected) <= 0.02 * expected,
                          "free peak " + std::to_string(n) + " at t~ = " + fmt(got));
                if (n > 1)
                    c.require(free_c[peaks[n - 1]] < free_c[peaks[n - 2]],
                              "free revival peaks do not damp");
            }
        }
    }

    // (b) rapid pulsing dominates the free curve pointwise on [2, 30]
    {
        const double tau = kPi / 5.0;
        const auto y = curve(PulseSchedule::uniform(
            static_cast<int>(std::floor(30.0 / tau)), tau));
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (grid[i] >= 2.0)
                c.require(y[i] > free_c[i], "tau = pi/5 does not beat free decay at t~ = " +
                                                fmt(grid[i]));
    }

    // (c) the anti-resonant interval is worse on time average
    {
        const auto y = curve(PulseSchedule::uniform(9, kPi));
        double avg_pulsed = 0.0, avg_free = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            avg_pulsed += y[i];
            avg_free += free_c[i];
        }
        c.require(avg_pulsed < avg_free, "tau = pi average " + fmt(avg_pulsed / 3001) +
                                             " is not below the free average " +
                                             fmt(avg_free / 3001));
    }

    // (d) the synchronized interval recovers concurrence each reservoir period
    {
        const auto y = curve(PulseSchedule::uniform(4, kTwoPi));
        const auto peaks = local_maxima(y);
        for (std::size_t n = 1; n <= 3; ++n) {
            const double expected = kTwoPi * static_cast<double>(n);
            bool found = false;
            for (const auto i : peaks)
                found = found || std::abs(grid[i] - expected) <= 0.02 * expected;
            c.require(found, "no synchronized revival near t~ = " + fmt(expected));
        }
    }
}

// ---- 4: single-pulse refocusing at the mode period ----------------------

void criterion_echo(Check& c) {
    const auto modes = single_mode(1.0, 0.5);
    const auto sched = PulseSchedule::uniform(1, kTwoPi);
    const double analytic = concurrence_common(modes, 2.0 * kTwoPi, sched);
    c.require(std::abs(analytic - 1.0) <= 1e-12,
              "analytic refocusing misses 1 by " + fmt(std::abs(analytic - 1.0)));

    OracleConfig oc;
    oc.modes = modes;
    oc.fock_dim = 40;
    oc.schedule = sched;
    oc.t_grid = linspace(0.0, 2.0 * kTwoPi, 5);
    const auto rt = evolve(oc);
    const double numeric = rt.samples.back().concurrence;
    c.require(std::abs(numeric - 1.0) <= 1e-6,
              "oracle refocusing misses 1 by " + fmt(std::abs(numeric - 1.0)));
}

// ---- 5: independent identical reservoirs halve the exponent -------------

void criterion_halving(Check& c) {
    const auto modes = discretize(CouplingFunction{}, 1000, 6.0);
    const auto sched = PulseSchedule::uniform(5, 2.0);
    for (const double t : linspace(0.0, 30.0, 100)) {
        const double gc = decoherence_exponent(modes, t, sched);
        const double gnc = -std::log(concurrence_noncommon(modes, modes, t, sched));
        c.require(std::abs(gnc - 0.5 * gc) <= 1e-12,
                  "halving violated by " + fmt(std::abs(gnc - 0.5 * gc)) + " at t = " +
                      fmt(t));
    }
}

// ---- 6: an isotropic exchange term does not change the dephasing --------

void criterion_heisenberg(Check& c) {
    const auto run = [](double j) {
        OracleConfig oc;
        oc.modes = discretize(CouplingFunction{}, 1, 6.0 / 1000);
        oc.fock_dim = 40;
        oc.schedule = PulseSchedule::uniform(2, kPi);
        oc.t_grid = linspace(0.0, 2.0 * kTwoPi, 50);
        oc.heisenberg_J = j;
        return evolve(oc);
    };
    const auto a = run(0.0);
    const auto b = run(0.3);
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double dev = std::abs(a.samples[i].concurrence - b.samples[i].concurrence);
        c.require(dev <= 1e-8, "exchange shifted concurrence by " + fmt(dev) + " at t~ = " +
                                   fmt(a.samples[i].t));
    }
}

// ---- 7: entanglement measures --------------------------------------------

void criterion_measures(Check& c) {
    std::mt19937_64 rng(424242);

    for (int i = 0; i < 100; ++i) {
        const auto rho = bptest::random_density(rng);
        const double dev = (spin_flip(spin_flip(rho)).mat() - rho.mat()).cwiseAbs().maxCoeff();
        c.require(dev <= 1e-12, "spin-flip involution residual " + fmt(dev));
    }

    for (int i = 0; i < 1000; ++i) {
        const auto rho = bptest::random_density(rng);
        const double dev = std::abs(concurrence(rho) - concurrence_via_R(rho));
        c.require(dev <= 1e-9, "concurrence routes disagree by " + fmt(dev));
    }

    for (int i = 0; i < 200; ++i) {
        const auto rho = bptest::random_density(rng);
        const Mat4 u = bptest::kron2(bptest::random_su2(rng), bptest::random_su2(rng));
        const double dev =
            std::abs(concurrence(DensityMatrix(u * rho.mat() * u.adjoint())) -
                     concurrence(rho));
        c.require(dev <= 1e-9, "local-unitary invariance violated by " + fmt(dev));
    }

    for (const double p : {0.2, 1.0 / 3.0, 0.5, 1.0}) {
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        const double dev = std::abs(concurrence(DensityMatrix::werner(p)) - expected);
        c.require(dev <= 1e-10, "werner concurrence off by " + fmt(dev) + " at p = " + fmt(p));
    }

    for (int i = 0; i <= 50; ++i) {
        const double x = 0.5 * i / 50.0;
        const auto rho = DensityMatrix::dephased_bell(x);
        const double e = entropy_log4(rho);
        c.require(e >= 0.0 && e <= 0.5 + 1e-15, "family entropy " + fmt(e) + " out of range");
        const double cc = concurrence(rho);
        const double dev = std::abs(purity(rho) - 0.5 * (1.0 + cc * cc));
        c.require(dev <= 1e-12, "purity relation off by " + fmt(dev));
    }
    c.require(std::abs(entropy_log4(DensityMatrix::bell_phi_plus())) <= 1e-12,
              "pure bell state has nonzero entropy");
    c.require(std::abs(entropy_log4(DensityMatrix::dephased_bell(0.0)) - 0.5) <= 1e-12,
              "fully dephased state entropy is not 1/2");
}

// ---- 8: the synchronization tuner ---------------------------------------

void criterion_tuner(Check& c) {
    ScanSpec spec;
    spec.tau_lo = 0.5;
    spec.tau_hi = 8.0;
    spec.grid_points = 16;
    spec.metric = Metric::CAtHorizon;
    spec.horizon = 4.0 * kTwoPi;

    const auto gauss = discretize(CouplingFunction{}, 1000, 6.0);
    const auto [tau_g, value_g] = refine_peak(gauss, spec, 0.9 * kTwoPi, 1.1 * kTwoPi);
    c.require(tau_g >= 0.95 * kTwoPi && tau_g <= 1.05 * kTwoPi,
              "gaussian optimum " + fmt(tau_g) + " is outside [0.95, 1.05] * 2 pi");
    c.require(value_g > 0.0 && value_g <= 1.0, "gaussian optimum value " + fmt(value_g));

    const auto single = single_mode(1.0, 0.4);
    const auto [tau_s, value_s] = refine_peak(single, spec, 0.9 * kTwoPi, 1.1 * kTwoPi);
    c.require(std::abs(tau_s - kTwoPi) <= 1e-3,
              "single-mode optimum misses the period by " + fmt(std::abs(tau_s - kTwoPi)));
    c.require(std::abs(value_s - 1.0) <= 1e-9,
              "single-mode optimum value " + fmt(value_s) + " is not a full recovery");
}

struct Criterion {
    std::string name;
    std::function<void(Check&)> run;
    double max_seconds; // 0: no runtime pin
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"oracle adjudication", criterion_oracle_adjudication, 30.0},
        {"continuum free decay", criterion_continuum, 5.0},
        {"pulse regimes", criterion_regimes, 0.0},
        {"refocusing", criterion_echo, 0.0},
        {"reservoir halving", criterion_halving, 0.0},
        {"exchange invariance", criterion_heisenberg, 0.0},
        {"entanglement measures", criterion_measures, 0.0},
        {"synchronization tuner", criterion_tuner, 60.0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].max_seconds > 0.0 && secs > criteria[i].max_seconds)
            check.require(false, "runtime " + fmt(secs) + " s exceeds " +
                                     fmt(criteria[i].max_seconds) + " s");
        std::printf("criterion %zu (%s): %s [%.2f s]%s%s\n", i + 1,
                    criteria[i].name.c_str(), check.ok ? "PASS" : "FAIL", secs,
                    check.ok ? "" : " — ", check.ok ? "" : check.detail.c_str());
        if (!check.ok)
            ++failures;
    }
    if (failures > 0)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures;
}
