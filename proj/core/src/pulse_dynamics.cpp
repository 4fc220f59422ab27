#include "bellpulse/pulse_dynamics.hpp"

#include <cmath>
#include <complex>

#include "bellpulse/measures.hpp"
#include "bellpulse/text_io.hpp"

namespace bellpulse {

Normalization normalization_from_string(const std::string& s) {
    if (s == "physical")
        return Normalization::Physical;
    if (s == "paper_literal")
        return Normalization::PaperLiteral;
    throw DomainError("unknown normalization '" + s + "' (expected physical|paper_literal)");
}

std::string to_string(Normalization n) {
    return n == Normalization::Physical ? "physical" : "paper_literal";
}

namespace {

using namespace std::complex_literals;

// geometric sum  sum_{m=1}^{n} (-1)^m e^{-i m w tau}; falls back to the
// direct loop near the anti-resonant point w tau = pi (odd multiples), where
// the closed-form denominator 1 + e^{-i w tau} vanishes
std::complex<double> alternating_phase_sum(double w_tau, int n) {
    const std::complex<double> q = std::exp(-1i * w_tau);
    if (std::abs(1.0 + q) < 1e-8) {
        std::complex<double> sum = 0.0;
        std::complex<double> term = 1.0;
        for (int m = 1; m <= n; ++m) {
            term *= -q;
            sum += term;
        }
        return sum;
    }
    const std::complex<double> mq = -q;
    return mq * (1.0 - std::pow(mq, n)) / (1.0 + q);
}

std::complex<double> alpha_uniform(double h, double w, double t, int n_pulses, double tau) {
    const int n_eff = (n_pulses > 0) ? std::min(n_pulses, static_cast<int>(std::floor(t / tau)))
                                     : 0;
    const double dt = t - n_eff * tau;
    std::complex<double> bracket = 1.0 - std::exp(1i * (w * dt));
    if (n_eff > 0)
        bracket += alternating_phase_sum(w * tau, n_eff) * (1.0 - std::exp(1i * (w * tau)));
    return h * std::exp(-1i * (w * dt)) * bracket;
}

// sign-toggled segment integral, aligned to the uniform closed form's phase
// frame: alpha = (-1)^{N+1} h e^{-iwt} sum_j sigma_j (e^{iw b_j} - e^{iw a_j})
std::complex<double> alpha_segments(double h, double w, double t,
                                    const std::vector<double>& pulse_times) {
    std::complex<double> d = 0.0;
    double sign = 1.0;
    double a = 0.0;
    for (const double b : pulse_times) {
        d += sign * (std::exp(1i * (w * b)) - std::exp(1i * (w * a)));
        sign = -sign;
        a = b;
    }
    d += sign * (std::exp(1i * (w * t)) - std::exp(1i * (w * a)));
    const double parity = (pulse_times.size() % 2 == 0) ? -1.0 : 1.0;
    return parity * h * std::exp(-1i * (w * t)) * d;
}

} // namespace

std::complex<double> alpha_k(double h_k_sq, double omega_k, double t,
                             const PulseSchedule& sched) {
    if (t < 0.0)
        throw DomainError("alpha_k: t must be >= 0, got " + fmt_g12(t));
    if (h_k_sq < 0.0)
        throw DomainError("alpha_k: h_k^2 must be >= 0, got " + fmt_g12(h_k_sq));
    sched.validate();
    const double h = std::sqrt(h_k_sq);
    if (sched.kind == PulseSchedule::Kind::Uniform)
        return alpha_uniform(h, omega_k, t, sched.n_pulses, sched.tau_s);
    return alpha_segments(h, omega_k, t, sched.times_up_to(t));
}

double decoherence_exponent(const ModeSet& modes, double t, const PulseSchedule& sched) {
    modes.validate();
    double sum = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k)
        sum += std::norm(alpha_k(modes.h_sq[k], modes.omega[k], t, sched));
    return 2.0 * sum;
}

double concurrence_common(const ModeSet& modes, double t, const PulseSchedule& sched,
                          Normalization norm) {
    const double c = std::exp(-decoherence_exponent(modes, t, sched));
    return norm == Normalization::Physical ? c : 0.5 * c;
}

double concurrence_noncommon(const ModeSet& modes1, const ModeSet& modes2, double t,
                             const PulseSchedule& sched, Normalization norm) {
    // per-qubit exponent is half of what the same reservoir contributes in common
    const double expo = 0.25 * (decoherence_exponent(modes1, t, sched) +
                                decoherence_exponent(modes2, t, sched));
    const double c = std::exp(-expo);
    return norm == Normalization::Physical ? c : 0.5 * c;
}

double free_decay_closed_form(const CouplingFunction& cf, double t) {
    cf.validate();
    if (cf.shape != Shape::Gaussian)
        throw ShapeUnsupported("free_decay_closed_form: only the Gaussian coupling has this "
                               "closed form (got " + to_string(cf.shape) + ")");
    const double env = std::exp(-0.25 * cf.gamma_p * cf.gamma_p * t * t);
    return 4.0 * cf.s * (1.0 - std::cos(cf.omega_p * t) * env);
}

double Trace::selected_c(std::size_t i) const {
    return norm == Normalization::Physical ? samples[i].c_physical : samples[i].c_literal;
}

namespace {

void check_grid(const std::vector<double>& t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0)
            throw DomainError("trace: grid times must be >= 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw DomainError("trace: grid times must be strictly ascending");
    }
}

TraceSample make_sample(double t_scaled, double gamma) {
    TraceSample s;
    s.t = t_scaled;
    s.gamma = gamma;
    s.c_physical = std::exp(-gamma);
    s.c_literal = 0.5 * s.c_physical;
    s.entropy = entropy_from_concurrence(s.c_physical);
    s.purity = 0.5 * (1.0 + s.c_physical * s.c_physical);
    return s;
}

} // namespace

Trace trace_common(const ModeSet& modes, const std::vector<double>& t_grid,
                   const PulseSchedule& sched, Normalization norm, double omega_p) {
    check_grid(t_grid);
    Trace tr;
    tr.norm = norm;
    tr.samples.reserve(t_grid.size());
    for (const double t : t_grid)
        tr.samples.push_back(make_sample(omega_p * t, decoherence_exponent(modes, t, sched)));
    return tr;
}

Trace trace_noncommon(const ModeSet& modes1, const ModeSet& modes2,
                      const std::vector<double>& t_grid, const PulseSchedule& sched,
                      Normalization norm, double omega_p) {
    check_grid(t_grid);
    Trace tr;
    tr.norm = norm;
    tr.samples.reserve(t_grid.size());
    for (const double t : t_grid) {
        const double gamma = 0.25 * (decoherence_exponent(modes1, t, sched) +
                                     decoherence_exponent(modes2, t, sched));
        tr.samples.push_back(make_sample(omega_p * t, gamma));
    }
    return tr;
}

void save_trace_csv(const Trace& tr, const std::string& path) {
    std::string out = "t_scaled,gamma,c_physical,c_literal,entropy_log4,purity\n";
    for (const auto& s : tr.samples) {
        out += fmt_g12(s.t) + "," + fmt_g12(s.gamma) + "," + fmt_g12(s.c_physical) + "," +
               fmt_g12(s.c_literal) + "," + fmt_g12(s.entropy) + "," + fmt_g12(s.purity) + "\n";
    }
    atomic_write_text(path, out);
}

Trace load_trace_csv(const std::string& path) {
    const auto lines = split_lines(read_text_file(path));
    if (lines.empty() || lines[0] != "t_scaled,gamma,c_physical,c_literal,entropy_log4,purity")
        throw IoError("'" + path + "' is not a trace CSV (bad header)");
    Trace tr;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty() || lines[i][0] == '#')
            continue;
        const auto cols = split_trimmed(lines[i], ',');
        if (cols.size() != 6)
            throw IoError("'" + path + "' line " + std::to_string(i + 1) +
                          ": expected 6 columns");
        TraceSample s;
        s.t = parse_double(cols[0], "t_scaled");
        s.gamma = parse_double(cols[1], "gamma");
        s.c_physical = parse_double(cols[2], "c_physical");
        s.c_literal = parse_double(cols[3], "c_literal");
        s.entropy = parse_double(cols[4], "entropy_log4");
        s.purity = parse_double(cols[5], "purity");
        tr.samples.push_back(s);
    }
    return tr;
}

} // namespace bellpulse
