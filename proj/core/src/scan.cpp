#include "bellpulse/scan.hpp"

#include <algorithm>
#include <cmath>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

namespace {
constexpr double kRefineWidth = 1e-4; // scaled-time bracket width at termination
} // namespace

Metric metric_from_string(const std::string& s) {
    if (s == "time_averaged_c")
        return Metric::TimeAveragedC;
    if (s == "min_c")
        return Metric::MinC;
    if (s == "c_at_horizon")
        return Metric::CAtHorizon;
    throw DomainError("unknown metric '" + s +
                      "' (expected time_averaged_c|min_c|c_at_horizon)");
}

std::string to_string(Metric m) {
    switch (m) {
        case Metric::TimeAveragedC: return "time_averaged_c";
        case Metric::MinC: return "min_c";
        case Metric::CAtHorizon: return "c_at_horizon";
    }
    return "?";
}

void ScanSpec::validate() const {
    if (!(tau_lo > 0.0) || !(tau_hi > tau_lo))
        throw DomainError("scan: need 0 < tau_lo < tau_hi, got [" + fmt_g12(tau_lo) + ", " +
                          fmt_g12(tau_hi) + "]");
    if (grid_points < 2)
        throw DomainError("scan: grid_points must be >= 2");
    if (!(horizon > 0.0))
        throw DomainError("scan: horizon must be > 0");
    if (fixed_N < -1)
        throw DomainError("scan: fixed_N must be >= 0, or -1 for the fill-horizon rule");
    if (!(omega_p > 0.0))
        throw DomainError("scan: omega_p must be > 0");
}

double evaluate_metric(const ModeSet& modes, const ScanSpec& spec, double tau_scaled) {
    const int n = spec.fixed_N >= 0 ? spec.fixed_N
                                    : static_cast<int>(std::floor(spec.horizon / tau_scaled));
    const PulseSchedule sched = PulseSchedule::uniform(n, tau_scaled / spec.omega_p);
    const double horizon_abs = spec.horizon / spec.omega_p;

    if (spec.metric == Metric::CAtHorizon)
        return concurrence_common(modes, horizon_abs, sched);

    const int ns = ScanSpec::kMetricSamples;
    double acc = (spec.metric == Metric::MinC) ? 1.0 : 0.0;
    for (int j = 0; j < ns; ++j) {
        const double t = horizon_abs * j / (ns - 1);
        const double c = concurrence_common(modes, t, sched);
        if (spec.metric == Metric::MinC)
            acc = std::min(acc, c);
        else
            acc += c;
    }
    return spec.metric == Metric::MinC ? acc : acc / ns;
}

ScanResult scan_tau(const ModeSet& modes, const ScanSpec& spec) {
    spec.validate();
    modes.validate();

    ScanResult res;
    res.rows.reserve(static_cast<std::size_t>(spec.grid_points));
    std::size_t best = 0;
    for (int i = 0; i < spec.grid_points; ++i) {
        const double tau =
            spec.tau_lo + (spec.tau_hi - spec.tau_lo) * i / (spec.grid_points - 1);
        res.rows.emplace_back(tau, evaluate_metric(modes, spec, tau));
        if (res.rows[static_cast<std::size_t>(i)].second > res.rows[best].second)
            best = static_cast<std::size_t>(i); // ties keep the smaller tau
    }
    res.best_tau = res.rows[best].first;
    res.best_value = res.rows[best].second;

    // sharpen a strict interior maximum; never report less than the grid max
    if (best > 0 && best + 1 < res.rows.size() &&
        res.rows[best].second > res.rows[best - 1].second &&
        res.rows[best].second > res.rows[best + 1].second) {
        const auto [tau_star, value] =
            refine_peak(modes, spec, res.rows[best - 1].first, res.rows[best + 1].first);
        if (value >= res.best_value) {
            res.best_tau = tau_star;
            res.best_value = value;
        }
    }
    return res;
}

std::pair<double, double> refine_peak(const ModeSet& modes, const ScanSpec& spec,
                                      double lo, double hi) {
    spec.validate();
    modes.validate();
    if (!(lo > 0.0) || !(hi > lo))
        throw DomainError("refine_peak: need 0 < lo < hi");

    const auto f = [&](double tau) { return evaluate_metric(modes, spec, tau); };

    // precondition: the bracket must enclose a peak
    const double mid = 0.5 * (lo + hi);
    const double f_lo = f(lo);
    const double f_hi = f(hi);
    const double f_mid = f(mid);
    if (!(f_mid > f_lo && f_mid > f_hi))
        throw NoBracket("refine_peak: midpoint value " + fmt_g12(f_mid) +
                        " is not above the endpoints (" + fmt_g12(f_lo) + ", " +
                        fmt_g12(f_hi) + ")");

    std::pair<double, double> best{lo, f_lo};
    const auto consider = [&best](double tau, double value) {
        if (value > best.second || (value == best.second && tau < best.first))
            best = {tau, value};
    };
    consider(hi, f_hi);
    consider(mid, f_mid);

    const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo;
    double b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    consider(c, fc);
    consider(d, fd);
    while (b - a > kRefineWidth) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
            consider(c, fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
            consider(d, fd);
        }
    }
    return best;
}

void save_scan_csv(const ScanResult& res, const std::string& path) {
    std::string out = "tau_s_scaled,metric_value\n";
    for (const auto& [tau, value] : res.rows)
        out += fmt_g12(tau) + "," + fmt_g12(value) + "\n";
    out += "# best_tau_s = " + fmt_g12(res.best_tau) + ", best_value = " +
           fmt_g12(res.best_value) + "\n";
    atomic_write_text(path, out);
}

ScanResult load_scan_csv(const std::string& path) {
    const auto lines = split_lines(read_text_file(path));
    if (lines.empty() || lines[0] != "tau_s_scaled,metric_value")
        throw IoError("'" + path + "' is not a scan CSV (bad header)");
    ScanResult res;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string line = trim(lines[i]);
        if (line.empty())
            continue;
        if (line[0] == '#') {
            std::size_t pos = line.find("best_tau_s =");
            std::size_t comma = line.find(',', pos);
            if (pos != std::string::npos && comma != std::string::npos) {
                res.best_tau = parse_double(trim(line.substr(pos + 12, comma - pos - 12)),
                                            "best_tau_s");
                pos = line.find("best_value =", comma);
                if (pos != std::string::npos)
                    res.best_value = parse_double(trim(line.substr(pos + 12)), "best_value");
            }
            continue;
        }
        const auto cols = split_trimmed(line, ',');
        if (cols.size() != 2)
            throw IoError("'" + path + "' line " + std::to_string(i + 1) +
                          ": expected 2 columns");
        res.rows.emplace_back(parse_double(cols[0], "tau_s_scaled"),
                              parse_double(cols[1], "metric_value"));
    }
    return res;
}

} // namespace bellpulse
