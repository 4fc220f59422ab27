#include "bellpulse/reservoir.hpp"

#include <algorithm>
#include <cmath>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.77245385090551602730;
} // namespace

Shape shape_from_string(const std::string& s) {
    if (s == "gaussian")
        return Shape::Gaussian;
    if (s == "lorentzian")
        return Shape::Lorentzian;
    if (s == "semielliptic")
        return Shape::SemiElliptic;
    throw DomainError("unknown coupling shape '" + s +
                      "' (expected gaussian|lorentzian|semielliptic)");
}

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::Gaussian: return "gaussian";
        case Shape::Lorentzian: return "lorentzian";
        case Shape::SemiElliptic: return "semielliptic";
    }
    return "?";
}

void CouplingFunction::validate() const {
    if (!(s > 0.0))
        throw DomainError("coupling strength s must be > 0, got " + fmt_g12(s));
    if (!(omega_p > 0.0))
        throw DomainError("centre frequency omega_p must be > 0, got " + fmt_g12(omega_p));
    if (!(gamma_p > 0.0))
        throw DomainError("width gamma_p must be > 0, got " + fmt_g12(gamma_p));
    if (shape == Shape::SemiElliptic && omega_p - gamma_p < 0.0)
        throw DomainError("semielliptic support [omega_p - gamma_p, omega_p + gamma_p] "
                          "crosses omega = 0");
}

double evaluate(const CouplingFunction& cf, double omega) {
    const double d = omega - cf.omega_p;
    switch (cf.shape) {
        case Shape::Gaussian:
            return cf.s / (kSqrtPi * cf.gamma_p) * std::exp(-d * d / (cf.gamma_p * cf.gamma_p));
        case Shape::Lorentzian:
            return cf.s * cf.gamma_p / kPi / (d * d + cf.gamma_p * cf.gamma_p);
        case Shape::SemiElliptic: {
            const double u = cf.gamma_p * cf.gamma_p - d * d;
            if (u <= 0.0)
                return 0.0;
            return 2.0 * cf.s / (kPi * cf.gamma_p * cf.gamma_p) * std::sqrt(u);
        }
    }
    return 0.0;
}

double truncated_mass(const CouplingFunction& cf, double lo, double hi) {
    if (hi <= lo)
        return 0.0;
    const double a = lo - cf.omega_p;
    const double b = hi - cf.omega_p;
    switch (cf.shape) {
        case Shape::Gaussian:
            return 0.5 * cf.s * (std::erf(b / cf.gamma_p) - std::erf(a / cf.gamma_p));
        case Shape::Lorentzian:
            return cf.s / kPi * (std::atan(b / cf.gamma_p) - std::atan(a / cf.gamma_p));
        case Shape::SemiElliptic: {
            // antiderivative of the unit-mass semicircle on [-gamma, gamma]
            const auto cdf = [&](double x) {
                const double u = std::clamp(x / cf.gamma_p, -1.0, 1.0);
                return (std::asin(u) + u * std::sqrt(std::max(0.0, 1.0 - u * u))) / kPi;
            };
            return cf.s * (cdf(b) - cdf(a));
        }
    }
    return 0.0;
}

double ModeSet::total_strength() const {
    double sum = 0.0;
    for (const double h2 : h_sq)
        sum += h2;
    return sum;
}

void ModeSet::validate() const {
    if (omega.size() != h_sq.size())
        throw InvalidState("mode set: omega and h_sq lengths differ");
    if (omega.empty())
        throw InvalidState("mode set: empty");
    for (std::size_t k = 0; k < omega.size(); ++k) {
        if (!(omega[k] > 0.0))
            throw InvalidState("mode set: omega_k must be > 0, got " + fmt_g12(omega[k]));
        if (k > 0 && !(omega[k] > omega[k - 1]))
            throw InvalidState("mode set: omega_k must be strictly ascending");
        if (h_sq[k] < 0.0)
            throw InvalidState("mode set: h_k^2 must be >= 0, got " + fmt_g12(h_sq[k]));
    }
}

ModeSet discretize(const CouplingFunction& cf, int K, double support_halfwidth_in_gammas) {
    cf.validate();
    if (K < 1)
        throw DomainError("discretize: K must be >= 1, got " + std::to_string(K));
    const double w = support_halfwidth_in_gammas;
    if (!(w > 0.0))
        throw DomainError("discretize: support halfwidth must be > 0, got " + fmt_g12(w));

    double lo = cf.omega_p - w * cf.gamma_p;
    double hi = cf.omega_p + w * cf.gamma_p;
    if (cf.shape == Shape::SemiElliptic) {
        lo = std::max(lo, cf.omega_p - cf.gamma_p);
        hi = std::min(hi, cf.omega_p + cf.gamma_p);
    }
    const double eps = 1e-9 * cf.omega_p;
    const double lo_clipped = std::max(lo, eps);
    if (!(hi > lo_clipped))
        throw BadSupport("discretize: truncated support [" + fmt_g12(lo_clipped) + ", " +
                         fmt_g12(hi) + "] is empty");

    ModeSet ms;
    ms.omega.resize(static_cast<std::size_t>(K));
    ms.h_sq.resize(static_cast<std::size_t>(K));
    ms.clipped_mass = (lo_clipped > lo) ? truncated_mass(cf, lo, lo_clipped) : 0.0;

    const double dw = (hi - lo_clipped) / K;
    for (int k = 0; k < K; ++k) {
        const double wk = lo_clipped + (k + 0.5) * dw;
        ms.omega[static_cast<std::size_t>(k)] = wk;
        ms.h_sq[static_cast<std::size_t>(k)] = evaluate(cf, wk) * dw;
    }
    ms.validate();
    return ms;
}

ModeSet single_mode(double omega, double h_sq) {
    ModeSet ms;
    ms.omega = {omega};
    ms.h_sq = {h_sq};
    ms.validate();
    return ms;
}

void save_mode_set(const ModeSet& ms, const std::string& path) {
    std::string out = "# omega_k h_k_sq\n";
    for (std::size_t k = 0; k < ms.size(); ++k)
        out += fmt_g12(ms.omega[k]) + " " + fmt_g12(ms.h_sq[k]) + "\n";
    atomic_write_text(path, out);
}

ModeSet load_mode_set(const std::string& path) {
    ModeSet ms;
    for (const auto& raw : split_lines(read_text_file(path))) {
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty())
            continue;
        const auto pos = line.find_first_of(" \t");
        if (pos == std::string::npos)
            throw IoError("mode set file '" + path + "': expected two columns, got '" + line + "'");
        ms.omega.push_back(parse_double(trim(line.substr(0, pos)), "omega_k in " + path));
        ms.h_sq.push_back(parse_double(trim(line.substr(pos)), "h_k_sq in " + path));
    }
    ms.validate();
    return ms;
}

} // namespace bellpulse
