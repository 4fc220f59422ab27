#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "bellpulse/density_matrix.hpp"

namespace bptest {

// per-process scratch directory, removed lazily by the OS temp cleaner
inline std::string scratch_dir() {
    static const std::string dir = [] {
        const auto p = std::filesystem::temp_directory_path() /
                       ("bellpulse_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(p);
        return p.string();
    }();
    return dir;
}

inline std::string scratch_path(const std::string& name) {
    return scratch_dir() + "/" + name;
}

// random full-rank state: positively weighted mixture of four random kets
inline bellpulse::DensityMatrix random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> w(0.1, 1.0);
    bellpulse::Mat4 acc = bellpulse::Mat4::Zero();
    for (int k = 0; k < 4; ++k) {
        Eigen::Vector4cd v;
        for (int i = 0; i < 4; ++i)
            v(i) = bellpulse::cplx(g(rng), g(rng));
        v.normalize();
        acc += w(rng) * (v * v.adjoint());
    }
    acc /= acc.trace().real();
    acc = 0.5 * (acc + acc.adjoint().eval());
    return bellpulse::DensityMatrix(acc);
}

// Haar-distributed SU(2) element via a normalized Gaussian quaternion
inline Eigen::Matrix2cd random_su2(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
    const double n = std::sqrt(a * a + b * b + c * c + d * d);
    a /= n; b /= n; c /= n; d /= n;
    Eigen::Matrix2cd u;
    u << bellpulse::cplx(a, b), bellpulse::cplx(c, d),
        bellpulse::cplx(-c, d), bellpulse::cplx(a, -b);
    return u;
}

inline bellpulse::Mat4 kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    bellpulse::Mat4 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    return out;
}

} // namespace bptest
