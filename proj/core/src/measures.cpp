#include "bellpulse/measures.hpp"

#include <algorithm>
#include <cmath>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

namespace {

// intermediate spectra (rho*rho_tilde, the R chain): small negative rounding
// is clipped, anything below the band is a real failure
constexpr double kClipBand = -1e-8;

double clip_eigenvalue(double lambda, const char* where) {
    if (lambda >= 0.0)
        return lambda;
    if (lambda >= kClipBand)
        return 0.0;
    throw NumericalFailure(std::string(where) + ": eigenvalue " + fmt_g12(lambda) +
                           " below the clip band " + fmt_g12(kClipBand));
}

const Mat4& sigma_yy() {
    // sigma_y (x) sigma_y in the |11>,|10>,|01>,|00> ordering:
    // antidiagonal (-1, 1, 1, -1)
    static const Mat4 m = [] {
        Mat4 s = Mat4::Zero();
        s(0, 3) = s(3, 0) = -1.0;
        s(1, 2) = s(2, 1) = 1.0;
        return s;
    }();
    return m;
}

// eigenvalues of sqrt(rho) rho_tilde sqrt(rho), built through Hermitian
// eigendecompositions only
Eigen::Vector4d r_squared_eigenvalues(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho.mat());
    if (es.info() != Eigen::Success)
        throw NumericalFailure("concurrence_via_R: eigendecomposition of rho failed");
    Eigen::Vector4d lam = es.eigenvalues();
    for (int i = 0; i < 4; ++i)
        lam(i) = std::sqrt(clip_eigenvalue(lam(i), "concurrence_via_R(sqrt rho)"));
    const Mat4 sqrt_rho = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().adjoint();

    Mat4 m = sqrt_rho * spin_flip(rho).mat() * sqrt_rho;
    m = 0.5 * (m + m.adjoint()); // hermitize away rounding
    Eigen::SelfAdjointEigenSolver<Mat4> es2(m, Eigen::EigenvaluesOnly);
    if (es2.info() != Eigen::Success)
        throw NumericalFailure("concurrence_via_R: eigendecomposition of R^2 failed");
    return es2.eigenvalues();
}

} // namespace

DensityMatrix spin_flip(const DensityMatrix& rho) {
    const Mat4 flipped = sigma_yy() * rho.mat().conjugate() * sigma_yy();
    return DensityMatrix(flipped);
}

double concurrence(const DensityMatrix& rho) {
    const Mat4 m = rho.mat() * spin_flip(rho).mat();
    Eigen::ComplexEigenSolver<Mat4> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("concurrence: eigendecomposition of rho*rho_tilde failed");

    std::array<double, 4> mu{};
    for (int i = 0; i < 4; ++i) {
        const cplx ev = es.eigenvalues()(i);
        if (std::abs(ev.imag()) > 1e-8)
            throw NumericalFailure("concurrence: rho*rho_tilde eigenvalue has imaginary part " +
                                   fmt_g12(ev.imag()));
        mu[i] = std::sqrt(clip_eigenvalue(ev.real(), "concurrence(rho*rho_tilde)"));
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    const double c = mu[0] - mu[1] - mu[2] - mu[3];
    return std::max(0.0, c);
}

double concurrence_via_R(const DensityMatrix& rho) {
    const Eigen::Vector4d lam2 = r_squared_eigenvalues(rho);
    double tr_r = 0.0;
    double lam_max = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double mu = std::sqrt(clip_eigenvalue(lam2(i), "concurrence_via_R(R^2)"));
        tr_r += mu;
        lam_max = std::max(lam_max, mu);
    }
    return std::max(0.0, 2.0 * lam_max - tr_r);
}

double entropy_log4(const DensityMatrix& rho) {
    Eigen::SelfAdjointEigenSolver<Mat4> es(rho.mat(), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("entropy_log4: eigendecomposition failed");
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double lam = std::max(0.0, es.eigenvalues()(i)); // validated >= -1e-10
        if (lam > 0.0)
            s -= lam * std::log(lam);
    }
    return s / std::log(4.0);
}

double entropy_from_concurrence(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw DomainError("entropy_from_concurrence: C must lie in [0, 1], got " + fmt_g12(c));
    double s = 0.0;
    for (const double lam : {0.5 * (1.0 + c), 0.5 * (1.0 - c)})
        if (lam > 0.0)
            s -= lam * std::log(lam);
    return s / std::log(4.0);
}

double purity(const DensityMatrix& rho) {
    return (rho.mat() * rho.mat()).trace().real();
}

MeasureReport measure(const DensityMatrix& rho) {
    MeasureReport rep;
    rep.concurrence = concurrence(rho);
    rep.entropy_log4 = entropy_log4(rho);
    rep.purity = purity(rho);

    Eigen::SelfAdjointEigenSolver<Mat4> es(rho.mat(), Eigen::EigenvaluesOnly);
    for (int i = 0; i < 4; ++i)
        rep.eigenvalues[i] = es.eigenvalues()(3 - i); // descending
    return rep;
}

} // namespace bellpulse
