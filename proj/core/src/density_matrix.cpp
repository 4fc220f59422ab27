#include "bellpulse/density_matrix.hpp"

#include <cmath>
#include <sstream>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

void validate_density(const Mat4& m) {
    const double herm = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (herm > DensityMatrix::kHermTol)
        throw InvalidState("density matrix not Hermitian: max |rho_ij - conj(rho_ji)| = " +
                           fmt_g12(herm));
    const double tr_dev = std::abs(m.trace() - cplx(1.0, 0.0));
    if (tr_dev > DensityMatrix::kTraceTol)
        throw InvalidState("density matrix trace differs from 1 by " + fmt_g12(tr_dev));
    Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < DensityMatrix::kPsdTol)
        throw InvalidState("density matrix not positive semidefinite: min eigenvalue = " +
                           fmt_g12(min_eig));
}

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
    validate_density(m_);
}

DensityMatrix DensityMatrix::bell_phi_plus() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = 0.5; // |11><11|, |00><00|
    m(0, 3) = m(3, 0) = 0.5; // |11><00|, |00><11|
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::dephased_bell(double x) {
    if (x < 0.0 || x > 0.5)
        throw DomainError("dephased_bell: corner magnitude must lie in [0, 1/2], got " +
                          fmt_g12(x));
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = 0.5;
    m(0, 3) = m(3, 0) = x;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::werner(double p) {
    if (p < 0.0 || p > 1.0)
        throw DomainError("werner: mixing parameter must lie in [0, 1], got " + fmt_g12(p));
    Mat4 m = Mat4::Identity();
    m *= (1.0 - p) / 4.0;
    m(0, 0) += 0.5 * p;
    m(3, 3) += 0.5 * p;
    m(0, 3) += 0.5 * p;
    m(3, 0) += 0.5 * p;
    return DensityMatrix(m);
}

DensityMatrix DensityMatrix::maximally_mixed() {
    return DensityMatrix(Mat4::Identity() * 0.25);
}

DensityMatrix load_density_matrix(const std::string& path) {
    const std::string text = read_text_file(path);
    std::vector<double> vals;
    vals.reserve(32);
    for (const auto& line : split_lines(text)) {
        const auto hash = line.find('#');
        std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
        std::string tok;
        while (in >> tok)
            vals.push_back(parse_double(tok, "density matrix entry in " + path));
    }
    if (vals.size() != 32)
        throw IoError("density matrix file '" + path + "' must hold 16 re/im pairs (32 numbers), got " +
                      std::to_string(vals.size()));
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const std::size_t k = 2 * (4 * i + j);
            m(i, j) = cplx(vals[k], vals[k + 1]);
        }
    return DensityMatrix(m);
}

void save_density_matrix(const DensityMatrix& rho, const std::string& path) {
    std::string out = "# two-qubit density matrix, basis |11>,|10>,|01>,|00>, row-major re im pairs\n";
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const cplx v = rho(i, j);
            out += fmt_g12(v.real()) + " " + fmt_g12(v.imag());
            out += (j == 3) ? "\n" : "  ";
        }
    }
    atomic_write_text(path, out);
}

} // namespace bellpulse
