#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "bellpulse/errors.hpp"

namespace bellpulse {

using cplx = std::complex<double>;
using Mat4 = Eigen::Matrix4cd;

// Two-qubit density matrix in the fixed basis |11>,|10>,|01>,|00> (indices
// 0..3).  Construction validates the state, so a DensityMatrix in hand always
// satisfies: hermiticity and unit trace to 1e-12, smallest eigenvalue
// >= -1e-10.
class DensityMatrix {
public:
    static constexpr double kHermTol  = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kPsdTol   = -1e-10;

    explicit DensityMatrix(const Mat4& m);

    const Mat4& mat() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

    // canonical states
    static DensityMatrix bell_phi_plus();            // (|11> + |00>)/sqrt(2)
    static DensityMatrix dephased_bell(double x);    // diag(1/2,0,0,1/2) + x corners, 0 <= x <= 1/2
    static DensityMatrix werner(double p);           // p |phi+><phi+| + (1-p) I/4
    static DensityMatrix maximally_mixed();

private:
    Mat4 m_;
};

// throws InvalidState with a description of the violated invariant
void validate_density(const Mat4& m);

// plain-text format: 16 complex entries, row-major, "re im" pairs,
// whitespace separated; '#' starts a comment
DensityMatrix load_density_matrix(const std::string& path);
void save_density_matrix(const DensityMatrix& rho, const std::string& path);

} // namespace bellpulse
