#pragma once

#include <array>

#include "bellpulse/density_matrix.hpp"

namespace bellpulse {

struct MeasureReport {
    double concurrence = 0.0;            // in [0,1]
    double entropy_log4 = 0.0;           // in [0,1]
    double purity = 1.0;                 // in [1/4,1]
    std::array<double, 4> eigenvalues{}; // descending, sum to 1
};

// rho_tilde = (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y)
DensityMatrix spin_flip(const DensityMatrix& rho);

// default route: C = max(0, mu1 - mu2 - mu3 - mu4), mu_i the descending
// square roots of the eigenvalues of rho * rho_tilde
double concurrence(const DensityMatrix& rho);

// independent route through R = sqrt(sqrt(rho) rho_tilde sqrt(rho)):
// C = max(0, 2 lambda_max(R) - Tr R); agrees with concurrence() to 1e-9
double concurrence_via_R(const DensityMatrix& rho);

// -sum_i lambda_i log4 lambda_i over the eigenvalues of rho (0 log 0 == 0)
double entropy_log4(const DensityMatrix& rho);

// same entropy evaluated on the dephased-Bell spectrum lambda = (1 +- C)/2;
// ranges over [0, 1/2] as C runs from 1 to 0
double entropy_from_concurrence(double c);

// Tr rho^2
double purity(const DensityMatrix& rho);

MeasureReport measure(const DensityMatrix& rho);

} // namespace bellpulse
