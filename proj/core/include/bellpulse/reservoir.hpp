#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bellpulse/errors.hpp"

namespace bellpulse {

enum class Shape { Gaussian, Lorentzian, SemiElliptic };

Shape shape_from_string(const std::string& s); // "gaussian" | "lorentzian" | "semielliptic"
std::string to_string(Shape shape);

// Parametric coupling function h(w).  All three shapes are normalized so the
// integral over their full (untruncated) support equals s, which makes s the
// total coupling strength regardless of shape.
struct CouplingFunction {
    Shape shape = Shape::Gaussian;
    double s = 5.0;        // total strength, > 0
    double omega_p = 1.0;  // centre angular frequency, > 0
    double gamma_p = 0.1;  // width, > 0
    void validate() const; // throws DomainError
};

// Discretized reservoir: parallel arrays of (omega_k, h_k^2).
struct ModeSet {
    std::vector<double> omega;  // strictly ascending, all > 0
    std::vector<double> h_sq;   // all >= 0
    double clipped_mass = 0.0;  // mass removed by the omega <= eps clip

    std::size_t size() const { return omega.size(); }
    double total_strength() const;
    void validate() const;      // throws InvalidState
};

double evaluate(const CouplingFunction& cf, double omega);

// integral of the coupling function over [lo, hi] via its closed-form
// antiderivative (erf / arctan / arcsin depending on shape)
double truncated_mass(const CouplingFunction& cf, double lo, double hi);

// Midpoint rule on [max(eps, omega_p - w*gamma_p), omega_p + w*gamma_p] with
// eps = 1e-9*omega_p; the SemiElliptic window is additionally intersected
// with the shape's own support [omega_p - gamma_p, omega_p + gamma_p].
// K cells, modes at cell centres, h_k^2 = evaluate(omega_k) * dw.  Mass lost
// to the eps clip is recorded in ModeSet::clipped_mass.
ModeSet discretize(const CouplingFunction& cf, int K,
                   double support_halfwidth_in_gammas = 6.0);

ModeSet single_mode(double omega, double h_sq);

// two-column text: omega_k h_k_sq
void save_mode_set(const ModeSet& ms, const std::string& path);
ModeSet load_mode_set(const std::string& path);

} // namespace bellpulse
