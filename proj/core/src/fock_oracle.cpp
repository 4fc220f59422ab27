#include "bellpulse/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "bellpulse/measures.hpp"
#include "bellpulse/text_io.hpp"

namespace bellpulse {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using namespace std::complex_literals;

constexpr long kDimensionCap = 20000;

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
    MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// embed a d x d single-register operator at register r of `regs` registers
// (register 0 is the most significant factor)
MatrixXcd on_register(const MatrixXcd& op, int r, int regs, int d) {
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (int i = 0; i < regs; ++i)
        out = kron(out, i == r ? op : MatrixXcd::Identity(d, d));
    return out;
}

// qubit-pair operators in the |11>,|10>,|01>,|00> basis
Eigen::Matrix4cd s1z_plus_s2z() {
    Eigen::Vector4cd diag;
    diag << 1.0, 0.0, 0.0, -1.0;
    return diag.asDiagonal();
}

Eigen::Matrix4cd s1z() {
    Eigen::Vector4cd diag;
    diag << 0.5, 0.5, -0.5, -0.5;
    return diag.asDiagonal();
}

Eigen::Matrix4cd s2z() {
    Eigen::Vector4cd diag;
    diag << 0.5, -0.5, 0.5, -0.5;
    return diag.asDiagonal();
}

Eigen::Matrix4cd heisenberg_term() {
    // S1.S2 = SzSz + (S1+ S2- + S1- S2+)/2
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = m(3, 3) = 0.25;
    m(1, 1) = m(2, 2) = -0.25;
    m(1, 2) = m(2, 1) = 0.5;
    return m;
}

} // namespace

Topology topology_from_string(const std::string& s) {
    if (s == "common")
        return Topology::Common;
    if (s == "noncommon")
        return Topology::NonCommon;
    throw DomainError("unknown topology '" + s + "' (expected common|noncommon)");
}

std::string to_string(Topology t) {
    return t == Topology::Common ? "common" : "noncommon";
}

int OracleConfig::registers() const {
    const int k = static_cast<int>(modes.size());
    return topology == Topology::Common ? k : 2 * k;
}

long OracleConfig::total_dim() const {
    long dim = 4;
    for (int r = 0; r < registers(); ++r) {
        if (dim > kDimensionCap) // avoid overflow; already past the cap anyway
            return dim;
        dim *= fock_dim;
    }
    return dim;
}

void OracleConfig::validate() const {
    modes.validate();
    if (modes.size() > 3)
        throw DimensionCap("oracle: at most K = 3 modes are supported, got " +
                           std::to_string(modes.size()) + " (use the analytic path)");
    if (fock_dim < 2)
        throw DomainError("oracle: fock_dim must be >= 2, got " + std::to_string(fock_dim));
    if (total_dim() > kDimensionCap)
        throw DimensionCap("oracle: total dimension 4*d^" + std::to_string(registers()) +
                           " = " + std::to_string(total_dim()) + " exceeds the cap " +
                           std::to_string(kDimensionCap));
    if (t_grid.empty())
        throw DomainError("oracle: t_grid must not be empty");
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (t_grid[i] < 0.0)
            throw DomainError("oracle: grid times must be >= 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw DomainError("oracle: grid times must be strictly ascending");
    }
    if (!(leak_threshold > 0.0))
        throw DomainError("oracle: leak threshold must be > 0");
    if (omega0 < 0.0)
        throw DomainError("oracle: omega0 must be >= 0");
    if (!(omega_p > 0.0))
        throw DomainError("oracle: omega_p must be > 0");
    schedule.validate();
}

Eigen::MatrixXcd build_hamiltonian(const OracleConfig& cfg) {
    cfg.validate();
    const int d = cfg.fock_dim;
    const int k_modes = static_cast<int>(cfg.modes.size());
    const int regs = cfg.registers();
    const long bath_dim = cfg.total_dim() / 4;

    MatrixXcd b = MatrixXcd::Zero(d, d);
    for (int n = 1; n < d; ++n)
        b(n - 1, n) = std::sqrt(static_cast<double>(n));
    const MatrixXcd x_op = b + b.adjoint();
    const MatrixXcd n_op = b.adjoint() * b;

    Eigen::Matrix4cd hs = cfg.omega0 * s1z_plus_s2z();
    if (cfg.heisenberg_J != 0.0)
        hs += cfg.heisenberg_J * heisenberg_term();

    MatrixXcd h_bath = MatrixXcd::Zero(bath_dim, bath_dim);
    for (int r = 0; r < regs; ++r)
        h_bath += cfg.modes.omega[static_cast<std::size_t>(r % k_modes)] *
                  on_register(n_op, r, regs, d);

    MatrixXcd h = kron(hs, MatrixXcd::Identity(bath_dim, bath_dim)) +
                  kron(Eigen::Matrix4cd::Identity(), h_bath);

    if (cfg.topology == Topology::Common) {
        MatrixXcd coupling = MatrixXcd::Zero(bath_dim, bath_dim);
        for (int k = 0; k < k_modes; ++k) {
            const auto ik = static_cast<std::size_t>(k);
            coupling += std::sqrt(cfg.modes.h_sq[ik]) * cfg.modes.omega[ik] *
                        on_register(x_op, k, regs, d);
        }
        h += kron(s1z_plus_s2z(), coupling);
    } else {
        MatrixXcd c1 = MatrixXcd::Zero(bath_dim, bath_dim);
        MatrixXcd c2 = MatrixXcd::Zero(bath_dim, bath_dim);
        for (int k = 0; k < k_modes; ++k) {
            const auto ik = static_cast<std::size_t>(k);
            const double hw = std::sqrt(cfg.modes.h_sq[ik]) * cfg.modes.omega[ik];
            c1 += hw * on_register(x_op, k, regs, d);
            c2 += hw * on_register(x_op, k_modes + k, regs, d);
        }
        h += kron(s1z(), c1) + kron(s2z(), c2);
    }

    const double herm = (h - h.adjoint()).cwiseAbs().maxCoeff();
    if (herm > 1e-12)
        throw NumericalFailure("oracle Hamiltonian hermiticity residual " + fmt_g12(herm));
    return h;
}

namespace {

struct Event {
    double t;
    int sample_index; // -1 if not a grid point
    bool pulse;
};

std::vector<Event> merge_events(const std::vector<double>& t_grid,
                                const std::vector<double>& pulses) {
    std::vector<Event> ev;
    ev.reserve(t_grid.size() + pulses.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i)
        ev.push_back({t_grid[i], static_cast<int>(i), false});
    for (const double tp : pulses)
        ev.push_back({tp, -1, true});
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });

    std::vector<Event> merged;
    for (const auto& e : ev) {
        if (!merged.empty() && std::abs(e.t - merged.back().t) <= 1e-12 * (1.0 + std::abs(e.t))) {
            if (e.sample_index >= 0)
                merged.back().sample_index = e.sample_index;
            merged.back().pulse = merged.back().pulse || e.pulse;
        } else {
            merged.push_back(e);
        }
    }
    return merged;
}

// worst per-register population of the top Fock level
double truncation_leak(const Eigen::Matrix<cplx, 4, Eigen::Dynamic>& amps, int regs, int d) {
    const long bath_dim = amps.cols();
    double worst = 0.0;
    long stride = bath_dim / d; // register 0 is most significant
    for (int r = 0; r < regs; ++r) {
        double leak = 0.0;
        for (long m = 0; m < bath_dim; ++m)
            if ((m / stride) % d == d - 1)
                leak += amps.col(m).squaredNorm();
        worst = std::max(worst, leak);
        stride /= d;
    }
    return worst;
}

} // namespace

ReducedTrace evolve(const OracleConfig& cfg) {
    const MatrixXcd h = build_hamiltonian(cfg); // validates cfg
    const int d = cfg.fock_dim;
    const int regs = cfg.registers();
    const long dim = cfg.total_dim();
    const long bath_dim = dim / 4;

    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(h);
    if (es.info() != Eigen::Success)
        throw NumericalFailure("oracle: eigendecomposition of H failed");
    const Eigen::VectorXd& energies = es.eigenvalues();
    const MatrixXcd& v = es.eigenvectors();

    VectorXcd psi0 = VectorXcd::Zero(dim);
    psi0(0 * bath_dim + 0) = 1.0 / std::sqrt(2.0); // |11> (x) |vac>
    psi0(3 * bath_dim + 0) = 1.0 / std::sqrt(2.0); // |00> (x) |vac>
    VectorXcd phi = v.adjoint() * psi0;            // eigenbasis amplitudes

    const double t_end = cfg.t_grid.back();
    const auto events = merge_events(cfg.t_grid, cfg.schedule.times_up_to(t_end));

    ReducedTrace out;
    out.samples.reserve(cfg.t_grid.size());

    double t_cur = 0.0;
    for (const auto& e : events) {
        if (e.t > t_cur) {
            const double dt = e.t - t_cur;
            for (long i = 0; i < dim; ++i)
                phi(i) *= std::exp(-1i * (energies(i) * dt));
            t_cur = e.t;
        }
        VectorXcd psi;
        if (e.sample_index >= 0 || e.pulse)
            psi = v * phi;

        if (e.sample_index >= 0) {
            const double norm_dev = std::abs(psi.squaredNorm() - 1.0);
            if (norm_dev > 1e-10)
                throw NumericalFailure("oracle: state norm drifted by " + fmt_g12(norm_dev) +
                                       " at t = " + fmt_g12(e.t));
            Eigen::Map<const Eigen::Matrix<cplx, 4, Eigen::Dynamic, Eigen::RowMajor>> amps_map(
                psi.data(), 4, bath_dim);
            const Eigen::Matrix<cplx, 4, Eigen::Dynamic> amps = amps_map;

            const double leak = truncation_leak(amps, regs, d);
            if (leak >= cfg.leak_threshold)
                throw TruncationOverflow("oracle: top Fock level population " + fmt_g12(leak) +
                                         " at t = " + fmt_g12(e.t) +
                                         " exceeds threshold; raise fock_dim");

            Mat4 red = amps * amps.adjoint();
            red = 0.5 * (red + red.adjoint());
            ReducedSample sample{cfg.omega_p * e.t, DensityMatrix(red), std::abs(red(0, 3)),
                                 0.0, leak};
            sample.concurrence = concurrence(sample.rho);
            out.samples.push_back(std::move(sample));
        }

        if (e.pulse) {
            // X (x) X: swap |11> <-> |00> and |10> <-> |01| amplitude blocks
            for (long m = 0; m < bath_dim; ++m) {
                std::swap(psi(0 * bath_dim + m), psi(3 * bath_dim + m));
                std::swap(psi(1 * bath_dim + m), psi(2 * bath_dim + m));
            }
            phi = v.adjoint() * psi;
        }
    }
    return out;
}

CompareReport compare(const Trace& analytic, const ReducedTrace& oracle, double tolerance) {
    if (analytic.samples.size() != oracle.samples.size())
        throw GridMismatch("compare: trace has " + std::to_string(analytic.samples.size()) +
                           " samples, oracle has " + std::to_string(oracle.samples.size()));
    CompareReport rep;
    rep.tolerance = tolerance;
    rep.n_samples = static_cast<int>(analytic.samples.size());

    bool all_ratios_near_two = !analytic.samples.empty();
    for (std::size_t i = 0; i < analytic.samples.size(); ++i) {
        const double ta = analytic.samples[i].t;
        const double to = oracle.samples[i].t;
        if (std::abs(ta - to) > 1e-9 * (1.0 + std::abs(ta)))
            throw GridMismatch("compare: grids differ at sample " + std::to_string(i) + " (" +
                               fmt_g12(ta) + " vs " + fmt_g12(to) + ")");
        const double ref = analytic.selected_c(i);
        for (const double value : {oracle.samples[i].concurrence,
                                   2.0 * oracle.samples[i].offdiag_mag}) {
            const double abs_err = std::abs(value - ref);
            rep.max_abs_err = std::max(rep.max_abs_err, abs_err);
            rep.max_rel_err = std::max(rep.max_rel_err, abs_err / std::max(std::abs(ref), 1e-300));
        }
        const double ratio = oracle.samples[i].concurrence / std::max(ref, 1e-300);
        if (std::abs(ratio - 2.0) > 0.02)
            all_ratios_near_two = false;
    }
    rep.pass = rep.max_rel_err < tolerance;
    rep.factor_two_suspect = !rep.pass && all_ratios_near_two;
    return rep;
}

void save_reduced_trace_csv(const ReducedTrace& rt, const std::string& path) {
    std::string out =
        "t_scaled,re_rho00,im_rho00,re_rho33,im_rho33,re_rho03,im_rho03,"
        "re_rho12,im_rho12,offdiag_mag,concurrence,truncation_leak\n";
    for (const auto& s : rt.samples) {
        const auto& r = s.rho;
        out += fmt_g12(s.t);
        for (const cplx v : {r(0, 0), r(3, 3), r(0, 3), r(1, 2)})
            out += "," + fmt_g12(v.real()) + "," + fmt_g12(v.imag());
        out += "," + fmt_g12(s.offdiag_mag) + "," + fmt_g12(s.concurrence) + "," +
               fmt_g12(s.truncation_leak) + "\n";
    }
    atomic_write_text(path, out);
}

} // namespace bellpulse
