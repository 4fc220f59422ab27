#include "doctest.h"

#include <cmath>
#include <string>

#include "bellpulse/run_config.hpp"
#include "bellpulse/text_io.hpp"
#include "helpers.hpp"

using namespace bellpulse;

namespace {

std::string write_cfg(const std::string& name, const std::string& body) {
    const auto path = bptest::scratch_path(name);
    atomic_write_text(path, body);
    return path;
}

} // namespace

TEST_CASE("defaults survive an empty config") {
    const auto path = write_cfg("empty.cfg", "# nothing but comments\n\n");
    const auto cfg = parse_config_file(path);
    CHECK(cfg.coupling.shape == Shape::Gaussian);
    CHECK(cfg.coupling.s == 5.0);
    CHECK(cfg.coupling.omega_p == 1.0);
    CHECK(cfg.coupling.gamma_p == 0.1);
    CHECK(cfg.K == 1000);
    CHECK(cfg.support_halfwidth == 6.0);
    CHECK(cfg.N == 0);
    CHECK(cfg.topology == Topology::Common);
    CHECK(cfg.normalization == Normalization::Physical);
    CHECK(cfg.samples == 3001);
    CHECK(!cfg.oracle_enabled);
    CHECK(cfg.fock_dim == 40);
    CHECK(cfg.omega0_scaled == 10.0);
}

TEST_CASE("every documented key parses") {
    const auto path = write_cfg("full.cfg",
                                "coupling.shape = lorentzian\n"
                                "coupling.s = 2.5\n"
                                "coupling.omega_p = 2\n"
                                "coupling.gamma_p = 0.2   # inline comment\n"
                                "discretization.K = 64\n"
                                "discretization.support_halfwidth = 4\n"
                                "schedule.kind = explicit\n"
                                "schedule.times_scaled = 1.0, 2.5, 7\n"
                                "topology = noncommon\n"
                                "normalization = paper_literal\n"
                                "grid.t_max_scaled = 10\n"
                                "grid.samples = 11\n"
                                "oracle.enabled = true\n"
                                "oracle.fock_dim = 12\n"
                                "oracle.heisenberg_J = 0.3\n"
                                "oracle.omega0 = 8\n"
                                "output.path = out.csv\n"
                                "output.format = csv\n"
                                "scan.tau_lo = 0.5\n"
                                "scan.tau_hi = 8\n"
                                "scan.grid_points = 32\n"
                                "scan.metric = min_c\n"
                                "scan.horizon = 25\n"
                                "scan.n_rule = fixed\n"
                                "scan.fixed_N = 3\n");
    const auto cfg = parse_config_file(path);
    CHECK(cfg.coupling.shape == Shape::Lorentzian);
    CHECK(cfg.coupling.s == 2.5);
    CHECK(cfg.coupling.omega_p == 2.0);
    CHECK(cfg.coupling.gamma_p == 0.2);
    CHECK(cfg.K == 64);
    CHECK(cfg.support_halfwidth == 4.0);
    CHECK(cfg.sched_kind == PulseSchedule::Kind::Explicit);
    CHECK(cfg.times_scaled == std::vector<double>{1.0, 2.5, 7.0});
    CHECK(cfg.topology == Topology::NonCommon);
    CHECK(cfg.normalization == Normalization::PaperLiteral);
    CHECK(cfg.t_max_scaled == 10.0);
    CHECK(cfg.samples == 11);
    CHECK(cfg.oracle_enabled);
    CHECK(cfg.fock_dim == 12);
    CHECK(cfg.heisenberg_J_scaled == 0.3);
    CHECK(cfg.omega0_scaled == 8.0);
    CHECK(cfg.out_path == "out.csv");
    CHECK(cfg.scan_tau_lo == 0.5);
    CHECK(cfg.scan_tau_hi == 8.0);
    CHECK(cfg.scan_grid_points == 32);
    CHECK(cfg.scan_metric == Metric::MinC);
    CHECK(cfg.scan_horizon == 25.0);
    CHECK(cfg.scan_n_rule == "fixed");
    CHECK(cfg.scan_fixed_N == 3);
}

TEST_CASE("unknown keys and malformed lines are rejected with their line number") {
    const auto path = write_cfg("bad_key.cfg", "coupling.s = 5\nschedule.dt = 7\n");
    try {
        parse_config_file(path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        const std::string msg = e.what();
        CHECK(msg.find(":2:") != std::string::npos);
        CHECK(msg.find("schedule.dt") != std::string::npos);
    }

    const auto noeq = write_cfg("noeq.cfg", "coupling.s 5\n");
    CHECK_THROWS_AS(parse_config_file(noeq), ConfigError);
    const auto badnum = write_cfg("badnum.cfg", "coupling.s = five\n");
    CHECK_THROWS_AS(parse_config_file(badnum), ConfigError);
    const auto badbool = write_cfg("badbool.cfg", "oracle.enabled = yes\n");
    CHECK_THROWS_AS(parse_config_file(badbool), ConfigError);
    const auto badenum = write_cfg("badenum.cfg", "coupling.shape = square\n");
    CHECK_THROWS_AS(parse_config_file(badenum), ConfigError);
    const auto badint = write_cfg("badint.cfg", "grid.samples = 3.5\n");
    CHECK_THROWS_AS(parse_config_file(badint), ConfigError);
    CHECK_THROWS_AS(parse_config_file(bptest::scratch_path("missing.cfg")), IoError);
}

TEST_CASE("validation failures carry the offending key group") {
    const auto path = write_cfg("bad_val.cfg", "coupling.s = -1\n");
    CHECK_THROWS_AS(parse_config_file(path), ConfigError);
    const auto path2 = write_cfg("bad_val2.cfg", "grid.samples = 1\n");
    CHECK_THROWS_AS(parse_config_file(path2), ConfigError);
    const auto path3 = write_cfg("bad_val3.cfg", "schedule.tau_s_scaled = 0\n");
    CHECK_THROWS_AS(parse_config_file(path3), ConfigError);
}

TEST_CASE("overrides re-validate") {
    const auto path = write_cfg("base.cfg", "coupling.s = 5\n");
    auto cfg = parse_config_file(path);
    apply_override(cfg, "schedule.N = 4");
    CHECK(cfg.N == 4);
    apply_override(cfg, "coupling.gamma_p=0.25");
    CHECK(cfg.coupling.gamma_p == 0.25);
    CHECK_THROWS_AS(apply_override(cfg, "nonsense"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "no.such.key = 1"), ConfigError);
    CHECK_THROWS_AS(apply_override(cfg, "grid.samples = 0"), ConfigError);
}

TEST_CASE("builders convert scaled quantities into absolute units") {
    const auto path = write_cfg("units.cfg",
                                "coupling.omega_p = 2\n"
                                "coupling.gamma_p = 0.1\n"
                                "discretization.K = 1\n"
                                "discretization.support_halfwidth = 0.006\n"
                                "schedule.kind = uniform\n"
                                "schedule.N = 2\n"
                                "schedule.tau_s_scaled = 3.14\n"
                                "grid.t_max_scaled = 8\n"
                                "grid.samples = 5\n"
                                "oracle.enabled = true\n"
                                "oracle.omega0 = 10\n"
                                "oracle.heisenberg_J = 0.3\n");
    const auto cfg = parse_config_file(path);

    // absolute width = gamma_key * omega_p; the single cell sits at omega_p
    const auto ms = make_modes(cfg);
    REQUIRE(ms.size() == 1);
    CHECK(ms.omega[0] == doctest::Approx(2.0).epsilon(1e-12));
    CouplingFunction abs_cf = cfg.coupling;
    abs_cf.gamma_p = 0.2;
    CHECK(ms.h_sq[0] ==
          doctest::Approx(evaluate(abs_cf, 2.0) * 2 * 0.006 * 0.2).epsilon(1e-12));

    const auto sched = make_schedule(cfg);
    CHECK(sched.kind == PulseSchedule::Kind::Uniform);
    CHECK(sched.n_pulses == 2);
    CHECK(sched.tau_s == doctest::Approx(3.14 / 2.0).epsilon(1e-15));

    const auto grid = make_grid(cfg);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == doctest::Approx(8.0 / 2.0).epsilon(1e-15));

    const auto oc = make_oracle_config(cfg, ms);
    CHECK(oc.omega0 == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(oc.heisenberg_J == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(oc.omega_p == 2.0);
    CHECK(oc.t_grid == grid);
}

TEST_CASE("explicit schedules convert their pulse times") {
    const auto path = write_cfg("expl.cfg",
                                "coupling.omega_p = 2\n"
                                "schedule.kind = explicit\n"
                                "schedule.times_scaled = 2, 4, 6\n");
    const auto sched = make_schedule(parse_config_file(path));
    CHECK(sched.kind == PulseSchedule::Kind::Explicit);
    CHECK(sched.times == std::vector<double>{1.0, 2.0, 3.0});
}

TEST_CASE("scan spec builder honours the n rule") {
    const auto path = write_cfg("scan.cfg",
                                "scan.tau_lo = 1\n"
                                "scan.tau_hi = 8\n"
                                "scan.grid_points = 10\n"
                                "scan.metric = c_at_horizon\n"
                                "scan.horizon = 25\n");
    auto cfg = parse_config_file(path);
    auto spec = make_scan_spec(cfg);
    CHECK(spec.fixed_N == -1); // fill-horizon by default
    CHECK(spec.metric == Metric::CAtHorizon);
    CHECK(spec.horizon == 25.0);

    apply_override(cfg, "scan.n_rule = fixed");
    apply_override(cfg, "scan.fixed_N = 5");
    spec = make_scan_spec(cfg);
    CHECK(spec.fixed_N == 5);

    apply_override(cfg, "scan.tau_hi = 0.5"); // below tau_lo
    CHECK_THROWS_AS(make_scan_spec(cfg), ConfigError);
}
