#include "bellpulse/run_config.hpp"

#include <functional>
#include <map>

#include "bellpulse/text_io.hpp"

namespace bellpulse {

namespace {

int to_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "': cannot parse '" + value + "' as an integer");
    }
}

double to_double(const std::string& key, const std::string& value) {
    try {
        return parse_double(value, key);
    } catch (const IoError& e) {
        throw ConfigError(std::string("key '") + key + "': " + e.what());
    }
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    throw ConfigError("key '" + key + "': expected true|false, got '" + value + "'");
}

std::vector<double> to_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& tok : split_trimmed(value, ','))
        if (!tok.empty())
            out.push_back(to_double(key, tok));
    return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"coupling.shape",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             try {
                 c.coupling.shape = shape_from_string(v);
             } catch (const DomainError& e) {
                 throw ConfigError(std::string("key '") + k + "': " + e.what());
             }
         }},
        {"coupling.s",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.coupling.s = to_double(k, v);
         }},
        {"coupling.omega_p",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.coupling.omega_p = to_double(k, v);
         }},
        {"coupling.gamma_p",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.coupling.gamma_p = to_double(k, v);
         }},
        {"discretization.K",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.K = to_int(k, v);
         }},
        {"discretization.support_halfwidth",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.support_halfwidth = to_double(k, v);
         }},
        {"schedule.kind",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v == "uniform")
                 c.sched_kind = PulseSchedule::Kind::Uniform;
             else if (v == "explicit")
                 c.sched_kind = PulseSchedule::Kind::Explicit;
             else
                 throw ConfigError("key '" + k + "': expected uniform|explicit, got '" + v + "'");
         }},
        {"schedule.N",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.N = to_int(k, v);
         }},
        {"schedule.tau_s_scaled",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.tau_s_scaled = to_double(k, v);
         }},
        {"schedule.times_scaled",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.times_scaled = to_double_list(k, v);
         }},
        {"topology",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             try {
                 c.topology = topology_from_string(v);
             } catch (const DomainError& e) {
                 throw ConfigError(std::string("key '") + k + "': " + e.what());
             }
         }},
        {"normalization",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             try {
                 c.normalization = normalization_from_string(v);
             } catch (const DomainError& e) {
                 throw ConfigError(std::string("key '") + k + "': " + e.what());
             }
         }},
        {"grid.t_max_scaled",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.t_max_scaled = to_double(k, v);
         }},
        {"grid.samples",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.samples = to_int(k, v);
         }},
        {"oracle.enabled",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.oracle_enabled = to_bool(k, v);
         }},
        {"oracle.fock_dim",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.fock_dim = to_int(k, v);
         }},
        {"oracle.heisenberg_J",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.heisenberg_J_scaled = to_double(k, v);
         }},
        {"oracle.omega0",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.omega0_scaled = to_double(k, v);
         }},
        {"output.path",
         [](RunConfig& c, const std::string&, const std::string& v) { c.out_path = v; }},
        {"output.format",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "csv" && v != "json")
                 throw ConfigError("key '" + k + "': expected csv|json, got '" + v + "'");
             c.out_format = v;
         }},
        {"scan.tau_lo",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.scan_tau_lo = to_double(k, v);
         }},
        {"scan.tau_hi",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.scan_tau_hi = to_double(k, v);
         }},
        {"scan.grid_points",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.scan_grid_points = to_int(k, v);
         }},
        {"scan.metric",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             try {
                 c.scan_metric = metric_from_string(v);
             } catch (const DomainError& e) {
                 throw ConfigError(std::string("key '") + k + "': " + e.what());
             }
         }},
        {"scan.horizon",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.scan_horizon = to_double(k, v);
         }},
        {"scan.n_rule",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             if (v != "fill_horizon" && v != "fixed")
                 throw ConfigError("key '" + k + "': expected fill_horizon|fixed, got '" + v +
                                   "'");
             c.scan_n_rule = v;
         }},
        {"scan.fixed_N",
         [](RunConfig& c, const std::string& k, const std::string& v) {
             c.scan_fixed_N = to_int(k, v);
         }},
    };
    return table;
}

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    const auto it = setters().find(key);
    if (it == setters().end())
        throw ConfigError("unknown key '" + key + "'");
    it->second(cfg, key, value);
}

} // namespace

void RunConfig::validate() const {
    try {
        coupling.validate();
    } catch (const DomainError& e) {
        throw ConfigError(std::string("coupling: ") + e.what());
    }
    if (K < 1)
        throw ConfigError("discretization.K must be >= 1");
    if (!(support_halfwidth > 0.0))
        throw ConfigError("discretization.support_halfwidth must be > 0");
    if (N < 0)
        throw ConfigError("schedule.N must be >= 0");
    if (sched_kind == PulseSchedule::Kind::Uniform && !(tau_s_scaled > 0.0))
        throw ConfigError("schedule.tau_s_scaled must be > 0");
    if (!(t_max_scaled >= 0.0))
        throw ConfigError("grid.t_max_scaled must be >= 0");
    if (samples < 2)
        throw ConfigError("grid.samples must be >= 2");
    if (fock_dim < 2)
        throw ConfigError("oracle.fock_dim must be >= 2");
}

RunConfig parse_config_file(const std::string& path) {
    RunConfig cfg;
    const auto lines = split_lines(read_text_file(path));
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto hash = lines[i].find('#');
        const std::string line =
            trim(hash == std::string::npos ? lines[i] : lines[i].substr(0, hash));
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(i + 1) +
                              ": expected 'key = value', got '" + line + "'");
        try {
            apply_key_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ConfigError& e) {
            throw ConfigError(path + ":" + std::to_string(i + 1) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override '" + assignment + "': expected key=value");
    apply_key_value(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
    cfg.validate();
}

ModeSet make_modes(const RunConfig& cfg) {
    // config gamma_p is in units of omega_p
    CouplingFunction cf = cfg.coupling;
    cf.gamma_p = cfg.coupling.gamma_p * cfg.coupling.omega_p;
    try {
        return discretize(cf, cfg.K, cfg.support_halfwidth);
    } catch (const Error& e) {
        throw ConfigError(std::string("coupling/discretization: ") + e.what());
    }
}

PulseSchedule make_schedule(const RunConfig& cfg) {
    const double wp = cfg.coupling.omega_p;
    try {
        if (cfg.sched_kind == PulseSchedule::Kind::Uniform)
            return PulseSchedule::uniform(cfg.N, cfg.tau_s_scaled / wp);
        std::vector<double> abs_times;
        abs_times.reserve(cfg.times_scaled.size());
        for (const double t : cfg.times_scaled)
            abs_times.push_back(t / wp);
        return PulseSchedule::at_times(std::move(abs_times));
    } catch (const Error& e) {
        throw ConfigError(std::string("schedule: ") + e.what());
    }
}

std::vector<double> make_grid(const RunConfig& cfg) {
    const double wp = cfg.coupling.omega_p;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(cfg.samples));
    for (int j = 0; j < cfg.samples; ++j)
        grid.push_back(cfg.t_max_scaled * j / (cfg.samples - 1) / wp);
    return grid;
}

OracleConfig make_oracle_config(const RunConfig& cfg, const ModeSet& modes) {
    const double wp = cfg.coupling.omega_p;
    OracleConfig oc;
    oc.modes = modes;
    oc.fock_dim = cfg.fock_dim;
    oc.schedule = make_schedule(cfg);
    oc.t_grid = make_grid(cfg);
    oc.topology = cfg.topology;
    oc.heisenberg_J = cfg.heisenberg_J_scaled * wp;
    oc.omega0 = cfg.omega0_scaled * wp;
    oc.omega_p = wp;
    try {
        oc.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("oracle: ") + e.what());
    }
    return oc;
}

ScanSpec make_scan_spec(const RunConfig& cfg) {
    ScanSpec spec;
    spec.tau_lo = cfg.scan_tau_lo;
    spec.tau_hi = cfg.scan_tau_hi;
    spec.grid_points = cfg.scan_grid_points;
    spec.metric = cfg.scan_metric;
    spec.horizon = cfg.scan_horizon;
    spec.fixed_N = (cfg.scan_n_rule == "fixed") ? cfg.scan_fixed_N : -1;
    spec.omega_p = cfg.coupling.omega_p;
    try {
        spec.validate();
    } catch (const Error& e) {
        throw ConfigError(std::string("scan: ") + e.what());
    }
    return spec;
}

} // namespace bellpulse
