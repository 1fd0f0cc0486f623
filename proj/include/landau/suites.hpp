#pragma once

// Named check suites behind the CLI: each suite runs a fixed, deterministic
// list of checks against the symbolic engine and the numerical oracles and
// renders a machine-readable report. Identical configs produce byte-identical
// reports: iteration orders are fixed and nothing time- or host-dependent
// enters the report body.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "landau/classical.hpp"
#include "landau/eigenfamilies.hpp"
#include "landau/gauge.hpp"
#include "landau/grid.hpp"
#include "landau/params.hpp"

namespace landau::suites {

using nlohmann::json;
using nlohmann::ordered_json;

/// Configuration/usage problems; the CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Check {
    std::string name;
    double value;
    double bound;
    bool pass;
};

struct Report {
    std::string suite;
    PhysicalParams params;
    std::vector<Check> checks;
    ordered_json details = ordered_json::object();
    std::vector<std::string> outputs;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    ordered_json to_json() const {
        ordered_json j;
        j["suite"] = suite;
        j["params"] = {{"m", params.m},
                       {"q", params.q},
                       {"B", params.B},
                       {"c", params.c},
                       {"hbar", params.hbar}};
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks)
            arr.push_back(ordered_json{
                {"name", c.name}, {"value", c.value}, {"bound", c.bound}, {"pass", c.pass}});
        j["checks"] = std::move(arr);
        if (!details.empty()) j["details"] = details;
        if (!outputs.empty()) j["outputs"] = outputs;
        std::size_t failed = 0;
        for (const auto& c : checks)
            if (!c.pass) ++failed;
        j["summary"] = {{"total", checks.size()},
                        {"passed", checks.size() - failed},
                        {"failed", failed},
                        {"pass", failed == 0}};
        return j;
    }
};

struct RunConfig {
    std::string suite;
    PhysicalParams params{};
    json options = json::object();
    std::map<std::string, double> tol_overrides;
    std::string out_dir;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "eigencheck", "commutators", "ladder",       "resum",       "phase",
        "flux",       "classical",   "gauge-compare", "grid-export", "classical-export"};
    return names;
}

namespace detail {

inline std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline void check_keys(const json& j, const std::set<std::string>& allowed) {
    if (!j.is_object()) throw ConfigError("config: expected a JSON object");
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw ConfigError("config: unknown key '" + k + "'");
}

inline double num_or(const json& j, const std::string& key, double def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number()) throw ConfigError("config: '" + key + "' must be a number");
    return j.at(key).get<double>();
}

inline long int_or(const json& j, const std::string& key, long def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_number_integer())
        throw ConfigError("config: '" + key + "' must be an integer");
    return j.at(key).get<long>();
}

inline std::vector<double> list_or(const json& j, const std::string& key,
                                   std::vector<double> def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_array()) throw ConfigError("config: '" + key + "' must be an array");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) throw ConfigError("config: '" + key + "' entries must be numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

inline std::string str_or(const json& j, const std::string& key, std::string def) {
    if (!j.contains(key)) return def;
    if (!j.at(key).is_string()) throw ConfigError("config: '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

inline GaugeId parse_gauge(const std::string& s) {
    if (s == "landau") return GaugeId::landau;
    if (s == "symmetric") return GaugeId::symmetric;
    throw ConfigError("config: gauge must be 'landau' or 'symmetric'");
}

inline Branch parse_branch(const std::string& s) {
    if (s == "first") return Branch::first;
    if (s == "second") return Branch::second;
    throw ConfigError("config: branch must be 'first' or 'second'");
}

inline const char* gauge_name(GaugeId g) { return g == GaugeId::landau ? "landau" : "symmetric"; }

inline std::string family_name(FamilyId f) {
    return std::string(gauge_name(f.gauge)) + (f.branch == Branch::first ? "-first" : "-second");
}

// Overrides may only tighten the defaults; loosening a bound would let a
// regression pass silently.
class Tolerances {
public:
    Tolerances(const std::map<std::string, double>& overrides,
               const std::map<std::string, double>& defaults)
        : defaults_(defaults) {
        for (const auto& [name, value] : overrides) {
            auto it = defaults_.find(name);
            if (it == defaults_.end())
                throw ConfigError("tolerance: unknown name '" + name + "'");
            if (!(value > 0.0)) throw ConfigError("tolerance: '" + name + "' must be positive");
            if (value > it->second)
                throw ConfigError("tolerance: '" + name + "' may only tighten the default " +
                                  fmt_g(it->second));
            it->second = value;
        }
    }
    double operator()(const std::string& name) const { return defaults_.at(name); }

private:
    std::map<std::string, double> defaults_;
};

inline constexpr FamilyId kAllFamilies[] = {landau_first, landau_second, symmetric_first,
                                            symmetric_second};

inline void push(std::vector<Check>& checks, std::string name, double value, double bound) {
    checks.push_back({std::move(name), value, bound, value <= bound});
}

// ---- suite bodies ---------------------------------------------------------

inline Report run_eigencheck(const RunConfig& cfg) {
    check_keys(cfg.options, {"n_max", "lam"});
    const Tolerances tol(cfg.tol_overrides, {{"residual", 1e-10}, {"factor", 1e-12}});
    const long n_max = int_or(cfg.options, "n_max", 10);
    const auto lams = list_or(cfg.options, "lam", {-3.2, 0.0, 1.0, 7.5});
    if (n_max < 0) throw ConfigError("config: n_max must be >= 0");

    Report rep{.suite = "eigencheck", .params = cfg.params};
    for (FamilyId fam : kAllFamilies) {
        const auto h = hamiltonian(fam.gauge, cfg.params);
        const auto inv = defining_invariant(fam, cfg.params);
        for (long n = 0; n <= n_max; ++n)
            for (double lam : lams) {
                const auto psi = eigenfunction(fam, static_cast<unsigned>(n), lam, cfg.params);
                const std::string base = "eigencheck/" + family_name(fam) + "/n=" +
                                         std::to_string(n) + "/lam=" + fmt_g(lam);
                push(rep.checks, base + "/residual",
                     gp_residual(h, landau_level(n, cfg.params), psi), tol("residual"));
                const auto c =
                    gp_is_multiple(op_apply(inv, psi), psi, std::max(tol("factor"), 1e-13));
                const double err =
                    c ? std::abs(*c - Complex(invariant_eigenvalue(fam, lam))) : 1.0;
                push(rep.checks, base + "/invariant-factor", err, tol("factor"));
            }
    }
    return rep;
}

inline Report run_commutators(const RunConfig& cfg) {
    check_keys(cfg.options, {});
    const Tolerances tol(cfg.tol_overrides, {{"coeff", 1e-12}});
    const PhysicalParams& p = cfg.params;

    Report rep{.suite = "commutators", .params = p};
    const auto id = PolyDiffOperator::identity();
    for (GaugeId g : {GaugeId::landau, GaugeId::symmetric}) {
        const auto h = hamiltonian(g, p);
        const auto [pi1, pi2] = invariant_pair(g, p);
        const std::string base = std::string("commutators/") + gauge_name(g);
        push(rep.checks, base + "/[pi1,H]", op_commutator(pi1, h).max_abs_coeff(), tol("coeff"));
        push(rep.checks, base + "/[pi2,H]", op_commutator(pi2, h).max_abs_coeff(), tol("coeff"));
        push(rep.checks, base + "/[H,H]", op_commutator(h, h).max_abs_coeff(), tol("coeff"));
        const Complex central(0.0, -p.hbar * p.m * cyclotron_frequency(p));
        push(rep.checks, base + "/[pi1,pi2]+i*hbar*m*w",
             (op_commutator(pi1, pi2) - central * id).max_abs_coeff(), tol("coeff"));
    }
    const auto x = PolyDiffOperator::position_x();
    const auto px = PolyDiffOperator::momentum_x(p.hbar);
    const auto py = PolyDiffOperator::momentum_y(p.hbar);
    push(rep.checks, "commutators/[x,px]-i*hbar",
         (op_commutator(x, px) - Complex(0.0, p.hbar) * id).max_abs_coeff(), tol("coeff"));
    push(rep.checks, "commutators/[px,py]", op_commutator(px, py).max_abs_coeff(), tol("coeff"));
    return rep;
}

inline Report run_ladder(const RunConfig& cfg) {
    check_keys(cfg.options, {"n_max", "j_max", "lam"});
    const Tolerances tol(cfg.tol_overrides, {{"residual", 1e-10}});
    const long n_max = int_or(cfg.options, "n_max", 3);
    const long j_max = int_or(cfg.options, "j_max", 5);
    const auto lams = list_or(cfg.options, "lam", {0.0, 1.0});
    if (n_max < 0 || j_max < 0) throw ConfigError("config: n_max/j_max must be >= 0");

    Report rep{.suite = "ladder", .params = cfg.params};
    for (FamilyId fam : kAllFamilies) {
        const auto h = hamiltonian(fam.gauge, cfg.params);
        for (long n = 0; n <= n_max; ++n)
            for (double lam : lams)
                for (long j = 0; j <= j_max; ++j) {
                    const auto psi = ladder_state(fam, static_cast<unsigned>(n),
                                                  static_cast<unsigned>(j), lam, cfg.params);
                    push(rep.checks,
                         "ladder/" + family_name(fam) + "/n=" + std::to_string(n) +
                             "/lam=" + fmt_g(lam) + "/j=" + std::to_string(j),
                         gp_residual(h, landau_level(n, cfg.params), psi), tol("residual"));
                }
    }
    return rep;
}

inline Report run_resum(const RunConfig& cfg) {
    check_keys(cfg.options, {"gauge", "branch", "n", "lam", "j_max", "box", "nodes"});
    const Tolerances tol(cfg.tol_overrides, {{"distance", 1e-6}});
    const FamilyId fam{parse_gauge(str_or(cfg.options, "gauge", "landau")),
                       parse_branch(str_or(cfg.options, "branch", "first"))};
    const long n = int_or(cfg.options, "n", 0);
    const double lam = num_or(cfg.options, "lam", 1.0);
    const long j_max = int_or(cfg.options, "j_max", 40);
    const double half = num_or(cfg.options, "box", 10.0);
    const long nodes = int_or(cfg.options, "nodes", 257);
    if (n < 0 || j_max < 10) throw ConfigError("config: need n >= 0 and j_max >= 10");
    if (nodes < 8) throw ConfigError("config: nodes must be >= 8");

    const Grid2D box{-half, half, -half, half, static_cast<std::size_t>(nodes),
                     static_cast<std::size_t>(nodes)};
    const auto target =
        apply_displacement(displacement(fam.gauge, fam.branch, lam, cfg.params),
                           eigenfunction(fam, static_cast<unsigned>(n), 0.0, cfg.params));

    Report rep{.suite = "resum", .params = cfg.params};
    std::vector<double> distances;
    for (long j = 10; j <= j_max; ++j)
        distances.push_back(l2_distance(
            resum_displaced(fam, static_cast<unsigned>(n), lam, static_cast<unsigned>(j),
                            cfg.params),
            target, box));

    push(rep.checks, "resum/distance@j_max=" + std::to_string(j_max), distances.back(),
         tol("distance"));
    double worst_rise = 0.0;
    for (std::size_t i = 1; i < distances.size(); ++i)
        worst_rise = std::max(worst_rise, distances[i] - distances[i - 1]);
    push(rep.checks, "resum/monotone-beyond-10", worst_rise, 0.0);

    ordered_json dist = ordered_json::array();
    for (double d : distances) dist.push_back(d);
    rep.details["distances_from_j=10"] = std::move(dist);
    return rep;
}

inline Report run_phase(const RunConfig& cfg) {
    check_keys(cfg.options, {"lam1", "lam2", "n"});
    const Tolerances tol(cfg.tol_overrides, {{"phase", 1e-12}, {"flux", 1e-9}});
    const double sqrt2pi = std::sqrt(2.0 * M_PI);
    const double l1 = num_or(cfg.options, "lam1", sqrt2pi);
    const double l2 = num_or(cfg.options, "lam2", sqrt2pi);
    const long n = int_or(cfg.options, "n", 1);
    if (n < 0) throw ConfigError("config: n must be >= 0");
    const PhysicalParams& p = cfg.params;

    Report rep{.suite = "phase", .params = p};
    const Complex predicted = flux_phase(l1, l2, p);

    const auto psi1 = eigenfunction(landau_first, static_cast<unsigned>(n), l1, p);
    const auto m1 =
        apply_displacement(displacement(GaugeId::landau, Branch::second, l2, p), psi1);
    const auto c1 = gp_is_multiple(m1, psi1, 1e-10);
    push(rep.checks, "phase/U2-on-first-vs-exp(+i*l1*l2/m*w*hbar)",
         c1 ? std::abs(*c1 - predicted) : 1.0, tol("phase"));
    push(rep.checks, "phase/modulus", c1 ? std::abs(std::abs(*c1) - 1.0) : 1.0, tol("phase"));

    const auto psi2 = eigenfunction(landau_second, static_cast<unsigned>(n), l2, p);
    const auto m2 = apply_displacement(displacement(GaugeId::landau, Branch::first, l1, p), psi2);
    const auto c2 = gp_is_multiple(m2, psi2, 1e-10);
    push(rep.checks, "phase/U1-on-second-vs-exp(-i*l1*l2/m*w*hbar)",
         c2 ? std::abs(*c2 - std::conj(predicted)) : 1.0, tol("phase"));

    rep.details["phase"] = {{"re", predicted.real()}, {"im", predicted.imag()}};
    const auto k = is_flux_quantized(l1, l2, p, tol("flux"));
    rep.details["quantized_k"] = k ? ordered_json(*k) : ordered_json(nullptr);
    return rep;
}

inline Report run_flux(const RunConfig& cfg) {
    check_keys(cfg.options, {"k_range", "lam1", "l1", "hall_k_max"});
    const Tolerances tol(cfg.tol_overrides, {{"flux", 1e-9}, {"hall", 1e-12}});
    const long k_range = int_or(cfg.options, "k_range", 3);
    const double lam1 = num_or(cfg.options, "lam1", 1.7);
    const double l1 = num_or(cfg.options, "l1", 1.3);
    const long hall_k_max = int_or(cfg.options, "hall_k_max", 5);
    if (k_range < 0 || hall_k_max < 1) throw ConfigError("config: bad k ranges");
    const PhysicalParams& p = cfg.params;
    const double mwh = p.m * cyclotron_frequency(p) * p.hbar;

    Report rep{.suite = "flux", .params = p};
    for (long k = -k_range; k <= k_range; ++k) {
        const double lam2 = 2.0 * M_PI * static_cast<double>(k) * mwh / lam1;
        const auto got = is_flux_quantized(lam1, lam2, p, tol("flux"));
        push(rep.checks, "flux/quantized/k=" + std::to_string(k),
             (got && *got == k) ? 0.0 : 1.0, 0.5);

        const double mid = 2.0 * M_PI * (static_cast<double>(k) + 0.5) * mwh / lam1;
        const auto none = is_flux_quantized(lam1, mid, p, tol("flux"));
        push(rep.checks, "flux/midpoint-rejected/k=" + std::to_string(k) + "+1/2",
             none ? 1.0 : 0.0, 0.5);
    }
    for (long k = 1; k <= hall_k_max; ++k) {
        const double l2 = 2.0 * M_PI * static_cast<double>(k) * p.hbar /
                          (p.m * cyclotron_frequency(p) * l1);
        const double expected = 2.0 * M_PI * static_cast<double>(k) * p.hbar / (p.q * p.q);
        const double rel =
            std::abs(hall_resistivity(p, l1, l2) - expected) / std::abs(expected);
        push(rep.checks, "flux/hall/k=" + std::to_string(k), rel, tol("hall"));
    }
    return rep;
}

inline Report run_classical(const RunConfig& cfg) {
    check_keys(cfg.options, {"periods", "steps_per_period", "x", "y", "vx", "vy"});
    const Tolerances tol(cfg.tol_overrides, {{"drift", 1e-8}, {"radius", 1e-6}});
    const long periods = int_or(cfg.options, "periods", 10);
    const long spp = int_or(cfg.options, "steps_per_period", 1000);
    const double x0 = num_or(cfg.options, "x", 0.0), y0 = num_or(cfg.options, "y", 0.0);
    const double vx = num_or(cfg.options, "vx", 0.0), vy = num_or(cfg.options, "vy", 1.0);
    if (periods < 1 || spp < 16) throw ConfigError("config: bad periods/steps_per_period");
    const PhysicalParams& p = cfg.params;

    const double w = std::abs(cyclotron_frequency(p));
    const double dt = 2.0 * M_PI / w / static_cast<double>(spp);
    const double speed = std::hypot(vx, vy);

    Report rep{.suite = "classical", .params = p};
    for (GaugeId g : {GaugeId::landau, GaugeId::symmetric}) {
        const auto s0 = state_from_velocity(g, x0, y0, vx, vy, p);
        const auto traj =
            rk4_integrate(g, s0, dt, static_cast<std::size_t>(periods * spp), p);
        const auto ref = invariants_eval(g, s0, p);
        double drift = 0.0;
        for (const auto& s : traj) {
            const auto cur = invariants_eval(g, s, p);
            for (int i = 0; i < 3; ++i) {
                const double d = std::abs(cur[i] - ref[i]);
                drift = std::max(drift, ref[i] != 0.0 ? d / std::abs(ref[i]) : d * 1e2);
            }
        }
        const std::string base = std::string("classical/") + gauge_name(g);
        push(rep.checks, base + "/invariant-drift", drift, tol("drift"));
        push(rep.checks, base + "/radius-vs-v/w",
             std::abs(orbit_radius_estimate(traj) - speed / w), tol("radius"));
    }
    return rep;
}

inline Report run_gauge_compare(const RunConfig& cfg) {
    check_keys(cfg.options, {"n_max", "periods", "steps_per_period"});
    const Tolerances tol(cfg.tol_overrides, {{"residual", 1e-10}, {"trajectory", 1e-8}});
    const long n_max = int_or(cfg.options, "n_max", 5);
    const long periods = int_or(cfg.options, "periods", 2);
    const long spp = int_or(cfg.options, "steps_per_period", 1000);
    if (n_max < 0 || periods < 1 || spp < 16) throw ConfigError("config: bad options");
    const PhysicalParams& p = cfg.params;

    Report rep{.suite = "gauge-compare", .params = p};
    const auto hs = hamiltonian(GaugeId::symmetric, p);
    for (Branch b : {Branch::first, Branch::second})
        for (long n = 0; n <= n_max; ++n)
            for (double lam : {0.0, 1.0}) {
                const auto psi =
                    eigenfunction({GaugeId::landau, b}, static_cast<unsigned>(n), lam, p);
                push(rep.checks,
                     "gauge-compare/L-to-S/" +
                         family_name({GaugeId::landau, b}) + "/n=" + std::to_string(n) +
                         "/lam=" + fmt_g(lam),
                     gp_residual(hs, landau_level(n, p), gauge_transform_L_to_S(psi, p)),
                     tol("residual"));
            }

    const double dt = 2.0 * M_PI / std::abs(cyclotron_frequency(p)) / static_cast<double>(spp);
    const auto sl = state_from_velocity(GaugeId::landau, 0.2, 1.1, 0.6, -0.8, p);
    const auto ss = state_from_velocity(GaugeId::symmetric, 0.2, 1.1, 0.6, -0.8, p);
    const auto tl =
        rk4_integrate(GaugeId::landau, sl, dt, static_cast<std::size_t>(periods * spp), p);
    const auto ts =
        rk4_integrate(GaugeId::symmetric, ss, dt, static_cast<std::size_t>(periods * spp), p);
    double worst = 0.0;
    for (std::size_t i = 0; i < tl.size(); ++i)
        worst = std::max({worst, std::abs(tl[i].x - ts[i].x), std::abs(tl[i].y - ts[i].y)});
    push(rep.checks, "gauge-compare/matched-velocity-trajectories", worst, tol("trajectory"));
    return rep;
}

inline Report run_grid_export(const RunConfig& cfg) {
    check_keys(cfg.options, {"gauge", "branch", "n", "lam", "box", "nodes", "file"});
    const Tolerances tol(cfg.tol_overrides, {});
    (void)tol;
    if (cfg.out_dir.empty()) throw ConfigError("grid-export: an output directory is required");
    const FamilyId fam{parse_gauge(str_or(cfg.options, "gauge", "landau")),
                       parse_branch(str_or(cfg.options, "branch", "first"))};
    const long n = int_or(cfg.options, "n", 0);
    const double lam = num_or(cfg.options, "lam", 0.0);
    const long nodes = int_or(cfg.options, "nodes", 256);
    if (n < 0 || nodes < 8) throw ConfigError("config: bad n/nodes");
    const double half = num_or(cfg.options, "box", 0.0);
    const std::string file = str_or(cfg.options, "file", "field.csv");

    const Grid2D grid =
        half > 0.0 ? Grid2D{-half, half, -half, half, static_cast<std::size_t>(nodes),
                            static_cast<std::size_t>(nodes)}
                   : make_verification_grid(lam, cfg.params, static_cast<std::size_t>(nodes));
    const auto field =
        sample(eigenfunction(fam, static_cast<unsigned>(n), lam, cfg.params), grid);

    const std::filesystem::path path = std::filesystem::path(cfg.out_dir) / file;
    std::filesystem::create_directories(path.parent_path());
    {
        std::ofstream out(path);
        if (!out) throw ConfigError("grid-export: cannot write " + path.string());
        write_field_csv(out, field);
    }

    Report rep{.suite = "grid-export", .params = cfg.params};
    std::ifstream in(path);
    const GridField back = read_field_csv(in);
    double worst = back.grid() == field.grid() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < field.values().size() && worst == 0.0; ++i)
        if (back.values()[i] != field.values()[i]) worst = 1.0;
    push(rep.checks, "grid-export/reimport-bit-exact", worst, 0.0);
    rep.outputs.push_back(path.string());
    rep.details["rows"] = field.values().size();
    return rep;
}

inline Report run_classical_export(const RunConfig& cfg) {
    check_keys(cfg.options, {"gauge", "x", "y", "vx", "vy", "dt", "steps", "file"});
    const Tolerances tol(cfg.tol_overrides, {});
    (void)tol;
    if (cfg.out_dir.empty()) throw ConfigError("classical-export: an output directory is required");
    const GaugeId g = parse_gauge(str_or(cfg.options, "gauge", "landau"));
    const double x0 = num_or(cfg.options, "x", 0.0), y0 = num_or(cfg.options, "y", 0.0);
    const double vx = num_or(cfg.options, "vx", 0.0), vy = num_or(cfg.options, "vy", 1.0);
    const double dt = num_or(cfg.options, "dt", 2.0 * M_PI / 1000.0);
    const long steps = int_or(cfg.options, "steps", 1000);
    if (!(dt > 0.0) || steps < 1) throw ConfigError("config: bad dt/steps");
    const std::string file = str_or(cfg.options, "file", "trajectory.csv");

    const auto traj = rk4_integrate(g, state_from_velocity(g, x0, y0, vx, vy, cfg.params), dt,
                                    static_cast<std::size_t>(steps), cfg.params);

    const std::filesystem::path path = std::filesystem::path(cfg.out_dir) / file;
    std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError("classical-export: cannot write " + path.string());
    write_trajectory_csv(out, g, traj, cfg.params);

    Report rep{.suite = "classical-export", .params = cfg.params};
    push(rep.checks, "classical-export/rows",
         std::abs(static_cast<double>(traj.size()) - static_cast<double>(steps + 1)), 0.0);
    rep.outputs.push_back(path.string());
    return rep;
}

}  // namespace detail

/// Runs the named suite; throws ConfigError on malformed configuration
/// before any output file is created.
inline Report run_suite(const RunConfig& cfg) {
    cfg.params.validate();
    if (cfg.suite == "eigencheck") return detail::run_eigencheck(cfg);
    if (cfg.suite == "commutators") return detail::run_commutators(cfg);
    if (cfg.suite == "ladder") return detail::run_ladder(cfg);
    if (cfg.suite == "resum") return detail::run_resum(cfg);
    if (cfg.suite == "phase") return detail::run_phase(cfg);
    if (cfg.suite == "flux") return detail::run_flux(cfg);
    if (cfg.suite == "classical") return detail::run_classical(cfg);
    if (cfg.suite == "gauge-compare") return detail::run_gauge_compare(cfg);
    if (cfg.suite == "grid-export") return detail::run_grid_export(cfg);
    if (cfg.suite == "classical-export") return detail::run_classical_export(cfg);
    throw ConfigError("unknown suite '" + cfg.suite + "'");
}

}  // namespace landau::suites
