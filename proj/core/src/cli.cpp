#include "coophunt/cli.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "coophunt/bifurcation.hpp"
#include "coophunt/csv.hpp"

namespace coophunt::cli {

using nlohmann::json;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not found: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config parse error in " + path.string() + ": " + e.what());
    }
    return j;
}

const json& member(const json& obj, const std::string& path, const char* key,
                   bool required) {
    static const json null_json;
    if (!obj.is_object())
        throw ConfigError(path + ": expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) {
        if (required) throw ConfigError(path + "." + key + ": missing required field");
        return null_json;
    }
    return *it;
}

double get_num(const json& obj, const std::string& path, const char* key, double def,
               double lo = -1e300, double hi = 1e300) {
    const json& v = member(obj, path, key, false);
    if (v.is_null()) return def;
    if (!v.is_number()) throw ConfigError(path + "." + key + ": expected a number");
    const double x = v.get<double>();
    if (!(x >= lo && x <= hi))
        throw ConfigError(path + "." + key + ": value " + format_double(x) +
                          " outside [" + format_double(lo) + ", " + format_double(hi) + "]");
    return x;
}

std::int64_t get_int(const json& obj, const std::string& path, const char* key,
                     std::int64_t def, std::int64_t lo, std::int64_t hi) {
    const json& v = member(obj, path, key, false);
    if (v.is_null()) return def;
    if (!v.is_number_integer()) throw ConfigError(path + "." + key + ": expected an integer");
    const std::int64_t x = v.get<std::int64_t>();
    if (!(x >= lo && x <= hi))
        throw ConfigError(path + "." + key + ": value out of range");
    return x;
}

std::string get_str(const json& obj, const std::string& path, const char* key,
                    const std::string& def) {
    const json& v = member(obj, path, key, false);
    if (v.is_null()) return def;
    if (!v.is_string()) throw ConfigError(path + "." + key + ": expected a string");
    return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool def) {
    const json& v = member(obj, path, key, false);
    if (v.is_null()) return def;
    if (!v.is_boolean()) throw ConfigError(path + "." + key + ": expected a boolean");
    return v.get<bool>();
}

std::pair<double, double> get_range(const json& obj, const std::string& path,
                                    const char* key) {
    const json& v = member(obj, path, key, true);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw ConfigError(path + "." + key + ": expected [lo, hi]");
    const double lo = v[0].get<double>(), hi = v[1].get<double>();
    if (!(lo < hi)) throw ConfigError(path + "." + key + ": lo must be < hi");
    return {lo, hi};
}

ModelParams parse_model(const json& root) {
    const json& m = member(root, "config", "model", false);
    const ModelParams base = baseline_params();
    ModelParams p;
    const std::string path = "config.model";
    p.c = get_num(m.is_null() ? json::object() : m, path, "c", base.c, 1e-12);
    p.m = get_num(m.is_null() ? json::object() : m, path, "m", base.m, 1e-12);
    p.s = get_num(m.is_null() ? json::object() : m, path, "s", base.s, 1e-12);
    p.gamma = get_num(m.is_null() ? json::object() : m, path, "gamma", base.gamma, 1e-12);
    p.beta = get_num(m.is_null() ? json::object() : m, path, "beta", base.beta, 1e-12);
    p.alpha = get_num(m.is_null() ? json::object() : m, path, "alpha", base.alpha, 0.0);
    p.validate();
    return p;
}

SpatialParams parse_spatial(const json& root) {
    const json& sjson = member(root, "config", "spatial", false);
    SpatialParams sp;
    const json src = sjson.is_null() ? json::object() : sjson;
    sp.d1 = get_num(src, "config.spatial", "d1", 1.0, 1e-12);
    sp.d2 = get_num(src, "config.spatial", "d2", 10.0, 1e-12);
    sp.delta = get_num(src, "config.spatial", "delta", 0.0, 0.0);
    sp.validate();
    return sp;
}

Grid1D parse_grid(const json& root, double default_L, int default_n) {
    const json& gjson = member(root, "config", "grid", false);
    const json src = gjson.is_null() ? json::object() : gjson;
    Grid1D g;
    g.half_length = get_num(src, "config.grid", "L", default_L, 1e-6);
    g.n = static_cast<int>(get_int(src, "config.grid", "n", default_n, 64, 1 << 24));
    g.validate();
    return g;
}

State2 parse_state(const json& v, const std::string& path, const ModelParams& p) {
    if (v.is_string()) {
        const std::string name = v.get<std::string>();
        if (name == "E0") return {0.0, 0.0};
        if (name == "E1") return {1.0, 0.0};
        if (name == "E2") return {0.0, p.beta / p.gamma};
        if (name == "interior") return unique_interior_equilibrium(p).point;
        throw ConfigError(path + ": unknown state name '" + name +
                          "' (use E0, E1, E2, interior, or [u, v])");
    }
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    throw ConfigError(path + ": expected a state name or [u, v]");
}

json state_json(const State2& s) { return json::array({s.u, s.v}); }

ScanParameter parse_scan_parameter(const std::string& name, const std::string& path) {
    if (name == "alpha") return ScanParameter::Alpha;
    if (name == "gamma") return ScanParameter::Gamma;
    if (name == "c") return ScanParameter::C;
    throw ConfigError(path + ": parameter must be alpha, gamma, or c");
}

json model_json(const ModelParams& p) {
    return {{"c", p.c},       {"m", p.m},       {"s", p.s},
            {"gamma", p.gamma}, {"beta", p.beta}, {"alpha", p.alpha}};
}

json spatial_json(const SpatialParams& sp) {
    return {{"d1", sp.d1}, {"d2", sp.d2}, {"delta", sp.delta}};
}

void write_manifest(const std::filesystem::path& dir, const char* command,
                    const json& resolved) {
    const auto now = std::chrono::system_clock::now();
    const std::time_t tt = std::chrono::system_clock::to_time_t(now);
    char stamp[64];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    json manifest = {{"version", kVersion},
                     {"command", command},
                     {"timestamp", stamp},
                     {"config", resolved}};
    write_atomic(dir / "manifest.json", manifest.dump(2) + "\n");
}

int run_command(const Options& opts, const char* name,
                const std::function<void(const json&)>& body) {
    std::error_code ec;
    std::filesystem::create_directories(opts.out_dir, ec);
    if (ec) {
        std::fprintf(stderr, "%s: cannot create output directory %s\n", name,
                     opts.out_dir.string().c_str());
        return kIoError;
    }
    const auto failed_marker = opts.out_dir / "FAILED";
    std::filesystem::remove(failed_marker, ec);
    try {
        const json cfg = load_json(opts.config_path);
        body(cfg);
        return kOk;
    } catch (const ConfigError& e) {
        write_atomic(failed_marker, std::string(e.what()) + "\n");
        if (!opts.quiet) std::fprintf(stderr, "%s: config error: %s\n", name, e.what());
        return kConfigError;
    } catch (const std::filesystem::filesystem_error& e) {
        if (!opts.quiet) std::fprintf(stderr, "%s: io error: %s\n", name, e.what());
        return kIoError;
    } catch (const std::exception& e) {
        write_atomic(failed_marker, std::string(e.what()) + "\n");
        if (!opts.quiet) std::fprintf(stderr, "%s: %s\n", name, e.what());
        return kNumericError;
    }
}

SimConfig parse_sim(const json& cfg, std::optional<std::uint64_t> seed_override,
                    json* resolved_out) {
    SimConfig sc;
    sc.model = parse_model(cfg);
    sc.spatial = parse_spatial(cfg);
    sc.grid = parse_grid(cfg, 100.0, 2048);
    sc.dt = get_num(cfg, "config", "dt", 0.01, 1e-9, 10.0);
    sc.t_end = get_num(cfg, "config", "t_end", 3000.0, 1e-9);
    sc.snapshot_stride =
        static_cast<int>(get_int(cfg, "config", "snapshot_stride", 1000, 1, 1 << 30));
    sc.quench_floor = get_num(cfg, "config", "quench_floor", 0.0, 0.0, 1e-3);

    json ic_resolved;
    const json& ic = member(cfg, "config", "ic", false);
    const std::string type =
        ic.is_null() ? "noise" : get_str(ic, "config.ic", "type", "noise");
    if (type == "noise") {
        NoiseIc n;
        if (!ic.is_null()) {
            n.epsilon = get_num(ic, "config.ic", "epsilon", 1e-5, 0.0, 1.0);
            n.seed = static_cast<std::uint64_t>(
                get_int(ic, "config.ic", "seed", 0, 0, std::numeric_limits<std::int64_t>::max()));
        }
        if (seed_override) n.seed = *seed_override;
        ic_resolved = {{"type", "noise"}, {"epsilon", n.epsilon}, {"seed", n.seed}};
        sc.ic = n;
    } else if (type == "step") {
        StepIc st;
        st.inner = parse_state(member(ic, "config.ic", "inner", true), "config.ic.inner",
                               sc.model);
        st.outer = parse_state(member(ic, "config.ic", "outer", true), "config.ic.outer",
                               sc.model);
        st.L1 = get_num(ic, "config.ic", "L1", 100.0, 1e-9);
        st.smooth_width = get_num(ic, "config.ic", "smooth_width", -1.0);
        ic_resolved = {{"type", "step"},
                       {"inner", state_json(st.inner)},
                       {"outer", state_json(st.outer)},
                       {"L1", st.L1},
                       {"smooth_width",
                        st.smooth_width < 0 ? 2.0 * sc.grid.dx() : st.smooth_width}};
        sc.ic = st;
    } else {
        throw ConfigError("config.ic.type: must be 'noise' or 'step'");
    }
    try {
        sc.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }

    if (resolved_out) {
        *resolved_out = {{"model", model_json(sc.model)},
                         {"spatial", spatial_json(sc.spatial)},
                         {"grid", {{"L", sc.grid.half_length}, {"n", sc.grid.n}}},
                         {"dt", sc.dt},
                         {"t_end", sc.t_end},
                         {"snapshot_stride", sc.snapshot_stride},
                         {"quench_floor", sc.quench_floor},
                         {"ic", ic_resolved}};
    }
    return sc;
}

WaveSpeedSpec parse_wave(const json& cfg, std::optional<std::uint64_t> seed_override,
                         json* resolved_out) {
    WaveSpeedSpec spec;
    spec.sim = parse_sim(cfg, seed_override, resolved_out);

    const json& tr = member(cfg, "config", "track", false);
    const json trj = tr.is_null() ? json::object() : tr;
    const std::string field = get_str(trj, "config.track", "field", "u");
    if (field != "u" && field != "v")
        throw ConfigError("config.track.field: must be 'u' or 'v'");
    spec.field = field == "u" ? FieldSelect::U : FieldSelect::V;
    const std::string side = get_str(trj, "config.track", "side", "right");
    if (side != "left" && side != "right")
        throw ConfigError("config.track.side: must be 'left' or 'right'");
    spec.side = side == "right" ? Side::Right : Side::Left;
    if (!member(trj, "config.track", "level", false).is_null())
        spec.level = get_num(trj, "config.track", "level", 0.0);

    const auto win = get_range(cfg, "config", "fit_window");
    spec.fit_lo = win.first;
    spec.fit_hi = win.second;
    if (!std::holds_alternative<StepIc>(spec.sim.ic))
        throw ConfigError("config.ic: wave-speed runs require a step initial condition");
    return spec;
}

}  // namespace

SimConfig parse_sim_config(const std::string& json_text,
                           std::optional<std::uint64_t> seed_override) {
    json cfg;
    try {
        cfg = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    return parse_sim(cfg, seed_override, nullptr);
}

WaveSpeedSpec parse_wave_speed_config(const std::string& json_text,
                                      std::optional<std::uint64_t> seed_override) {
    json cfg;
    try {
        cfg = json::parse(json_text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config parse error: ") + e.what());
    }
    return parse_wave(cfg, seed_override, nullptr);
}

int cmd_equilibria(const Options& opts) {
    return run_command(opts, "equilibria", [&](const json& cfg) {
        const ModelParams p = parse_model(cfg);
        std::string csv = "kind,u,v,stability,re_lambda1,im_lambda1,re_lambda2,im_lambda2\n";
        auto row = [&csv](const EquilibriumReport& r) {
            csv += to_string(r.kind);
            csv += ',' + format_double(r.point.u) + ',' + format_double(r.point.v) + ',';
            csv += to_string(r.stability);
            csv += ',' + format_double(r.eigenvalues.first.real()) + ',' +
                   format_double(r.eigenvalues.first.imag()) + ',' +
                   format_double(r.eigenvalues.second.real()) + ',' +
                   format_double(r.eigenvalues.second.imag()) + '\n';
        };
        for (const auto& r : boundary_equilibria(p)) row(r);
        const auto inter = interior_equilibria(p);
        for (const auto& r : inter.points) row(r);
        write_atomic(opts.out_dir / "equilibria.csv", csv);
        json resolved = {{"model", model_json(p)},
                         {"degenerate_root", inter.degenerate}};
        write_manifest(opts.out_dir, "equilibria", resolved);
    });
}

int cmd_bifurcate(const Options& opts) {
    return run_command(opts, "bifurcate", [&](const json& cfg) {
        const ModelParams p = parse_model(cfg);
        const json& scan = member(cfg, "config", "scan", true);
        const std::string pname = get_str(scan, "config.scan", "parameter", "alpha");
        const ScanParameter which = parse_scan_parameter(pname, "config.scan.parameter");
        const auto range = get_range(scan, "config.scan", "range");
        const int n = static_cast<int>(get_int(scan, "config.scan", "points", 100, 10, 100000));

        BranchOptions bopts;
        bopts.workers = opts.workers;
        bopts.attach_cycles = get_bool(cfg, "config", "cycles", true);
        const BranchDiagram diag = branch_diagram(p, which, range, n, bopts);
        write_atomic(opts.out_dir / "branch.csv", diag.to_csv());

        // Threshold hunt over the scanned range: transcritical closed forms,
        // Hopf points from sign changes of D1 on the interior branch, and
        // saddle-node loci from interior-root-count changes (alpha scans).
        std::vector<ThresholdResult> thresholds;
        if (which != ScanParameter::Alpha) {
            try {
                const auto tc = transcritical_threshold(p, which);
                if (tc.value > range.first && tc.value < range.second)
                    thresholds.push_back(tc);
            } catch (const std::exception&) {
            }
        }
        const int coarse = std::max(n, 200);
        double prev_val = 0.0;
        bool have_prev = false;
        double prev_d1 = 0.0;
        for (int i = 0; i < coarse; ++i) {
            const double val = range.first + (range.second - range.first) * i / (coarse - 1);
            double d1v;
            try {
                const auto eq = unique_interior_equilibrium(with_parameter(p, which, val));
                d1v = -eq.jacobian.trace();
            } catch (const std::exception&) {
                have_prev = false;
                continue;
            }
            if (have_prev && (prev_d1 < 0.0) != (d1v < 0.0)) {
                try {
                    thresholds.push_back(hopf_threshold(p, which, {prev_val, val}));
                } catch (const std::exception&) {
                }
            }
            prev_val = val;
            prev_d1 = d1v;
            have_prev = true;
        }
        if (which == ScanParameter::Alpha) {
            const auto sn = saddle_node_scan(p, range, coarse);
            thresholds.insert(thresholds.end(), sn.begin(), sn.end());
        }
        std::sort(thresholds.begin(), thresholds.end(),
                  [](const ThresholdResult& a, const ThresholdResult& b) {
                      return a.value < b.value;
                  });

        std::string tcsv = "parameter,value,kind,residual\n";
        for (const auto& th : thresholds) {
            tcsv += to_string(th.parameter);
            tcsv += ',' + format_double(th.value) + ',';
            tcsv += th.kind == ThresholdKind::Hopf           ? "hopf"
                    : th.kind == ThresholdKind::Transcritical ? "transcritical"
                                                              : "saddle_node";
            tcsv += ',' + format_double(th.residual) + '\n';
        }
        write_atomic(opts.out_dir / "thresholds.csv", tcsv);
        for (const auto& w : diag.warnings)
            if (!opts.quiet) std::fprintf(stderr, "bifurcate: %s\n", w.c_str());

        json resolved = {{"model", model_json(p)},
                         {"scan", {{"parameter", pname}, {"range", {range.first, range.second}},
                                   {"points", n}}}};
        write_manifest(opts.out_dir, "bifurcate", resolved);
    });
}

int cmd_dispersion(const Options& opts) {
    return run_command(opts, "dispersion", [&](const json& cfg) {
        const ModelParams p = parse_model(cfg);
        const SpatialParams sp = parse_spatial(cfg);
        const json& kj = member(cfg, "config", "k", false);
        const json ksrc = kj.is_null() ? json::object() : kj;
        const double kmax = get_num(ksrc, "config.k", "max", 2.0, 1e-9);
        const int npts = static_cast<int>(get_int(ksrc, "config.k", "points", 400, 2, 1000000));
        std::vector<double> grid(npts);
        for (int i = 0; i < npts; ++i) grid[i] = kmax * i / (npts - 1);

        const DispersionCurve curve = sp.delta > 0.0 ? nonlocal_dispersion(p, sp, grid)
                                                     : local_dispersion(p, sp, grid);
        write_atomic(opts.out_dir / "dispersion.csv", curve.to_csv());
        json resolved = {{"model", model_json(p)},
                         {"spatial", spatial_json(sp)},
                         {"k", {{"max", kmax}, {"points", npts}}},
                         {"max_re_lambda", curve.max_re},
                         {"k_at_max", curve.k_at_max}};
        write_manifest(opts.out_dir, "dispersion", resolved);
    });
}

int cmd_turing_curve(const Options& opts) {
    return run_command(opts, "turing-curve", [&](const json& cfg) {
        const ModelParams p = parse_model(cfg);
        const double d2 = get_num(cfg, "config", "d2", 10.0, 1e-12);
        const double delta = get_num(cfg, "config", "delta", 0.0, 0.0);
        const json& aj = member(cfg, "config", "alpha", true);
        const auto range = get_range(aj, "config.alpha", "range");
        const int n = static_cast<int>(get_int(aj, "config.alpha", "points", 50, 2, 100000));

        const auto pts = turing_curve(p, d2, delta, range, n, opts.workers);
        std::string csv = "alpha,d1c,k_critical,oscillatory,ok,error\n";
        for (const auto& q : pts) {
            csv += format_double(q.alpha) + ',';
            csv += q.ok ? format_double(q.d1_critical) : "";
            csv += ',';
            csv += q.ok ? format_double(q.k_critical) : "";
            csv += ',';
            csv += q.oscillatory ? "1" : "0";
            csv += ',';
            csv += q.ok ? "1" : "0";
            csv += ',' + q.error + '\n';
        }
        write_atomic(opts.out_dir / "turing_curve.csv", csv);
        json resolved = {{"model", model_json(p)},
                         {"d2", d2},
                         {"delta", delta},
                         {"alpha", {{"range", {range.first, range.second}}, {"points", n}}}};
        write_manifest(opts.out_dir, "turing-curve", resolved);
    });
}

namespace {

std::string snapshot_csv(const FieldState& s, const Grid1D& grid) {
    std::string out = "x,u,v\n";
    char buf[96];
    for (int i = 0; i < grid.n; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.x(i), s.u[i], s.v[i]);
        out += buf;
    }
    return out;
}

}  // namespace

int cmd_simulate(const Options& opts) {
    return run_command(opts, "simulate", [&](const json& cfg) {
        json resolved;
        const SimConfig sc = parse_sim(cfg, opts.seed_override, &resolved);
        const auto snap_dir = opts.out_dir / "snapshots";
        std::filesystem::create_directories(snap_dir);

        json index = json::array();
        int count = 0;
        const auto result = simulate(sc, [&](const FieldState& s) {
            char name[48];
            std::snprintf(name, sizeof name, "snap_%06d.csv", count);
            write_atomic(snap_dir / name, snapshot_csv(s, sc.grid));
            index.push_back({{"file", std::string("snapshots/") + name}, {"t", s.time}});
            ++count;
        });

        std::string ccsv = "label,spatial_variance,temporal_variance,clamp_count\n";
        json class_json;
        if (result.snapshots.size() >= 80) {
            const auto rep = classify_pattern(result.snapshots);
            ccsv += std::string(to_string(rep.label)) + ',' +
                    format_double(rep.spatial_variance) + ',' +
                    format_double(rep.temporal_variance) + ',' +
                    std::to_string(result.clamp_count) + '\n';
            class_json = {{"label", to_string(rep.label)},
                          {"V_x", rep.spatial_variance},
                          {"V_t", rep.temporal_variance}};
        } else {
            ccsv += ",,," + std::to_string(result.clamp_count) + '\n';
        }
        write_atomic(opts.out_dir / "classification.csv", ccsv);

        resolved["snapshots"] = index;
        resolved["clamp_count"] = result.clamp_count;
        if (!class_json.is_null()) resolved["classification"] = class_json;
        write_manifest(opts.out_dir, "simulate", resolved);
    });
}

int cmd_wave_speed(const Options& opts) {
    return run_command(opts, "wave-speed", [&](const json& cfg) {
        json resolved;
        const WaveSpeedSpec spec = parse_wave(cfg, opts.seed_override, &resolved);
        const SimConfig& sc = spec.sim;
        const auto& st = std::get<StepIc>(sc.ic);
        const double level = spec.level
                                 ? *spec.level
                                 : 0.5 * ((spec.field == FieldSelect::U)
                                              ? st.inner.u + st.outer.u
                                              : st.inner.v + st.outer.v);

        const auto result = simulate(sc);
        const double margin =
            sc.spatial.delta > 0.0 ? 5.0 * sc.spatial.delta : 5.0 * sc.grid.dx();
        const FrontTrack track = track_front(result.snapshots, sc.grid, spec.field, level,
                                             spec.side, margin);
        write_atomic(opts.out_dir / "track.csv", track.to_csv());

        const SpeedEstimate est = estimate_speed(track, spec.fit_lo, spec.fit_hi);

        // Analytic minimum for fronts leaving a recognized boundary state.
        std::string analytic = "";
        const double vfree = sc.model.beta / sc.model.gamma;
        auto near = [](const State2& a, const State2& b) {
            return std::fabs(a.u - b.u) < 1e-9 && std::fabs(a.v - b.v) < 1e-9;
        };
        try {
            if (near(st.outer, {1.0, 0.0}))
                analytic = format_double(
                    wavespeed_boundary(sc.model, sc.spatial, WaveTarget::PredatorFreeFront)
                        .speed_min);
            else if (near(st.outer, {0.0, vfree}))
                analytic = format_double(
                    wavespeed_boundary(sc.model, sc.spatial, WaveTarget::PreyFreeFront)
                        .speed_min);
        } catch (const std::exception&) {
        }

        std::string csv =
            "speed,rms_residual,samples,contaminated,window_lo,window_hi,level,analytic_min\n";
        csv += format_double(est.speed) + ',' + format_double(est.rms_residual) + ',' +
               std::to_string(est.samples) + ',' + (est.boundary_contaminated ? "1" : "0") +
               ',' + format_double(spec.fit_lo) + ',' + format_double(spec.fit_hi) + ',' +
               format_double(level) + ',' + analytic + '\n';
        write_atomic(opts.out_dir / "speed.csv", csv);

        resolved["track"] = {{"field", spec.field == FieldSelect::U ? "u" : "v"},
                             {"side", spec.side == Side::Right ? "right" : "left"},
                             {"level", level}};
        resolved["fit_window"] = {spec.fit_lo, spec.fit_hi};
        resolved["speed"] = est.speed;
        write_manifest(opts.out_dir, "wave-speed", resolved);
    });
}

}  // namespace coophunt::cli
