#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coophunt/cli.hpp"

using namespace coophunt;
namespace fs = std::filesystem;

namespace {

const fs::path kConfigDir = COOPHUNT_CONFIG_DIR;

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "coophunt_tests" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
    const fs::path p = dir / "config.json";
    std::ofstream out(p);
    out << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("equilibria command writes the expected rows for the baseline") {
    const auto dir = scratch_dir("equilibria");
    cli::Options opts;
    opts.config_path = kConfigDir / "equilibria_baseline.json";
    opts.out_dir = dir;
    opts.quiet = true;
    REQUIRE(cli::cmd_equilibria(opts) == cli::kOk);

    const std::string csv = slurp(dir / "equilibria.csv");
    CHECK(csv.find("E0,") != std::string::npos);
    CHECK(csv.find("unstable_node") != std::string::npos);
    CHECK(csv.find("E1,") != std::string::npos);
    CHECK(csv.find("E2,") != std::string::npos);
    CHECK(csv.find("interior,") != std::string::npos);
    CHECK(csv.find("stable_focus") != std::string::npos);
    // 4 equilibria -> 5 lines including the header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    // LF endings, '.' decimals, no thousands separators.
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.find(',') != std::string::npos);
    CHECK(fs::exists(dir / "manifest.json"));
    CHECK_FALSE(fs::exists(dir / "FAILED"));
}

TEST_CASE("equilibria command with alpha = 0 keeps the same structure") {
    const auto dir = scratch_dir("equilibria_a0");
    cli::Options opts;
    opts.config_path = write_config(
        dir, R"({"model": {"c":0.05,"m":0.08,"s":0.05,"gamma":0.08,"beta":0.01,"alpha":0.0}})");
    opts.out_dir = dir / "out";
    opts.quiet = true;
    REQUIRE(cli::cmd_equilibria(opts) == cli::kOk);
    const std::string csv = slurp(dir / "out" / "equilibria.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("E2 reported stable when m*gamma^2 < c*beta*(gamma+alpha*beta)") {
    const auto dir = scratch_dir("equilibria_stable_e2");
    cli::Options opts;
    opts.config_path = write_config(
        dir, R"({"model": {"c":1.0,"m":0.08,"s":0.05,"gamma":0.08,"beta":0.01,"alpha":0.04}})");
    opts.out_dir = dir / "out";
    opts.quiet = true;
    REQUIRE(cli::cmd_equilibria(opts) == cli::kOk);
    const std::string csv = slurp(dir / "out" / "equilibria.csv");
    // The E2 row carries a stable_node classification.
    const auto pos = csv.find("E2,");
    REQUIRE(pos != std::string::npos);
    CHECK(csv.find("stable_node", pos) != std::string::npos);
}

TEST_CASE("schema violations are reported with the field path") {
    const auto dir = scratch_dir("schema");
    cli::Options opts;
    opts.out_dir = dir / "out";
    opts.quiet = true;

    opts.config_path = write_config(dir, R"({"model": {"c": -1.0}})");
    CHECK(cli::cmd_equilibria(opts) == cli::kConfigError);
    CHECK(fs::exists(dir / "out" / "FAILED"));
    CHECK(slurp(dir / "out" / "FAILED").find("config.model.c") != std::string::npos);

    opts.config_path = write_config(dir, R"({"model": {"c": "nope"}})");
    CHECK(cli::cmd_equilibria(opts) == cli::kConfigError);

    opts.config_path = dir / "missing.json";
    CHECK(cli::cmd_equilibria(opts) == cli::kConfigError);
}

TEST_CASE("dispersion command matches the library call") {
    const auto dir = scratch_dir("dispersion");
    cli::Options opts;
    opts.config_path = kConfigDir / "dispersion_local.json";
    opts.out_dir = dir;
    opts.quiet = true;
    REQUIRE(cli::cmd_dispersion(opts) == cli::kOk);
    const std::string csv = slurp(dir / "dispersion.csv");
    CHECK(csv.rfind("k,re_lambda_max,im_lambda_at_max,", 0) == 0);
    CHECK(csv.find(",1\n") != std::string::npos);  // has unstable modes at d1 = 0.01
}

TEST_CASE("simulate and wave-speed configs parse through the public helpers") {
    const std::string sim_text = slurp(kConfigDir / "fig6a.json");
    const SimConfig sc = cli::parse_sim_config(sim_text);
    CHECK(sc.grid.n == 2048);
    CHECK(sc.t_end == 3000.0);
    CHECK(std::holds_alternative<NoiseIc>(sc.ic));

    const std::string wave_text = slurp(kConfigDir / "wave_pred_local.json");
    const cli::WaveSpeedSpec spec = cli::parse_wave_speed_config(wave_text);
    CHECK(spec.fit_lo == 400.0);
    CHECK(spec.fit_hi == 900.0);
    CHECK(spec.field == FieldSelect::U);
    const auto& st = std::get<StepIc>(spec.sim.ic);
    CHECK(st.outer.u == 1.0);
    CHECK(st.outer.v == 0.0);
    CHECK(std::fabs(st.inner.u - 0.443) < 1e-3);

    // Seed override lands in the resolved config.
    const SimConfig seeded = cli::parse_sim_config(sim_text, 999);
    CHECK(std::get<NoiseIc>(seeded.ic).seed == 999);
}

TEST_CASE("simulate command writes snapshots, classification, and manifest") {
    const auto dir = scratch_dir("simulate");
    cli::Options opts;
    opts.config_path = write_config(dir, R"({
        "model": {"c":0.05,"m":0.08,"s":0.05,"gamma":0.08,"beta":0.01,"alpha":0.04},
        "spatial": {"d1": 1.0, "d2": 10.0, "delta": 0.0},
        "grid": {"L": 100.0, "n": 256},
        "dt": 0.01, "t_end": 40.0, "snapshot_stride": 10,
        "ic": {"type": "noise", "epsilon": 1e-5, "seed": 7}})");
    opts.out_dir = dir / "out";
    opts.quiet = true;
    REQUIRE(cli::cmd_simulate(opts) == cli::kOk);
    CHECK(fs::exists(dir / "out" / "snapshots" / "snap_000000.csv"));
    CHECK(fs::exists(dir / "out" / "classification.csv"));
    const std::string manifest = slurp(dir / "out" / "manifest.json");
    CHECK(manifest.find("\"seed\": 7") != std::string::npos);
    CHECK(manifest.find("snap_000000.csv") != std::string::npos);

    const std::string snap = slurp(dir / "out" / "snapshots" / "snap_000000.csv");
    CHECK(snap.rfind("x,u,v\n", 0) == 0);
}

TEST_CASE("identical config and seed give byte-identical CSV artifacts") {
    const std::string cfg = R"({
        "model": {"c":0.05,"m":0.08,"s":0.05,"gamma":0.08,"beta":0.01,"alpha":0.04},
        "spatial": {"d1": 0.01, "d2": 10.0, "delta": 0.0},
        "grid": {"L": 100.0, "n": 256},
        "dt": 0.01, "t_end": 20.0, "snapshot_stride": 50,
        "ic": {"type": "noise", "epsilon": 1e-5, "seed": 31}})";
    const auto dir = scratch_dir("repro");
    cli::Options opts;
    opts.config_path = write_config(dir, cfg);
    opts.quiet = true;
    opts.out_dir = dir / "a";
    REQUIRE(cli::cmd_simulate(opts) == cli::kOk);
    opts.out_dir = dir / "b";
    REQUIRE(cli::cmd_simulate(opts) == cli::kOk);
    for (const auto& entry : fs::directory_iterator(dir / "a" / "snapshots")) {
        const auto name = entry.path().filename();
        CHECK(slurp(entry.path()) == slurp(dir / "b" / "snapshots" / name));
    }
    CHECK(slurp(dir / "a" / "classification.csv") == slurp(dir / "b" / "classification.csv"));
}

TEST_CASE("turing-curve command emits the curve with worker parallelism") {
    const auto dir = scratch_dir("turing_curve");
    cli::Options opts;
    opts.config_path = write_config(dir, R"({
        "model": {"c":0.05,"m":0.08,"s":0.05,"gamma":0.08,"beta":0.01,"alpha":0.04},
        "d2": 10.0, "delta": 0.0,
        "alpha": {"range": [0.03, 0.05], "points": 5}})");
    opts.out_dir = dir / "out";
    opts.workers = 4;
    opts.quiet = true;
    REQUIRE(cli::cmd_turing_curve(opts) == cli::kOk);
    const std::string csv = slurp(dir / "out" / "turing_curve.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv.rfind("alpha,d1c,", 0) == 0);
}
