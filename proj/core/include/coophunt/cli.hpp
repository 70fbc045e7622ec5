#ifndef COOPHUNT_CLI_HPP
#define COOPHUNT_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "coophunt/pde.hpp"
#include "coophunt/wave.hpp"

namespace coophunt::cli {

inline constexpr const char* kVersion = "coophunt 0.1.0";

// Exit codes by failure category.
inline constexpr int kOk = 0;
inline constexpr int kConfigError = 2;
inline constexpr int kNumericError = 3;
inline constexpr int kIoError = 4;

struct Options {
    std::filesystem::path config_path;
    std::filesystem::path out_dir;
    int workers = 0;  // 0 = hardware concurrency
    std::optional<std::uint64_t> seed_override;
    bool quiet = false;
};

/// Parsed, defaults-resolved simulation block ("model", "spatial", "grid",
/// "dt", "t_end", ... ). Exposed so tests and the acceptance suite can run
/// the checked-in config files through the same schema path as the CLI.
SimConfig parse_sim_config(const std::string& json_text,
                           std::optional<std::uint64_t> seed_override = {});

struct WaveSpeedSpec {
    SimConfig sim;
    FieldSelect field = FieldSelect::U;
    Side side = Side::Right;
    std::optional<double> level;  // empty = midpoint of inner/outer values
    double fit_lo = 0.0, fit_hi = 0.0;
};

WaveSpeedSpec parse_wave_speed_config(const std::string& json_text,
                                      std::optional<std::uint64_t> seed_override = {});

// Each command reads its config file, writes its artifacts plus a manifest
// into out_dir, and returns an exit code. On failure a FAILED marker file
// carries the reason.
int cmd_equilibria(const Options& opts);
int cmd_bifurcate(const Options& opts);
int cmd_dispersion(const Options& opts);
int cmd_turing_curve(const Options& opts);
int cmd_simulate(const Options& opts);
int cmd_wave_speed(const Options& opts);

}  // namespace coophunt::cli

#endif
