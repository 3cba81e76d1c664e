#ifndef WSNSIM_EXPERIMENT_HPP
#define WSNSIM_EXPERIMENT_HPP

#include "wsnsim/config_io.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/model.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wsnsim {

/// One experiment: the (protocol x seed) grid run on a base config.
/// Presets 1-4 fix the base-station mode and energy heterogeneity:
///   1 static+homogeneous, 2 static+half_doubled,
///   3 orbit+homogeneous,  4 orbit+half_doubled.
struct ExperimentSpec {
    std::optional<int> preset;
    std::vector<Protocol> protocols{Protocol::Leach, Protocol::Eleach, Protocol::Proposed};
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    NetworkConfig base;
    std::filesystem::path output_dir;
};

/// Applies preset number 1-4 to a config. Throws ConfigError on any
/// other number.
void apply_preset(NetworkConfig& cfg, int preset);

/// "exp<N>" for presets, "custom" otherwise; prefixes all output files.
std::string experiment_tag(const ExperimentSpec& spec);

/// Trace file name for one run; a pure function of (tag, protocol,
/// seed) so parallel runs can never collide.
std::string trace_filename(const std::string& tag, Protocol protocol, std::uint64_t seed);

struct RunResult {
    Protocol protocol = Protocol::Leach;
    std::uint64_t seed = 0;
    LifetimeReport report;
};

struct ExperimentResult {
    std::string tag;
    std::vector<RunResult> runs; // (protocol, seed) in spec order
    std::map<Protocol, AggregateSummary> by_protocol;
};

/// Runs the full grid, writing one trace CSV per run plus
/// `<tag>_summary.csv` with columns
/// protocol,bs_mode,energy_mode,seed,first_death,half_dead,pct70_dead,rounds
/// and printing a milestone comparison table to `log`.
ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream& log);

} // namespace wsnsim

#endif
