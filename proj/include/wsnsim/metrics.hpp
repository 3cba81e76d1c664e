#ifndef WSNSIM_METRICS_HPP
#define WSNSIM_METRICS_HPP

#include "wsnsim/engine.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

namespace wsnsim {

/// Lifetime milestones counted against the original node count: the
/// round of the first death, and the first rounds at which cumulative
/// deaths reach ceil(50%) and ceil(70%) of N. A milestone the trace
/// never reaches stays empty.
struct LifetimeReport {
    std::optional<std::uint64_t> first_death_round;
    std::optional<std::uint64_t> half_dead_round;
    std::optional<std::uint64_t> pct70_dead_round;
    std::uint64_t rounds_simulated = 0;
    std::vector<std::pair<std::uint64_t, int>> alive_curve;
    std::vector<std::pair<std::uint64_t, double>> energy_curve;
};

/// Throws on an empty trace.
LifetimeReport summarize(const SimulationTrace& trace);

/// Emits `round,alive,total_energy_j,heads,deaths,bs_x,bs_y` plus one
/// row per round, floats printed with 9 decimal places. Returns the
/// byte count written. The path overload reports the destination in
/// any failure message.
std::size_t write_trace_csv(const SimulationTrace& trace, std::ostream& out);
std::size_t write_trace_csv(const SimulationTrace& trace, const std::filesystem::path& dest);

/// Moments of one milestone across several runs; reports that never
/// reached the milestone are excluded from the moments and counted in
/// `missing`.
struct MilestoneStats {
    std::size_t count = 0;
    std::size_t missing = 0;
    double mean = 0.0;
    double median = 0.0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
};

struct AggregateSummary {
    MilestoneStats first_death;
    MilestoneStats half_dead;
    MilestoneStats pct70_dead;
};

/// Throws on an empty input.
AggregateSummary aggregate(const std::vector<LifetimeReport>& reports);

} // namespace wsnsim

#endif
