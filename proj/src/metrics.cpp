#include "wsnsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace wsnsim {

LifetimeReport summarize(const SimulationTrace& trace) {
    if (trace.rounds.empty()) {
        throw std::invalid_argument("summarize: empty trace");
    }
    const int n = trace.config.node_count;
    const int half_need = static_cast<int>(std::ceil(0.5 * n));
    const int pct70_need = static_cast<int>(std::ceil(0.7 * n));

    LifetimeReport report;
    report.rounds_simulated = trace.rounds.size();
    report.alive_curve.reserve(trace.rounds.size());
    report.energy_curve.reserve(trace.rounds.size());
    for (const RoundOutcome& round : trace.rounds) {
        report.alive_curve.emplace_back(round.round_index, round.alive_after);
        report.energy_curve.emplace_back(round.round_index, round.total_energy_after);
        const int dead = n - round.alive_after;
        if (dead >= 1 && !report.first_death_round) {
            report.first_death_round = round.round_index;
        }
        if (dead >= half_need && !report.half_dead_round) {
            report.half_dead_round = round.round_index;
        }
        if (dead >= pct70_need && !report.pct70_dead_round) {
            report.pct70_dead_round = round.round_index;
        }
    }
    return report;
}

std::size_t write_trace_csv(const SimulationTrace& trace, std::ostream& out) {
    if (trace.rounds.empty()) {
        throw std::invalid_argument("write_trace_csv: empty trace");
    }
    std::size_t bytes = 0;
    auto emit = [&](const std::string& line) {
        out << line;
        bytes += line.size();
    };
    emit("round,alive,total_energy_j,heads,deaths,bs_x,bs_y\n");
    char row[256];
    for (const RoundOutcome& round : trace.rounds) {
        std::snprintf(row, sizeof(row), "%llu,%d,%.9f,%zu,%zu,%.9f,%.9f\n",
                      static_cast<unsigned long long>(round.round_index), round.alive_after,
                      round.total_energy_after, round.heads.size(), round.deaths.size(),
                      round.bs_pos.x, round.bs_pos.y);
        emit(row);
    }
    if (!out) {
        throw std::runtime_error("write_trace_csv: stream write failed");
    }
    return bytes;
}

std::size_t write_trace_csv(const SimulationTrace& trace, const std::filesystem::path& dest) {
    std::ofstream out(dest, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_trace_csv: cannot open " + dest.string());
    }
    const std::size_t bytes = write_trace_csv(trace, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write_trace_csv: write failed for " + dest.string());
    }
    return bytes;
}

namespace {

MilestoneStats milestone_stats(std::vector<std::uint64_t> values, std::size_t missing) {
    MilestoneStats stats;
    stats.missing = missing;
    stats.count = values.size();
    if (values.empty()) {
        return stats;
    }
    std::sort(values.begin(), values.end());
    stats.min = values.front();
    stats.max = values.back();
    double sum = 0.0;
    for (std::uint64_t v : values) {
        sum += static_cast<double>(v);
    }
    stats.mean = sum / static_cast<double>(values.size());
    const std::size_t mid = values.size() / 2;
    stats.median = values.size() % 2 == 1
                       ? static_cast<double>(values[mid])
                       : (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
    return stats;
}

} // namespace

AggregateSummary aggregate(const std::vector<LifetimeReport>& reports) {
    if (reports.empty()) {
        throw std::invalid_argument("aggregate: no reports");
    }
    AggregateSummary summary;
    auto collect = [&](auto member) {
        std::vector<std::uint64_t> values;
        std::size_t missing = 0;
        for (const LifetimeReport& report : reports) {
            const auto& milestone = report.*member;
            if (milestone) {
                values.push_back(*milestone);
            } else {
                ++missing;
            }
        }
        return milestone_stats(std::move(values), missing);
    };
    summary.first_death = collect(&LifetimeReport::first_death_round);
    summary.half_dead = collect(&LifetimeReport::half_dead_round);
    summary.pct70_dead = collect(&LifetimeReport::pct70_dead_round);
    return summary;
}

} // namespace wsnsim
