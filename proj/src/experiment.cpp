#include "wsnsim/experiment.hpp"

#include "wsnsim/engine.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>

namespace wsnsim {

void apply_preset(NetworkConfig& cfg, int preset) {
    switch (preset) {
    case 1:
        cfg.bs.mode = BsMotion::Mode::Static;
        cfg.heterogeneity = Heterogeneity::Homogeneous;
        break;
    case 2:
        cfg.bs.mode = BsMotion::Mode::Static;
        cfg.heterogeneity = Heterogeneity::HalfDoubled;
        break;
    case 3:
        cfg.bs.mode = BsMotion::Mode::Orbit;
        cfg.heterogeneity = Heterogeneity::Homogeneous;
        break;
    case 4:
        cfg.bs.mode = BsMotion::Mode::Orbit;
        cfg.heterogeneity = Heterogeneity::HalfDoubled;
        break;
    default:
        throw ConfigError("experiment preset must be 1, 2, 3 or 4 (got " +
                          std::to_string(preset) + ")");
    }
}

std::string experiment_tag(const ExperimentSpec& spec) {
    return spec.preset ? "exp" + std::to_string(*spec.preset) : "custom";
}

std::string trace_filename(const std::string& tag, Protocol protocol, std::uint64_t seed) {
    return tag + "_" + to_string(protocol) + "_seed" + std::to_string(seed) + ".csv";
}

namespace {

std::string milestone_cell(const std::optional<std::uint64_t>& milestone) {
    return milestone ? std::to_string(*milestone) : std::string();
}

std::string median_cell(const MilestoneStats& stats) {
    if (stats.count == 0) {
        return "-";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", stats.median);
    return buf;
}

} // namespace

ExperimentResult run_experiment(const ExperimentSpec& spec, std::ostream& log) {
    if (spec.protocols.empty()) {
        throw ConfigError("at least one protocol is required");
    }
    if (spec.seeds.empty()) {
        throw ConfigError("at least one seed is required");
    }

    NetworkConfig base = spec.base;
    if (spec.preset) {
        apply_preset(base, *spec.preset);
    }
    validate(base);

    std::error_code ec;
    std::filesystem::create_directories(spec.output_dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory " + spec.output_dir.string() +
                                 ": " + ec.message());
    }

    ExperimentResult result;
    result.tag = experiment_tag(spec);

    std::ofstream summary(spec.output_dir / (result.tag + "_summary.csv"), std::ios::binary);
    if (!summary) {
        throw std::runtime_error("cannot open summary file in " + spec.output_dir.string());
    }
    summary << "protocol,bs_mode,energy_mode,seed,first_death,half_dead,pct70_dead,rounds\n";

    for (Protocol protocol : spec.protocols) {
        std::vector<LifetimeReport> reports;
        for (std::uint64_t seed : spec.seeds) {
            NetworkConfig cfg = base;
            cfg.protocol = protocol;
            cfg.seed = seed;
            const SimulationTrace trace = run_simulation(cfg);
            write_trace_csv(trace, spec.output_dir / trace_filename(result.tag, protocol, seed));
            LifetimeReport report = summarize(trace);
            summary << to_string(protocol) << ',' << to_string(cfg.bs.mode) << ','
                    << to_string(cfg.heterogeneity) << ',' << seed << ','
                    << milestone_cell(report.first_death_round) << ','
                    << milestone_cell(report.half_dead_round) << ','
                    << milestone_cell(report.pct70_dead_round) << ',' << report.rounds_simulated
                    << '\n';
            result.runs.push_back({protocol, seed, report});
            reports.push_back(std::move(report));
        }
        result.by_protocol.emplace(protocol, aggregate(reports));
    }
    summary.flush();
    if (!summary) {
        throw std::runtime_error("failed writing summary in " + spec.output_dir.string());
    }

    log << result.tag << " medians over " << spec.seeds.size() << " seed(s):\n";
    log << std::left << std::setw(10) << "protocol" << std::setw(14) << "first_death"
        << std::setw(12) << "half_dead" << std::setw(12) << "pct70_dead" << '\n';
    for (Protocol protocol : spec.protocols) {
        const AggregateSummary& agg = result.by_protocol.at(protocol);
        log << std::left << std::setw(10) << to_string(protocol) << std::setw(14)
            << median_cell(agg.first_death) << std::setw(12) << median_cell(agg.half_dead)
            << std::setw(12) << median_cell(agg.pct70_dead) << '\n';
    }
    return result;
}

} // namespace wsnsim
