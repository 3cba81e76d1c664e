// wsnsim — experiment runner for the clustered-WSN lifetime simulator.
//
// Runs a (protocol x seed) grid of simulations, writes one trace CSV per
// run plus a summary CSV per experiment, and prints a milestone
// comparison table.

#include "wsnsim/experiment.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

std::uint64_t parse_seed_value(const std::string& item, std::string_view digits) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw wsnsim::ConfigError("invalid seed list item '" + item + "'");
    }
    return value;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    std::vector<std::uint64_t> seeds;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const std::string item = text.substr(pos, comma - pos);
        const std::size_t dots = item.find("..");
        if (dots != std::string::npos) {
            const std::uint64_t lo = parse_seed_value(item, std::string_view(item).substr(0, dots));
            const std::uint64_t hi = parse_seed_value(item, std::string_view(item).substr(dots + 2));
            if (hi < lo) {
                throw wsnsim::ConfigError("seed range '" + item + "' is descending");
            }
            for (std::uint64_t s = lo; s <= hi; ++s) {
                seeds.push_back(s);
            }
        } else if (!item.empty()) {
            seeds.push_back(parse_seed_value(item, item));
        }
        pos = comma + 1;
    }
    if (seeds.empty()) {
        throw wsnsim::ConfigError("seed list '" + text + "' is empty");
    }
    return seeds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-round lifetime simulator for clustered wireless sensor networks"};

    int experiment = 0;
    std::vector<std::string> protocol_names;
    std::string seeds_text;
    std::string config_path;
    std::string out_dir;
    int max_rounds = 0;
    std::vector<std::string> overrides;

    app.add_option("--experiment", experiment,
                   "Built-in experiment preset: 1 static+homogeneous, 2 static+half_doubled, "
                   "3 orbit+homogeneous, 4 orbit+half_doubled");
    app.add_option("--protocol", protocol_names,
                   "Protocol to run: leach, eleach or proposed (repeatable; default all three)");
    app.add_option("--seeds,--seed", seeds_text,
                   "Seeds as a list or range, e.g. '7', '1,2,5' or '1..10' (default 1..10)");
    app.add_option("--config", config_path, "Key=value config file (see README for keys)");
    app.add_option("--out", out_dir,
                   "Output directory (default $WSNSIM_OUT, then ./wsnsim_out)");
    app.add_option("--max-rounds", max_rounds, "Cap on simulated rounds per run");
    app.add_option("--set", overrides, "Config override key=value (repeatable)");

    CLI11_PARSE(app, argc, argv);

    try {
        wsnsim::ExperimentSpec spec;

        if (!config_path.empty()) {
            spec.base = wsnsim::load_config(config_path);
        }
        for (const std::string& item : overrides) {
            const std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                throw wsnsim::ConfigError("--set expects key=value, got '" + item + "'");
            }
            wsnsim::apply_setting(spec.base, item.substr(0, eq), item.substr(eq + 1));
        }
        if (max_rounds != 0) {
            spec.base.max_rounds = max_rounds;
        }
        if (experiment != 0) {
            spec.preset = experiment;
        }
        if (!protocol_names.empty()) {
            spec.protocols.clear();
            for (const std::string& name : protocol_names) {
                spec.protocols.push_back(wsnsim::protocol_from_string(name));
            }
        }
        if (!seeds_text.empty()) {
            spec.seeds = parse_seeds(seeds_text);
        }

        if (!out_dir.empty()) {
            spec.output_dir = out_dir;
        } else if (const char* env = std::getenv("WSNSIM_OUT"); env != nullptr && *env != '\0') {
            spec.output_dir = env;
        } else {
            spec.output_dir = "wsnsim_out";
        }

        wsnsim::run_experiment(spec, std::cout);
        std::cout << "output written to " << spec.output_dir.string() << '\n';
        return 0;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
