#include "wsnsim/config_io.hpp"

#include <charconv>
#include <fstream>
#include <string>

namespace wsnsim {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("invalid number for " + std::string(key) + ": '" + std::string(value) +
                          "'");
    }
    return out;
}

long long parse_int(std::string_view key, std::string_view value) {
    long long out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError("invalid integer for " + std::string(key) + ": '" + std::string(value) +
                          "'");
    }
    return out;
}

} // namespace

Protocol protocol_from_string(std::string_view name) {
    if (name == "leach") {
        return Protocol::Leach;
    }
    if (name == "eleach") {
        return Protocol::Eleach;
    }
    if (name == "proposed") {
        return Protocol::Proposed;
    }
    throw ConfigError("unknown protocol '" + std::string(name) +
                      "' (expected leach, eleach or proposed)");
}

void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "field_width") {
        cfg.field_width = parse_double(key, value);
    } else if (key == "field_height") {
        cfg.field_height = parse_double(key, value);
    } else if (key == "node_count") {
        cfg.node_count = static_cast<int>(parse_int(key, value));
    } else if (key == "initial_energy") {
        cfg.initial_energy = parse_double(key, value);
    } else if (key == "p") {
        cfg.p = parse_double(key, value);
    } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "max_rounds") {
        cfg.max_rounds = static_cast<int>(parse_int(key, value));
    } else if (key == "protocol") {
        cfg.protocol = protocol_from_string(value);
    } else if (key == "heterogeneity") {
        if (value == "homogeneous") {
            cfg.heterogeneity = Heterogeneity::Homogeneous;
        } else if (value == "half_doubled") {
            cfg.heterogeneity = Heterogeneity::HalfDoubled;
        } else {
            throw ConfigError("unknown heterogeneity '" + std::string(value) +
                              "' (expected homogeneous or half_doubled)");
        }
    } else if (key == "e_elec") {
        cfg.energy.e_elec = parse_double(key, value);
    } else if (key == "e_amp") {
        cfg.energy.e_amp = parse_double(key, value);
    } else if (key == "e_amp_far") {
        cfg.energy.e_amp_far = parse_double(key, value);
    } else if (key == "e_cpu") {
        cfg.energy.e_cpu = parse_double(key, value);
    } else if (key == "e_da") {
        cfg.energy.e_da = parse_double(key, value);
    } else if (key == "d0") {
        cfg.energy.d0 = parse_double(key, value);
    } else if (key == "packet_bits") {
        cfg.energy.packet_bits = static_cast<int>(parse_int(key, value));
    } else if (key == "bs_mode") {
        if (value == "static") {
            cfg.bs.mode = BsMotion::Mode::Static;
        } else if (value == "orbit") {
            cfg.bs.mode = BsMotion::Mode::Orbit;
        } else {
            throw ConfigError("unknown bs_mode '" + std::string(value) +
                              "' (expected static or orbit)");
        }
    } else if (key == "bs_x") {
        cfg.bs.static_pos.x = parse_double(key, value);
    } else if (key == "bs_y") {
        cfg.bs.static_pos.y = parse_double(key, value);
    } else if (key == "orbit_center_x") {
        cfg.bs.orbit_center.x = parse_double(key, value);
    } else if (key == "orbit_center_y") {
        cfg.bs.orbit_center.y = parse_double(key, value);
    } else if (key == "orbit_radius") {
        cfg.bs.orbit_radius = parse_double(key, value);
    } else if (key == "orbit_revs_per_round") {
        cfg.bs.revs_per_round = parse_double(key, value);
    } else if (key == "orbit_start_angle") {
        cfg.bs.start_angle = parse_double(key, value);
    } else {
        throw ConfigError("unknown key '" + std::string(key) + "'");
    }
}

NetworkConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    NetworkConfig cfg;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (const auto hash = view.find('#'); hash != std::string_view::npos) {
            view = view.substr(0, hash);
        }
        view = trim(view);
        if (view.empty()) {
            continue;
        }
        const auto eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                              ": expected key = value");
        }
        try {
            apply_setting(cfg, view.substr(0, eq), view.substr(eq + 1));
        } catch (const ConfigError& err) {
            throw ConfigError(path.string() + ":" + std::to_string(line_no) + ": " + err.what());
        }
    }
    try {
        validate(cfg);
    } catch (const std::invalid_argument& err) {
        throw ConfigError(path.string() + ": " + err.what());
    }
    return cfg;
}

} // namespace wsnsim
