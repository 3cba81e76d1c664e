#ifndef WSNSIM_CONFIG_IO_HPP
#define WSNSIM_CONFIG_IO_HPP

#include "wsnsim/model.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wsnsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sets one configuration field by key. Keys mirror the NetworkConfig
/// and EnergyParams field names plus the base-station fields:
///   field_width field_height node_count initial_energy p seed max_rounds
///   protocol (leach|eleach|proposed)
///   heterogeneity (homogeneous|half_doubled)
///   e_elec e_amp e_amp_far e_cpu e_da d0 packet_bits
///   bs_mode (static|orbit) bs_x bs_y
///   orbit_center_x orbit_center_y orbit_radius orbit_revs_per_round
///   orbit_start_angle
/// Unknown keys and malformed values raise ConfigError.
void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view value);

/// Parses a flat key=value file ('#' starts a comment, blank lines
/// ignored, later keys override earlier ones) on top of the built-in
/// defaults, then validates. Parse errors report the line number;
/// validation errors name the offending key and its constraint.
NetworkConfig load_config(const std::filesystem::path& path);

Protocol protocol_from_string(std::string_view name);

} // namespace wsnsim

#endif
