#include "wsnsim/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wsnsim {

double distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

RngStream::RngStream(std::uint64_t master_seed, std::string_view purpose)
    : gen_(splitmix64(master_seed ^ fnv1a64(purpose))) {}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = gen_();
    } while (v >= limit);
    return v % bound;
}

Position bs_position(const BsMotion& motion, std::uint64_t round_index) {
    if (motion.mode == BsMotion::Mode::Static) {
        return motion.static_pos;
    }
    // Reduce the revolution count mod 1 before scaling by 2*pi so that a
    // whole number of revolutions lands on the start point exactly.
    const double turns = std::fmod(motion.revs_per_round * static_cast<double>(round_index), 1.0);
    const double angle = motion.start_angle + 2.0 * std::numbers::pi * turns;
    return {motion.orbit_center.x + motion.orbit_radius * std::sin(angle),
            motion.orbit_center.y + motion.orbit_radius * std::cos(angle)};
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

} // namespace

void validate(const NetworkConfig& cfg) {
    require(cfg.node_count >= 1, "node_count must be >= 1");
    require(cfg.field_width > 0.0, "field_width must be > 0");
    require(cfg.field_height > 0.0, "field_height must be > 0");
    require(cfg.initial_energy > 0.0, "initial_energy must be > 0");
    require(cfg.p > 0.0 && cfg.p < 1.0, "p must lie in (0,1)");
    require(cfg.max_rounds >= 1, "max_rounds must be >= 1");
    require(cfg.energy.e_elec > 0.0, "e_elec must be > 0");
    require(cfg.energy.e_amp > 0.0, "e_amp must be > 0");
    require(cfg.energy.e_amp_far > 0.0, "e_amp_far must be > 0");
    require(cfg.energy.e_cpu > 0.0, "e_cpu must be > 0");
    require(cfg.energy.e_da > 0.0, "e_da must be > 0");
    require(cfg.energy.d0 > 0.0, "d0 must be > 0");
    require(cfg.energy.packet_bits >= 1, "packet_bits must be >= 1");
    if (cfg.bs.mode == BsMotion::Mode::Orbit) {
        require(cfg.bs.orbit_radius >= 0.0, "orbit_radius must be >= 0");
    }
}

std::vector<SensorNode> build_network(const NetworkConfig& cfg) {
    validate(cfg);

    RngStream positions(cfg.seed, "positions");
    std::vector<SensorNode> nodes;
    nodes.reserve(static_cast<std::size_t>(cfg.node_count));
    for (NodeId id = 0; id < cfg.node_count; ++id) {
        SensorNode node;
        node.id = id;
        node.pos.x = positions.next_unit() * cfg.field_width;
        node.pos.y = positions.next_unit() * cfg.field_height;
        node.energy = cfg.initial_energy;
        node.initial_energy = cfg.initial_energy;
        nodes.push_back(node);
    }

    if (cfg.heterogeneity == Heterogeneity::HalfDoubled) {
        RngStream pick(cfg.seed, "heterogeneity");
        std::vector<NodeId> ids(nodes.size());
        for (std::size_t i = 0; i < ids.size(); ++i) {
            ids[i] = static_cast<NodeId>(i);
        }
        // Fisher-Yates; the first floor(N/2) of the shuffle get doubled.
        for (std::size_t i = ids.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(pick.next_below(i + 1));
            std::swap(ids[i], ids[j]);
        }
        const std::size_t boosted = nodes.size() / 2;
        for (std::size_t i = 0; i < boosted; ++i) {
            SensorNode& node = nodes[static_cast<std::size_t>(ids[i])];
            node.initial_energy = 2.0 * cfg.initial_energy;
            node.energy = node.initial_energy;
        }
    }
    return nodes;
}

const char* to_string(Protocol p) {
    switch (p) {
    case Protocol::Leach: return "leach";
    case Protocol::Eleach: return "eleach";
    case Protocol::Proposed: return "proposed";
    }
    return "?";
}

const char* to_string(Heterogeneity h) {
    return h == Heterogeneity::Homogeneous ? "homogeneous" : "half_doubled";
}

const char* to_string(BsMotion::Mode m) {
    return m == BsMotion::Mode::Static ? "static" : "orbit";
}

} // namespace wsnsim
