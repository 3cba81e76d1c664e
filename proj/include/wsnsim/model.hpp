#ifndef WSNSIM_MODEL_HPP
#define WSNSIM_MODEL_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace wsnsim {

using NodeId = int;

struct Position {
    double x = 0.0;
    double y = 0.0;
};

/// Euclidean distance between two points, in meters.
double distance(const Position& a, const Position& b);

/// One sensor. `eligible` tracks membership in the election set G:
/// a node that has served as cluster head stays ineligible until the
/// next epoch reset. Dead nodes are never eligible.
struct SensorNode {
    NodeId id = 0;
    Position pos;
    double energy = 0.0;          // residual, joules
    double initial_energy = 0.0;  // joules
    bool alive = true;
    bool eligible = true;
};

/// Radio + CPU energy constants. The amplifier has two regimes split at
/// the crossover distance d0: e_amp scales d^2 below it, e_amp_far
/// scales d^4 beyond it. Defaults are the conventional LEACH-literature
/// pair, which is continuous at d0 = sqrt(e_amp / e_amp_far) = 87.7 m.
struct EnergyParams {
    double e_elec = 50e-9;         // J/bit, transceiver electronics
    double e_amp = 10e-12;         // J/bit/m^2, d <= d0
    double e_amp_far = 0.0013e-12; // J/bit/m^4, d > d0
    double e_cpu = 7e-9;           // J/bit, processing
    double e_da = 5e-9;            // J/bit per fused packet
    double d0 = 87.7;              // m, exponent crossover
    int packet_bits = 4000;
};

enum class Protocol { Leach, Eleach, Proposed };

enum class Heterogeneity { Homogeneous, HalfDoubled };

/// Base-station placement per round: fixed, or orbiting a circle.
/// The orbit convention is pos = center + radius * (sin a, cos a) with
/// a = start_angle + 2*pi * revs_per_round * round, so start_angle = 0
/// puts round 0 at center + (0, radius).
struct BsMotion {
    enum class Mode { Static, Orbit };
    Mode mode = Mode::Static;
    Position static_pos{50.0, 200.0};
    Position orbit_center{50.0, 50.0};
    double orbit_radius = 150.0;
    double revs_per_round = 0.1;
    double start_angle = 0.0; // radians
};

Position bs_position(const BsMotion& motion, std::uint64_t round_index);

struct NetworkConfig {
    double field_width = 100.0;
    double field_height = 100.0;
    int node_count = 100;
    double initial_energy = 0.5; // J per node before heterogeneity
    double p = 0.05;             // desired cluster-head fraction
    EnergyParams energy;
    Protocol protocol = Protocol::Leach;
    BsMotion bs;
    Heterogeneity heterogeneity = Heterogeneity::Homogeneous;
    std::uint64_t seed = 1;
    int max_rounds = 5000;
};

/// Throws std::invalid_argument naming the offending field and its
/// constraint when the configuration is out of range.
void validate(const NetworkConfig& cfg);

/// Deterministic substream of a master seed, one per named purpose, so
/// that e.g. election draws never perturb topology generation.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::string_view purpose);

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), unbiased. bound must be > 0.
    std::uint64_t next_below(std::uint64_t bound);

  private:
    std::mt19937_64 gen_;
};

/// Places cfg.node_count nodes i.i.d. uniform over the field, all alive
/// and eligible. Under HalfDoubled, a seeded random floor(N/2)-subset
/// starts with twice the initial energy. Identical cfg (incl. seed)
/// yields an identical network regardless of the protocol choice.
std::vector<SensorNode> build_network(const NetworkConfig& cfg);

const char* to_string(Protocol p);
const char* to_string(Heterogeneity h);
const char* to_string(BsMotion::Mode m);

} // namespace wsnsim

#endif
