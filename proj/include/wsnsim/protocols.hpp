#ifndef WSNSIM_PROTOCOLS_HPP
#define WSNSIM_PROTOCOLS_HPP

#include "wsnsim/model.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace wsnsim {

/// The two virtual distance layers around the base station, split at
/// boundary_l = (d1 + d2) / 2 where d1/d2 are the max/min alive-node
/// distances to the base station.
struct Layering {
    double d1 = 0.0;
    double d2 = 0.0;
    double boundary_l = 0.0;
};

/// Everything a threshold function needs besides the node itself.
/// layering is only consulted by the proposed protocol.
struct ElectionContext {
    std::uint64_t round_index = 0;
    double p = 0.05;
    std::size_t alive_count = 0;
    Position bs_pos;
    std::optional<Layering> layering;
};

/// Head sets plus the member -> head map. direct_to_bs holds members
/// that found every cluster full (proposed protocol only); they uplink
/// straight to the base station that round. The three groups partition
/// the alive nodes.
struct ClusterAssignment {
    std::vector<NodeId> heads;           // ascending
    std::map<NodeId, NodeId> membership; // member -> head
    std::vector<NodeId> direct_to_bs;    // ascending
};

/// Throws when no alive node exists.
Layering compute_layering(std::span<const SensorNode> nodes, const Position& bs_pos);

/// 1 for the closer band (distance <= boundary), else 2.
int layer_of(const SensorNode& node, const Layering& layering, const Position& bs_pos);

/// Smallest k such that k * p_effective >= 1, i.e. ceil(1/p_effective).
/// p_effective is p for leach/proposed and sqrt(alive)/alive for eleach.
std::uint64_t epoch_length(Protocol protocol, double p, std::size_t alive_count);

// Election thresholds, all clamped to [0,1] and 0 for ineligible nodes.
double leach_threshold(const SensorNode& node, const ElectionContext& ctx);
double eleach_threshold(const SensorNode& node, const ElectionContext& ctx);
double proposed_threshold(const SensorNode& node, const ElectionContext& ctx);
double head_threshold(Protocol protocol, const SensorNode& node, const ElectionContext& ctx);

/// At epoch boundaries (round_index mod epoch == 0) every alive node
/// becomes eligible again.
void reset_eligibility(std::vector<SensorNode>& nodes, Protocol protocol,
                       const ElectionContext& ctx);

/// Draws one uniform per alive eligible node in ascending id order; a
/// node heads iff its draw falls below its threshold. Elected heads are
/// marked ineligible. If nothing is elected, the alive eligible node
/// with the highest threshold is drafted (resetting eligibility first
/// if the pool is empty), so at least one head always exists.
/// Throws when no alive node remains.
std::vector<NodeId> elect_heads(Protocol protocol, std::vector<SensorNode>& nodes,
                                const ElectionContext& ctx, RngStream& rng);

/// floor((n_alive - n_heads) / n_heads), floored at 0. Throws when
/// n_heads is 0.
int cluster_capacity(int n_alive, int n_heads);

/// leach/eleach: every non-head joins its nearest head, unbounded.
/// proposed: non-heads are processed by ascending distance to their
/// nearest head and each joins the nearest head with remaining capacity
/// (Eq. capacity above); when all heads are full the node goes to
/// direct_to_bs. Ties always break toward the lower id. Throws when
/// heads is empty.
ClusterAssignment form_clusters(Protocol protocol, const std::vector<NodeId>& heads,
                                std::span<const SensorNode> nodes, const Position& bs_pos);

} // namespace wsnsim

#endif
