#include "wsnsim/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wsnsim {

namespace {

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Rotation-scheme base term p_eff / (1 - p_eff * (r mod epoch)).
double rotation_base(double p_eff, std::uint64_t epoch, std::uint64_t round_index) {
    const double phase = static_cast<double>(round_index % epoch);
    const double denom = 1.0 - p_eff * phase;
    if (denom <= 0.0) {
        return 1.0;
    }
    return p_eff / denom;
}

double eleach_p(std::size_t alive_count) {
    const double n = static_cast<double>(alive_count);
    return std::sqrt(n) / n;
}

std::vector<std::size_t> indices_by_id(std::span<const SensorNode> nodes) {
    std::vector<std::size_t> order(nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return nodes[a].id < nodes[b].id; });
    return order;
}

} // namespace

Layering compute_layering(std::span<const SensorNode> nodes, const Position& bs_pos) {
    Layering lay;
    lay.d1 = -1.0;
    lay.d2 = std::numeric_limits<double>::infinity();
    for (const SensorNode& node : nodes) {
        if (!node.alive) {
            continue;
        }
        const double d = distance(node.pos, bs_pos);
        lay.d1 = std::max(lay.d1, d);
        lay.d2 = std::min(lay.d2, d);
    }
    if (lay.d1 < 0.0) {
        throw std::invalid_argument("compute_layering: no alive nodes");
    }
    lay.boundary_l = (lay.d1 + lay.d2) / 2.0;
    return lay;
}

int layer_of(const SensorNode& node, const Layering& layering, const Position& bs_pos) {
    return distance(node.pos, bs_pos) <= layering.boundary_l ? 1 : 2;
}

std::uint64_t epoch_length(Protocol protocol, double p, std::size_t alive_count) {
    const double p_eff = protocol == Protocol::Eleach ? eleach_p(alive_count) : p;
    // smallest integer k with k * p_eff >= 1
    auto k = static_cast<std::uint64_t>(std::floor(1.0 / p_eff));
    if (k == 0) {
        k = 1;
    }
    while (static_cast<double>(k) * p_eff < 1.0) {
        ++k;
    }
    return k;
}

double leach_threshold(const SensorNode& node, const ElectionContext& ctx) {
    if (!node.eligible) {
        return 0.0;
    }
    const std::uint64_t epoch = epoch_length(Protocol::Leach, ctx.p, ctx.alive_count);
    return clamp01(rotation_base(ctx.p, epoch, ctx.round_index));
}

double eleach_threshold(const SensorNode& node, const ElectionContext& ctx) {
    if (!node.eligible) {
        return 0.0;
    }
    const double p_e = eleach_p(ctx.alive_count);
    const std::uint64_t epoch = epoch_length(Protocol::Eleach, ctx.p, ctx.alive_count);
    const double energy_ratio = node.energy / node.initial_energy;
    return clamp01(rotation_base(p_e, epoch, ctx.round_index) * energy_ratio);
}

double proposed_threshold(const SensorNode& node, const ElectionContext& ctx) {
    if (!node.eligible) {
        return 0.0;
    }
    if (!ctx.layering) {
        throw std::invalid_argument("proposed_threshold: layering required");
    }
    const Layering& lay = *ctx.layering;
    const std::uint64_t epoch = epoch_length(Protocol::Proposed, ctx.p, ctx.alive_count);
    const double base = rotation_base(ctx.p, epoch, ctx.round_index);
    const double energy_ratio = node.energy / node.initial_energy;
    const double d = distance(node.pos, ctx.bs_pos);
    double dist_factor = 1.0;
    if (d > 0.0) {
        const double ratio = lay.d2 / d;
        const double sq = ratio * ratio;
        dist_factor = d <= lay.boundary_l ? sq : sq * sq;
    }
    return clamp01(base * energy_ratio * dist_factor);
}

double head_threshold(Protocol protocol, const SensorNode& node, const ElectionContext& ctx) {
    switch (protocol) {
    case Protocol::Leach: return leach_threshold(node, ctx);
    case Protocol::Eleach: return eleach_threshold(node, ctx);
    case Protocol::Proposed: return proposed_threshold(node, ctx);
    }
    return 0.0;
}

void reset_eligibility(std::vector<SensorNode>& nodes, Protocol protocol,
                       const ElectionContext& ctx) {
    const std::uint64_t epoch = epoch_length(protocol, ctx.p, ctx.alive_count);
    if (ctx.round_index % epoch != 0) {
        return;
    }
    for (SensorNode& node : nodes) {
        if (node.alive) {
            node.eligible = true;
        }
    }
}

std::vector<NodeId> elect_heads(Protocol protocol, std::vector<SensorNode>& nodes,
                                const ElectionContext& ctx, RngStream& rng) {
    const std::vector<std::size_t> order = indices_by_id(nodes);
    bool any_alive = false;
    std::vector<NodeId> heads;
    for (std::size_t i : order) {
        SensorNode& node = nodes[i];
        if (!node.alive) {
            continue;
        }
        any_alive = true;
        if (!node.eligible) {
            continue;
        }
        const double u = rng.next_unit();
        if (u < head_threshold(protocol, node, ctx)) {
            heads.push_back(node.id);
        }
    }
    if (!any_alive) {
        throw std::invalid_argument("elect_heads: no alive nodes");
    }

    if (heads.empty()) {
        const bool any_eligible = std::any_of(nodes.begin(), nodes.end(), [](const SensorNode& n) {
            return n.alive && n.eligible;
        });
        if (!any_eligible) {
            for (SensorNode& node : nodes) {
                if (node.alive) {
                    node.eligible = true;
                }
            }
        }
        // Draft the strongest candidate; id order makes ties deterministic.
        const SensorNode* best = nullptr;
        double best_threshold = -1.0;
        for (std::size_t i : order) {
            const SensorNode& node = nodes[i];
            if (!node.alive || !node.eligible) {
                continue;
            }
            const double t = head_threshold(protocol, node, ctx);
            if (t > best_threshold) {
                best_threshold = t;
                best = &node;
            }
        }
        heads.push_back(best->id);
    }

    for (SensorNode& node : nodes) {
        if (std::binary_search(heads.begin(), heads.end(), node.id)) {
            node.eligible = false;
        }
    }
    return heads;
}

int cluster_capacity(int n_alive, int n_heads) {
    if (n_heads <= 0) {
        throw std::invalid_argument("cluster_capacity: n_heads must be >= 1");
    }
    if (n_alive <= n_heads) {
        return 0;
    }
    return (n_alive - n_heads) / n_heads;
}

ClusterAssignment form_clusters(Protocol protocol, const std::vector<NodeId>& heads,
                                std::span<const SensorNode> nodes,
                                [[maybe_unused]] const Position& bs_pos) {
    if (heads.empty()) {
        throw std::invalid_argument("form_clusters: heads must be non-empty");
    }
    ClusterAssignment out;
    out.heads = heads;
    std::sort(out.heads.begin(), out.heads.end());

    struct HeadSlot {
        NodeId id;
        Position pos;
        int members = 0;
    };
    std::vector<HeadSlot> slots;
    slots.reserve(out.heads.size());
    int alive_count = 0;
    std::vector<const SensorNode*> members;
    for (std::size_t i : indices_by_id(nodes)) {
        const SensorNode& node = nodes[i];
        if (!node.alive) {
            continue;
        }
        ++alive_count;
        if (std::binary_search(out.heads.begin(), out.heads.end(), node.id)) {
            slots.push_back({node.id, node.pos, 0});
        } else {
            members.push_back(&node);
        }
    }

    auto nearest = [&](const SensorNode& node, bool respect_capacity, int capacity) -> HeadSlot* {
        HeadSlot* best = nullptr;
        double best_d = std::numeric_limits<double>::infinity();
        for (HeadSlot& slot : slots) {
            if (respect_capacity && slot.members >= capacity) {
                continue;
            }
            const double d = distance(node.pos, slot.pos);
            if (d < best_d) { // strict: ties keep the lower head id
                best_d = d;
                best = &slot;
            }
        }
        return best;
    };

    if (protocol == Protocol::Proposed) {
        const int capacity = cluster_capacity(alive_count, static_cast<int>(slots.size()));
        // Closest members claim their slots first.
        std::vector<std::pair<double, const SensorNode*>> ranked;
        ranked.reserve(members.size());
        for (const SensorNode* node : members) {
            double dmin = std::numeric_limits<double>::infinity();
            for (const HeadSlot& slot : slots) {
                dmin = std::min(dmin, distance(node->pos, slot.pos));
            }
            ranked.emplace_back(dmin, node);
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) {
                return a.first < b.first;
            }
            return a.second->id < b.second->id;
        });
        members.clear();
        for (const auto& [dmin, node] : ranked) {
            members.push_back(node);
        }
        for (const SensorNode* node : members) {
            HeadSlot* slot = nearest(*node, true, capacity);
            if (slot == nullptr) {
                out.direct_to_bs.push_back(node->id);
            } else {
                out.membership.emplace(node->id, slot->id);
                ++slot->members;
            }
        }
        std::sort(out.direct_to_bs.begin(), out.direct_to_bs.end());
    } else {
        for (const SensorNode* node : members) {
            HeadSlot* slot = nearest(*node, false, 0);
            out.membership.emplace(node->id, slot->id);
        }
    }
    return out;
}

} // namespace wsnsim
