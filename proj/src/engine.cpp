#include "wsnsim/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace wsnsim {

Simulation::Simulation(NetworkConfig cfg)
    : cfg_(std::move(cfg)), nodes_(build_network(cfg_)), election_rng_(cfg_.seed, "election") {}

int Simulation::alive_count() const {
    return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                          [](const SensorNode& n) { return n.alive; }));
}

double Simulation::total_energy() const {
    double sum = 0.0;
    for (const SensorNode& node : nodes_) {
        sum += node.energy;
    }
    return sum;
}

RoundOutcome Simulation::run_round() {
    const int alive_before = alive_count();
    if (alive_before == 0) {
        throw std::logic_error("run_round: no alive nodes");
    }

    ElectionContext ctx;
    ctx.round_index = round_;
    ctx.p = cfg_.p;
    ctx.alive_count = static_cast<std::size_t>(alive_before);
    ctx.bs_pos = bs_position(cfg_.bs, round_);

    reset_eligibility(nodes_, cfg_.protocol, ctx);
    if (cfg_.protocol == Protocol::Proposed) {
        ctx.layering = compute_layering(nodes_, ctx.bs_pos);
    }

    RoundOutcome outcome;
    outcome.round_index = round_;
    outcome.bs_pos = ctx.bs_pos;
    outcome.heads = elect_heads(cfg_.protocol, nodes_, ctx, election_rng_);
    outcome.assignment = form_clusters(cfg_.protocol, outcome.heads, nodes_, ctx.bs_pos);

    const int k = cfg_.energy.packet_bits;
    const EnergyParams& ep = cfg_.energy;

    std::vector<EnergyDebit> debit(nodes_.size());
    std::vector<int> member_count(nodes_.size(), 0);
    auto at = [&](NodeId id) -> std::size_t { return static_cast<std::size_t>(id); };

    // Members uplink one sensing packet to their head.
    for (const auto& [member, head] : outcome.assignment.membership) {
        const double d = distance(nodes_[at(member)].pos, nodes_[at(head)].pos);
        debit[at(member)].tx += tx_cost(k, d, ep);
        debit[at(member)].cpu += cpu_cost(k, ep);
        debit[at(head)].rx += rx_cost(k, ep);
        ++member_count[at(head)];
    }
    // Heads fuse the received packets plus their own reading into one
    // packet and uplink it to the base station.
    for (NodeId head : outcome.heads) {
        debit[at(head)].aggregation += aggregation_cost(k, member_count[at(head)] + 1, ep);
        debit[at(head)].cpu += cpu_cost(k, ep);
        const double d = distance(nodes_[at(head)].pos, ctx.bs_pos);
        debit[at(head)].tx += tx_cost(k, d, ep);
    }
    // Overflow members that found every cluster full uplink directly.
    for (NodeId id : outcome.assignment.direct_to_bs) {
        const double d = distance(nodes_[at(id)].pos, ctx.bs_pos);
        debit[at(id)].tx += tx_cost(k, d, ep);
        debit[at(id)].cpu += cpu_cost(k, ep);
    }

    // Apply debits; deaths clamp at zero and take effect at round end.
    for (SensorNode& node : nodes_) {
        if (!node.alive) {
            continue;
        }
        const EnergyDebit& d = debit[at(node.id)];
        outcome.debits.emplace_back(node.id, d);
        const double spend = std::min(d.total(), node.energy);
        node.energy -= spend;
        if (node.energy <= 0.0) {
            node.energy = 0.0;
            node.alive = false;
            node.eligible = false;
            outcome.deaths.push_back(node.id);
        }
    }

    outcome.alive_after = alive_before - static_cast<int>(outcome.deaths.size());
    outcome.total_energy_after = total_energy();
    ++round_;
    return outcome;
}

SimulationTrace run_simulation(const NetworkConfig& cfg) {
    Simulation sim(cfg);
    SimulationTrace trace;
    trace.config = cfg;
    trace.rounds.reserve(static_cast<std::size_t>(std::min(cfg.max_rounds, 1 << 20)));
    while (sim.alive_count() > 0 &&
           sim.round_index() < static_cast<std::uint64_t>(cfg.max_rounds)) {
        trace.rounds.push_back(sim.run_round());
    }
    trace.terminated =
        sim.alive_count() == 0 ? TerminationReason::AllDead : TerminationReason::MaxRounds;
    return trace;
}

} // namespace wsnsim
