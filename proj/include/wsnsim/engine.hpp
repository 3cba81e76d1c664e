#ifndef WSNSIM_ENGINE_HPP
#define WSNSIM_ENGINE_HPP

#include "wsnsim/energy.hpp"
#include "wsnsim/model.hpp"
#include "wsnsim/protocols.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wsnsim {

struct RoundOutcome {
    std::uint64_t round_index = 0;
    std::vector<NodeId> heads;
    ClusterAssignment assignment;
    std::vector<std::pair<NodeId, EnergyDebit>> debits; // ascending id, alive nodes only
    std::vector<NodeId> deaths;                         // newly dead this round
    int alive_after = 0;
    double total_energy_after = 0.0;
    Position bs_pos;
};

enum class TerminationReason { AllDead, MaxRounds };

struct SimulationTrace {
    NetworkConfig config;
    std::vector<RoundOutcome> rounds;
    TerminationReason terminated = TerminationReason::MaxRounds;
};

/// Drives one network through its rounds. Each round runs, in order:
/// eligibility reset, base-station placement (plus layering for the
/// proposed protocol), head election, cluster formation, the
/// steady-state energy debits, then death processing. A debit larger
/// than a node's remaining energy kills it and clamps its energy at
/// zero; the node's transmissions still complete that round.
class Simulation {
  public:
    explicit Simulation(NetworkConfig cfg);

    /// Throws when every node is already dead.
    RoundOutcome run_round();

    const std::vector<SensorNode>& nodes() const { return nodes_; }
    std::uint64_t round_index() const { return round_; }
    int alive_count() const;
    double total_energy() const;

  private:
    NetworkConfig cfg_;
    std::vector<SensorNode> nodes_;
    RngStream election_rng_;
    std::uint64_t round_ = 0;
};

/// Builds the network and iterates run_round until everything is dead
/// or cfg.max_rounds rounds have run.
SimulationTrace run_simulation(const NetworkConfig& cfg);

} // namespace wsnsim

#endif
