#ifndef WSNSIM_ENERGY_HPP
#define WSNSIM_ENERGY_HPP

#include "wsnsim/model.hpp"

namespace wsnsim {

/// Per-node energy spent in one round, split by cause. total() is the
/// exact sum of the four components; there are no hidden costs.
struct EnergyDebit {
    double tx = 0.0;
    double rx = 0.0;
    double cpu = 0.0;
    double aggregation = 0.0;

    double total() const { return tx + rx + cpu + aggregation; }
};

/// 2 for d <= d0 (free-space regime), 4 beyond (multipath regime).
int path_loss_exponent(double d, double d0);

/// Energy to transmit k bits over distance d:
/// e_elec*k + e_amp*d^2*k below the crossover, e_elec*k + e_amp_far*d^4*k
/// beyond it. k must be positive, d nonnegative.
double tx_cost(int k_bits, double d, const EnergyParams& params);

/// Energy to receive k bits: e_elec*k.
double rx_cost(int k_bits, const EnergyParams& params);

/// Energy to process k bits: e_cpu*k.
double cpu_cost(int k_bits, const EnergyParams& params);

/// Energy for a head to fuse n_signals packets of k bits each into one:
/// e_da*k*n_signals. n_signals must be >= 1.
double aggregation_cost(int k_bits, int n_signals, const EnergyParams& params);

/// tx + rx + cpu for the same k and d; algebraically
/// k*(2*e_elec + e_cpu + amp*d^y).
double total_cost(int k_bits, double d, const EnergyParams& params);

} // namespace wsnsim

#endif
