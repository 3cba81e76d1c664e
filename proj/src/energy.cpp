#include "wsnsim/energy.hpp"

#include <stdexcept>

namespace wsnsim {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

} // namespace

int path_loss_exponent(double d, double d0) {
    require(d >= 0.0, "distance must be >= 0");
    require(d0 > 0.0, "d0 must be > 0");
    return d <= d0 ? 2 : 4;
}

double tx_cost(int k_bits, double d, const EnergyParams& params) {
    require(k_bits > 0, "packet size must be > 0 bits");
    require(d >= 0.0, "distance must be >= 0");
    const double k = static_cast<double>(k_bits);
    const double d2 = d * d;
    const double amp = d <= params.d0 ? params.e_amp * d2 : params.e_amp_far * d2 * d2;
    return params.e_elec * k + amp * k;
}

double rx_cost(int k_bits, const EnergyParams& params) {
    require(k_bits > 0, "packet size must be > 0 bits");
    return params.e_elec * static_cast<double>(k_bits);
}

double cpu_cost(int k_bits, const EnergyParams& params) {
    require(k_bits > 0, "packet size must be > 0 bits");
    return params.e_cpu * static_cast<double>(k_bits);
}

double aggregation_cost(int k_bits, int n_signals, const EnergyParams& params) {
    require(k_bits > 0, "packet size must be > 0 bits");
    require(n_signals >= 1, "n_signals must be >= 1");
    return params.e_da * static_cast<double>(k_bits) * static_cast<double>(n_signals);
}

double total_cost(int k_bits, double d, const EnergyParams& params) {
    return tx_cost(k_bits, d, params) + rx_cost(k_bits, params) + cpu_cost(k_bits, params);
}

} // namespace wsnsim
