#include "wsnsim/energy.hpp"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

using namespace wsnsim;

namespace {

// Single-coefficient amplifier parameter set (the same coefficient
// applied in both regimes).
EnergyParams table_params(double d0 = 87.7) {
    EnergyParams p;
    p.e_elec = 50e-9;
    p.e_amp = 0.659e-9;
    p.e_amp_far = 0.659e-9;
    p.e_cpu = 7e-9;
    p.e_da = 5e-9;
    p.d0 = d0;
    p.packet_bits = 4000;
    return p;
}

} // namespace

TEST_CASE("path loss exponent switches at d0") {
    CHECK(path_loss_exponent(10.0, 87.7) == 2);
    CHECK(path_loss_exponent(87.7, 87.7) == 2); // boundary belongs to the near regime
    CHECK(path_loss_exponent(150.0, 87.7) == 4);
    CHECK_THROWS_AS(path_loss_exponent(-1.0, 87.7), std::invalid_argument);
    CHECK_THROWS_AS(path_loss_exponent(10.0, 0.0), std::invalid_argument);
}

TEST_CASE("tx_cost formula values") {
    const EnergyParams p = table_params();
    CHECK(tx_cost(4000, 0.0, p) == doctest::Approx(2.0e-4).epsilon(1e-12));
    CHECK(tx_cost(4000, 10.0, p) == doctest::Approx(4.636e-4).epsilon(1e-12));
    CHECK(tx_cost(1, 0.0, p) == doctest::Approx(5.0e-8).epsilon(1e-12));
    CHECK_THROWS_AS(tx_cost(0, 10.0, p), std::invalid_argument);
    CHECK_THROWS_AS(tx_cost(4000, -1.0, p), std::invalid_argument);
}

TEST_CASE("rx_cost formula values") {
    const EnergyParams p = table_params();
    CHECK(rx_cost(4000, p) == doctest::Approx(2.0e-4).epsilon(1e-12));
    CHECK(rx_cost(1, p) == doctest::Approx(5.0e-8).epsilon(1e-12));
    CHECK_THROWS_AS(rx_cost(0, p), std::invalid_argument);
}

TEST_CASE("cpu_cost formula values") {
    EnergyParams p = table_params();
    CHECK(cpu_cost(4000, p) == doctest::Approx(2.8e-5).epsilon(1e-12));
    CHECK(cpu_cost(1, p) == doctest::Approx(7e-9).epsilon(1e-12));
    p.e_cpu = 0.0; // zero-rate degenerate
    CHECK(cpu_cost(4000, p) == 0.0);
}

TEST_CASE("aggregation_cost formula values") {
    const EnergyParams p = table_params();
    CHECK(aggregation_cost(4000, 1, p) == doctest::Approx(2.0e-5).epsilon(1e-12));
    CHECK(aggregation_cost(4000, 19, p) == doctest::Approx(3.8e-4).epsilon(1e-12));
    CHECK_THROWS_AS(aggregation_cost(4000, 0, p), std::invalid_argument);
}

TEST_CASE("total_cost formula values") {
    EnergyParams p = table_params();
    CHECK(total_cost(4000, 10.0, p) == doctest::Approx(6.916e-4).epsilon(1e-12));
    p.e_cpu = 0.0;
    CHECK(total_cost(4000, 0.0, p) == doctest::Approx(4.0e-4).epsilon(1e-12));
}

TEST_CASE("total_cost is the exact sum of its parts") {
    const EnergyParams p = table_params();
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> dist_d(0.0, 300.0);
    std::uniform_int_distribution<int> dist_k(1, 20000);
    for (int i = 0; i < 1000; ++i) {
        const int k = dist_k(gen);
        const double d = dist_d(gen);
        CHECK(total_cost(k, d, p) == tx_cost(k, d, p) + rx_cost(k, p) + cpu_cost(k, p));
    }
}

TEST_CASE("tx_cost monotone in d within each regime") {
    const EnergyParams p = table_params();
    double prev = tx_cost(4000, 0.0, p);
    for (double d = 0.5; d <= p.d0; d += 0.5) {
        const double cost = tx_cost(4000, d, p);
        CHECK(cost > prev);
        prev = cost;
    }
    prev = tx_cost(4000, p.d0 + 0.01, p);
    for (double d = p.d0 + 0.5; d < 400.0; d += 0.5) {
        const double cost = tx_cost(4000, d, p);
        CHECK(cost > prev);
        prev = cost;
    }
}

TEST_CASE("costs scale linearly in k") {
    const EnergyParams p = table_params();
    for (double d : {0.0, 25.0, 87.7, 200.0}) {
        const double unit = tx_cost(1000, d, p);
        CHECK(tx_cost(2000, d, p) == doctest::Approx(2.0 * unit).epsilon(1e-15));
        CHECK(tx_cost(3000, d, p) == doctest::Approx(3.0 * unit).epsilon(1e-14));
    }
    CHECK(rx_cost(2000, p) == doctest::Approx(2.0 * rx_cost(1000, p)).epsilon(1e-15));
    CHECK(cpu_cost(2000, p) == doctest::Approx(2.0 * cpu_cost(1000, p)).epsilon(1e-15));
    CHECK(aggregation_cost(2000, 5, p) ==
          doctest::Approx(2.0 * aggregation_cost(1000, 5, p)).epsilon(1e-15));
}

TEST_CASE("costs are non-negative") {
    const EnergyParams p = table_params();
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist_d(0.0, 500.0);
    for (int i = 0; i < 500; ++i) {
        const double d = dist_d(gen);
        CHECK(tx_cost(4000, d, p) >= 0.0);
        CHECK(total_cost(4000, d, p) >= 0.0);
    }
}

TEST_CASE("default params use the two-coefficient crossover radio") {
    const EnergyParams p; // library defaults
    CHECK(p.e_amp == 10e-12);
    CHECK(p.e_amp_far == 0.0013e-12);
    CHECK(p.d0 == 87.7);
    // continuous at the crossover by construction
    const double near = tx_cost(4000, p.d0, p);
    const double far = tx_cost(4000, p.d0 + 1e-9, p);
    CHECK(near == doctest::Approx(far).epsilon(1e-4));
}
