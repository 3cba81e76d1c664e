#include "wsnsim/config_io.hpp"
#include "wsnsim/energy.hpp"
#include "wsnsim/engine.hpp"
#include "wsnsim/experiment.hpp"
#include "wsnsim/metrics.hpp"
#include "wsnsim/protocols.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

namespace py = pybind11;
using namespace wsnsim;

PYBIND11_MODULE(wsnsim, m) {
    m.doc() = "Discrete-round lifetime simulator for clustered wireless sensor networks";

    py::class_<Position>(m, "Position")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readwrite("x", &Position::x)
        .def_readwrite("y", &Position::y)
        .def("__repr__", [](const Position& p) {
            std::ostringstream out;
            out << "Position(" << p.x << ", " << p.y << ")";
            return out.str();
        });

    py::class_<SensorNode>(m, "SensorNode")
        .def(py::init<>())
        .def_readwrite("id", &SensorNode::id)
        .def_readwrite("pos", &SensorNode::pos)
        .def_readwrite("energy", &SensorNode::energy)
        .def_readwrite("initial_energy", &SensorNode::initial_energy)
        .def_readwrite("alive", &SensorNode::alive)
        .def_readwrite("eligible", &SensorNode::eligible);

    py::class_<EnergyParams>(m, "EnergyParams")
        .def(py::init<>())
        .def_readwrite("e_elec", &EnergyParams::e_elec)
        .def_readwrite("e_amp", &EnergyParams::e_amp)
        .def_readwrite("e_amp_far", &EnergyParams::e_amp_far)
        .def_readwrite("e_cpu", &EnergyParams::e_cpu)
        .def_readwrite("e_da", &EnergyParams::e_da)
        .def_readwrite("d0", &EnergyParams::d0)
        .def_readwrite("packet_bits", &EnergyParams::packet_bits);

    py::enum_<Protocol>(m, "Protocol")
        .value("LEACH", Protocol::Leach)
        .value("ELEACH", Protocol::Eleach)
        .value("PROPOSED", Protocol::Proposed);

    py::enum_<Heterogeneity>(m, "Heterogeneity")
        .value("HOMOGENEOUS", Heterogeneity::Homogeneous)
        .value("HALF_DOUBLED", Heterogeneity::HalfDoubled);

    py::enum_<BsMotion::Mode>(m, "BsMode")
        .value("STATIC", BsMotion::Mode::Static)
        .value("ORBIT", BsMotion::Mode::Orbit);

    py::class_<BsMotion>(m, "BsMotion")
        .def(py::init<>())
        .def_readwrite("mode", &BsMotion::mode)
        .def_readwrite("static_pos", &BsMotion::static_pos)
        .def_readwrite("orbit_center", &BsMotion::orbit_center)
        .def_readwrite("orbit_radius", &BsMotion::orbit_radius)
        .def_readwrite("revs_per_round", &BsMotion::revs_per_round)
        .def_readwrite("start_angle", &BsMotion::start_angle);

    py::class_<NetworkConfig>(m, "NetworkConfig")
        .def(py::init<>())
        .def_readwrite("field_width", &NetworkConfig::field_width)
        .def_readwrite("field_height", &NetworkConfig::field_height)
        .def_readwrite("node_count", &NetworkConfig::node_count)
        .def_readwrite("initial_energy", &NetworkConfig::initial_energy)
        .def_readwrite("p", &NetworkConfig::p)
        .def_readwrite("energy", &NetworkConfig::energy)
        .def_readwrite("protocol", &NetworkConfig::protocol)
        .def_readwrite("bs", &NetworkConfig::bs)
        .def_readwrite("heterogeneity", &NetworkConfig::heterogeneity)
        .def_readwrite("seed", &NetworkConfig::seed)
        .def_readwrite("max_rounds", &NetworkConfig::max_rounds);

    py::class_<Layering>(m, "Layering")
        .def(py::init<>())
        .def_readwrite("d1", &Layering::d1)
        .def_readwrite("d2", &Layering::d2)
        .def_readwrite("boundary_l", &Layering::boundary_l);

    py::class_<ElectionContext>(m, "ElectionContext")
        .def(py::init<>())
        .def_readwrite("round_index", &ElectionContext::round_index)
        .def_readwrite("p", &ElectionContext::p)
        .def_readwrite("alive_count", &ElectionContext::alive_count)
        .def_readwrite("bs_pos", &ElectionContext::bs_pos)
        .def_readwrite("layering", &ElectionContext::layering);

    py::class_<ClusterAssignment>(m, "ClusterAssignment")
        .def_readonly("heads", &ClusterAssignment::heads)
        .def_readonly("membership", &ClusterAssignment::membership)
        .def_readonly("direct_to_bs", &ClusterAssignment::direct_to_bs);

    py::class_<EnergyDebit>(m, "EnergyDebit")
        .def_readonly("tx", &EnergyDebit::tx)
        .def_readonly("rx", &EnergyDebit::rx)
        .def_readonly("cpu", &EnergyDebit::cpu)
        .def_readonly("aggregation", &EnergyDebit::aggregation)
        .def("total", &EnergyDebit::total);

    py::class_<RoundOutcome>(m, "RoundOutcome")
        .def_readonly("round_index", &RoundOutcome::round_index)
        .def_readonly("heads", &RoundOutcome::heads)
        .def_readonly("assignment", &RoundOutcome::assignment)
        .def_readonly("debits", &RoundOutcome::debits)
        .def_readonly("deaths", &RoundOutcome::deaths)
        .def_readonly("alive_after", &RoundOutcome::alive_after)
        .def_readonly("total_energy_after", &RoundOutcome::total_energy_after)
        .def_readonly("bs_pos", &RoundOutcome::bs_pos);

    py::enum_<TerminationReason>(m, "TerminationReason")
        .value("ALL_DEAD", TerminationReason::AllDead)
        .value("MAX_ROUNDS", TerminationReason::MaxRounds);

    py::class_<SimulationTrace>(m, "SimulationTrace")
        .def_readonly("config", &SimulationTrace::config)
        .def_readonly("rounds", &SimulationTrace::rounds)
        .def_readonly("terminated", &SimulationTrace::terminated);

    py::class_<LifetimeReport>(m, "LifetimeReport")
        .def_readonly("first_death_round", &LifetimeReport::first_death_round)
        .def_readonly("half_dead_round", &LifetimeReport::half_dead_round)
        .def_readonly("pct70_dead_round", &LifetimeReport::pct70_dead_round)
        .def_readonly("rounds_simulated", &LifetimeReport::rounds_simulated)
        .def_readonly("alive_curve", &LifetimeReport::alive_curve)
        .def_readonly("energy_curve", &LifetimeReport::energy_curve);

    py::class_<MilestoneStats>(m, "MilestoneStats")
        .def_readonly("count", &MilestoneStats::count)
        .def_readonly("missing", &MilestoneStats::missing)
        .def_readonly("mean", &MilestoneStats::mean)
        .def_readonly("median", &MilestoneStats::median)
        .def_readonly("min", &MilestoneStats::min)
        .def_readonly("max", &MilestoneStats::max);

    py::class_<AggregateSummary>(m, "AggregateSummary")
        .def_readonly("first_death", &AggregateSummary::first_death)
        .def_readonly("half_dead", &AggregateSummary::half_dead)
        .def_readonly("pct70_dead", &AggregateSummary::pct70_dead);

    m.def("distance", &distance, py::arg("a"), py::arg("b"));
    m.def("bs_position", &bs_position, py::arg("motion"), py::arg("round_index"));
    m.def("build_network", &build_network, py::arg("cfg"));
    m.def("validate", &validate, py::arg("cfg"));

    m.def("path_loss_exponent", &path_loss_exponent, py::arg("d"), py::arg("d0"));
    m.def("tx_cost", &tx_cost, py::arg("k_bits"), py::arg("d"), py::arg("params"));
    m.def("rx_cost", &rx_cost, py::arg("k_bits"), py::arg("params"));
    m.def("cpu_cost", &cpu_cost, py::arg("k_bits"), py::arg("params"));
    m.def("aggregation_cost", &aggregation_cost, py::arg("k_bits"), py::arg("n_signals"),
          py::arg("params"));
    m.def("total_cost", &total_cost, py::arg("k_bits"), py::arg("d"), py::arg("params"));

    m.def("compute_layering",
          [](const std::vector<SensorNode>& nodes, const Position& bs) {
              return compute_layering(nodes, bs);
          },
          py::arg("nodes"), py::arg("bs_pos"));
    m.def("leach_threshold", &leach_threshold, py::arg("node"), py::arg("ctx"));
    m.def("eleach_threshold", &eleach_threshold, py::arg("node"), py::arg("ctx"));
    m.def("proposed_threshold", &proposed_threshold, py::arg("node"), py::arg("ctx"));
    m.def("cluster_capacity", &cluster_capacity, py::arg("n_alive"), py::arg("n_heads"));
    m.def("form_clusters",
          [](Protocol protocol, const std::vector<NodeId>& heads,
             const std::vector<SensorNode>& nodes, const Position& bs) {
              return form_clusters(protocol, heads, nodes, bs);
          },
          py::arg("protocol"), py::arg("heads"), py::arg("nodes"), py::arg("bs_pos"));

    m.def("run_simulation", &run_simulation, py::arg("cfg"),
          py::call_guard<py::gil_scoped_release>());
    m.def("summarize", &summarize, py::arg("trace"));
    m.def("aggregate", &aggregate, py::arg("reports"));
    m.def("write_trace_csv",
          [](const SimulationTrace& trace, const std::filesystem::path& dest) {
              return write_trace_csv(trace, dest);
          },
          py::arg("trace"), py::arg("dest"));
    m.def("load_config", &load_config, py::arg("path"));
}
