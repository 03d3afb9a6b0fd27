/*
 * Copyright 2026 The numphase Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numphase/complementarity.hpp"
#include "numphase/distributions.hpp"
#include "numphase/entropy.hpp"
#include "numphase/mu_search.hpp"
#include "numphase/serialize.hpp"
#include "numphase/state.hpp"
#include "numphase/sweeps.hpp"

namespace py = pybind11;
using namespace numphase;

PYBIND11_MODULE(_core, m) {
    m.doc() = "number-phase distributions, entropic functionals, and inequality verifiers";

    py::enum_<StateKind>(m, "StateKind")
        .value("ATOMIC", StateKind::Atomic)
        .value("TRUNCATED_OSCILLATOR", StateKind::TruncatedOscillator);

    py::enum_<KernelKind>(m, "KernelKind")
        .value("CANONICAL", KernelKind::Canonical)
        .value("SU2", KernelKind::SU2);

    py::enum_<EntropyFunctional>(m, "EntropyFunctional")
        .value("H_DISCRETE", EntropyFunctional::HDiscrete)
        .value("R_DISCRETE", EntropyFunctional::RDiscrete)
        .value("R_PHASE", EntropyFunctional::RPhase)
        .value("H_PHASE_DIFFERENTIAL", EntropyFunctional::HPhaseDifferential);

    py::class_<QuantumState>(m, "QuantumState")
        .def_static("atomic", &QuantumState::atomic, py::arg("rho"))
        .def_static("truncated_oscillator", &QuantumState::truncated_oscillator,
                    py::arg("rho"), py::arg("truncation_loss"), py::arg("declared_mean") = 0.0)
        .def_property_readonly("dim", &QuantumState::dim)
        .def_property_readonly("kind", &QuantumState::kind)
        .def_property_readonly("truncation_loss", &QuantumState::truncation_loss)
        .def_property_readonly("declared_mean", &QuantumState::declared_mean)
        .def("matrix", &QuantumState::matrix, py::return_value_policy::copy)
        .def("trace_real", &QuantumState::trace_real)
        .def("purity", &QuantumState::purity);

    m.def("make_fock", &make_fock, py::arg("m"), py::arg("dim"),
          py::arg("kind") = StateKind::Atomic);
    m.def(
        "make_glauber_coherent",
        [](Complex alpha, double tail_tol) {
            return make_glauber_coherent(alpha, CutoffPolicy::automatic(tail_tol));
        },
        py::arg("alpha"), py::arg("tail_tol") = 1e-12);
    m.def(
        "make_glauber_coherent_fixed",
        [](Complex alpha, int cutoff) {
            return make_glauber_coherent(alpha, CutoffPolicy::fixed(cutoff));
        },
        py::arg("alpha"), py::arg("cutoff"));
    m.def("make_atomic_coherent", &make_atomic_coherent, py::arg("alpha_p"), py::arg("beta_p"),
          py::arg("d"));
    m.def("make_equatorial", &make_equatorial, py::arg("phi0"));
    m.def("make_random_pure", &make_random_pure, py::arg("seed"), py::arg("d"),
          py::arg("kind") = StateKind::Atomic);
    m.def("mix", &mix, py::arg("states"), py::arg("weights"));
    m.def("pure_state_from_amplitudes", &pure_state_from_amplitudes, py::arg("amplitudes"),
          py::arg("kind"), py::arg("truncation_loss") = 0.0, py::arg("declared_mean") = 0.0);

    py::class_<NumberDistribution>(m, "NumberDistribution")
        .def_readonly("p", &NumberDistribution::p)
        .def_readonly("truncation_loss", &NumberDistribution::truncation_loss)
        .def("size", &NumberDistribution::size)
        .def("prob", &NumberDistribution::prob, py::arg("m"))
        .def("mass", &NumberDistribution::mass);

    py::class_<PhaseKernel>(m, "PhaseKernel")
        .def_static("canonical", &PhaseKernel::canonical, py::arg("dim"))
        .def_static("su2", &PhaseKernel::su2, py::arg("d"))
        .def_property_readonly("dim", &PhaseKernel::dim)
        .def_property_readonly("kind", &PhaseKernel::kind)
        .def("weight", &PhaseKernel::weight, py::arg("m"), py::arg("n"))
        .def("weights", &PhaseKernel::weights, py::return_value_policy::copy);

    m.def("su2_weight", &su2_weight, py::arg("d"), py::arg("row"), py::arg("col"));

    py::class_<PhaseDistribution>(m, "PhaseDistribution")
        .def_readonly("grid_k", &PhaseDistribution::grid_k)
        .def_readonly("values", &PhaseDistribution::values)
        .def_readonly("truncation_loss", &PhaseDistribution::truncation_loss)
        .def("node", &PhaseDistribution::node, py::arg("k"))
        .def("density", &PhaseDistribution::density, py::arg("k"))
        .def("integral", &PhaseDistribution::integral);

    m.def("number_distribution", &number_distribution, py::arg("state"));
    m.def("phase_distribution", &phase_distribution, py::arg("state"), py::arg("kernel"),
          py::arg("grid_k") = 4096);

    py::class_<EntropyValue>(m, "EntropyValue")
        .def_readonly("bits", &EntropyValue::bits)
        .def_readonly("functional", &EntropyValue::functional)
        .def_readonly("loss", &EntropyValue::loss);

    m.def(
        "shannon_entropy",
        [](const std::vector<double>& p) {
            return shannon_entropy(std::span<const double>(p));
        },
        py::arg("p"));
    m.def(
        "shannon_entropy_number",
        [](const NumberDistribution& dist) { return shannon_entropy(dist); }, py::arg("dist"));
    m.def(
        "knowledge_discrete",
        [](const std::vector<double>& p, int d) {
            return knowledge_discrete(std::span<const double>(p), d);
        },
        py::arg("p"), py::arg("d"));
    m.def("knowledge_phase", &knowledge_phase, py::arg("dist"));
    m.def("differential_phase_entropy", &differential_phase_entropy, py::arg("dist"));
    m.def("log2_two_pi", &log2_two_pi);

    py::class_<BasisPair>(m, "BasisPair")
        .def(py::init<Matrix, Matrix>(), py::arg("a"), py::arg("b"))
        .def_static("computational_vs_dft", &BasisPair::computational_vs_dft, py::arg("d"))
        .def_static("computational_vs_hadamard", &BasisPair::computational_vs_hadamard)
        .def_property_readonly("dim", &BasisPair::dim)
        .def("measure_a", &BasisPair::measure_a, py::arg("state"))
        .def("measure_b", &BasisPair::measure_b, py::arg("state"));

    m.def("overlap_f", &overlap_f, py::arg("pair"));
    m.def("x_min", &x_min, py::arg("pair"));

    py::class_<ExcessReport>(m, "ExcessReport")
        .def_readonly("h_a", &ExcessReport::h_a)
        .def_readonly("r_b", &ExcessReport::r_b)
        .def_readonly("x", &ExcessReport::x)
        .def_readonly("bound", &ExcessReport::bound)
        .def_readonly("mu", &ExcessReport::mu)
        .def_readonly("satisfied", &ExcessReport::satisfied)
        .def_readonly("x_partner", &ExcessReport::x_partner);

    m.def("excess_finite", &excess_finite, py::arg("state"), py::arg("pair"));
    m.def("excess_number_phase", &excess_number_phase, py::arg("state"), py::arg("kernel"),
          py::arg("mu") = 1.0, py::arg("grid_k") = 4096);
    m.def("bialynicki_sum", &bialynicki_sum, py::arg("state"), py::arg("grid_k") = 4096);

    py::class_<MuStage>(m, "MuStage")
        .def_readonly("method", &MuStage::method)
        .def_readonly("iterations", &MuStage::iterations)
        .def_readonly("best_ratio", &MuStage::best_ratio);

    py::class_<MuSearchReport>(m, "MuSearchReport")
        .def_readonly("d", &MuSearchReport::d)
        .def_readonly("kernel", &MuSearchReport::kernel)
        .def_readonly("kernel_is_assumption", &MuSearchReport::kernel_is_assumption)
        .def_readonly("seed", &MuSearchReport::seed)
        .def_readonly("budget", &MuSearchReport::budget)
        .def_readonly("grid_k", &MuSearchReport::grid_k)
        .def_readonly("mu_estimate", &MuSearchReport::mu_estimate)
        .def_readonly("certified_floor", &MuSearchReport::certified_floor)
        .def_readonly("tolerance", &MuSearchReport::tolerance)
        .def_readonly("converged", &MuSearchReport::converged)
        .def_readonly("ratio_samples", &MuSearchReport::ratio_samples)
        .def_readonly("stages", &MuSearchReport::stages)
        .def_readonly("argmin_state", &MuSearchReport::argmin_state)
        .def_readonly("audit_samples", &MuSearchReport::audit_samples)
        .def_readonly("audit_min_ratio", &MuSearchReport::audit_min_ratio);

    m.def("mu_objective", &mu_objective, py::arg("state"), py::arg("kernel"),
          py::arg("grid_k") = 4096);
    m.def("search_mu", &search_mu, py::arg("d"), py::arg("kernel"), py::arg("budget"),
          py::arg("seed"), py::arg("grid_k") = 4096, py::arg("audit_samples") = 10000);
    m.def("mu_trend", &mu_trend, py::arg("dims"), py::arg("budget"), py::arg("seed"),
          py::arg("grid_k") = 4096);

    py::class_<AtomicSweepRow>(m, "AtomicSweepRow")
        .def_readonly("alpha_p", &AtomicSweepRow::alpha_p)
        .def_readonly("h_m", &AtomicSweepRow::h_m)
        .def_readonly("r_phi", &AtomicSweepRow::r_phi)
        .def_readonly("mu_r_phi", &AtomicSweepRow::mu_r_phi)
        .def_readonly("x", &AtomicSweepRow::x)
        .def_readonly("x_mu", &AtomicSweepRow::x_mu);

    py::class_<OscillatorSweepRow>(m, "OscillatorSweepRow")
        .def_readonly("alpha", &OscillatorSweepRow::alpha)
        .def_readonly("h_m", &OscillatorSweepRow::h_m)
        .def_readonly("r_phi", &OscillatorSweepRow::r_phi)
        .def_readonly("x", &OscillatorSweepRow::x);

    py::class_<AtomicSweepConfig>(m, "AtomicSweepConfig")
        .def(py::init<>())
        .def_readwrite("d", &AtomicSweepConfig::d)
        .def_readwrite("beta_p", &AtomicSweepConfig::beta_p)
        .def_readwrite("alpha_start", &AtomicSweepConfig::alpha_start)
        .def_readwrite("alpha_stop", &AtomicSweepConfig::alpha_stop)
        .def_readwrite("steps", &AtomicSweepConfig::steps)
        .def_readwrite("kernel", &AtomicSweepConfig::kernel)
        .def_readwrite("mu", &AtomicSweepConfig::mu)
        .def_readwrite("grid_k", &AtomicSweepConfig::grid_k);

    py::class_<OscillatorSweepConfig>(m, "OscillatorSweepConfig")
        .def(py::init<>())
        .def_readwrite("alpha_start", &OscillatorSweepConfig::alpha_start)
        .def_readwrite("alpha_stop", &OscillatorSweepConfig::alpha_stop)
        .def_readwrite("steps", &OscillatorSweepConfig::steps)
        .def_readwrite("tail_tol", &OscillatorSweepConfig::tail_tol)
        .def_readwrite("grid_k", &OscillatorSweepConfig::grid_k);

    m.def("run_atomic_sweep", &run_atomic_sweep, py::arg("config"));
    m.def("run_oscillator_sweep", &run_oscillator_sweep, py::arg("config"));

    m.def("state_to_json_text",
          [](const QuantumState& state) { return state_to_json(state).dump(); },
          py::arg("state"));
    m.def("state_from_json_text", &state_from_json_text, py::arg("text"));
    m.def("excess_to_json_text",
          [](const ExcessReport& report) { return excess_to_json(report).dump(); },
          py::arg("report"));
    m.def("mu_report_to_json_text",
          [](const MuSearchReport& report) { return mu_report_to_json(report).dump(); },
          py::arg("report"));
}
