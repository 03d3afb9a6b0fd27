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

#include "numphase/sweeps.hpp"

#include <ostream>
#include <stdexcept>

#include "numphase/entropy.hpp"
#include "numphase/serialize.hpp"
#include "numphase/state.hpp"

namespace numphase {

namespace {

double grid_point(double start, double stop, int steps, int i) {
    if (steps == 1) return start;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

}  // namespace

std::vector<AtomicSweepRow> run_atomic_sweep(const AtomicSweepConfig& cfg) {
    if (cfg.steps < 1) throw std::invalid_argument("sweep needs at least one step");
    if (cfg.d < 2) throw std::invalid_argument("atomic sweep needs d >= 2");
    const PhaseKernel kernel = cfg.kernel == KernelKind::SU2 ? PhaseKernel::su2(cfg.d)
                                                             : PhaseKernel::canonical(cfg.d);
    std::vector<AtomicSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i) {
        const double alpha_p = grid_point(cfg.alpha_start, cfg.alpha_stop, cfg.steps, i);
        const QuantumState state = make_atomic_coherent(alpha_p, cfg.beta_p, cfg.d);
        const double h = shannon_entropy(number_distribution(state)).bits;
        const double r = knowledge_phase(phase_distribution(state, kernel, cfg.grid_k)).bits;
        AtomicSweepRow row;
        row.alpha_p = alpha_p;
        row.h_m = h;
        row.r_phi = r;
        row.mu_r_phi = cfg.mu * r;
        row.x = h - r;
        row.x_mu = h - cfg.mu * r;
        rows.push_back(row);
    }
    return rows;
}

std::vector<OscillatorSweepRow> run_oscillator_sweep(const OscillatorSweepConfig& cfg) {
    if (cfg.steps < 1) throw std::invalid_argument("sweep needs at least one step");
    std::vector<OscillatorSweepRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.steps));
    for (int i = 0; i < cfg.steps; ++i) {
        const double alpha = grid_point(cfg.alpha_start, cfg.alpha_stop, cfg.steps, i);
        const QuantumState state =
            make_glauber_coherent(Complex(alpha, 0.0), CutoffPolicy::automatic(cfg.tail_tol));
        const PhaseKernel kernel = PhaseKernel::canonical(state.dim());
        const double h = shannon_entropy(number_distribution(state)).bits;
        const double r = knowledge_phase(phase_distribution(state, kernel, cfg.grid_k)).bits;
        OscillatorSweepRow row;
        row.alpha = alpha;
        row.h_m = h;
        row.r_phi = r;
        row.x = h - r;
        rows.push_back(row);
    }
    return rows;
}

void write_atomic_sweep_csv(std::ostream& out, const std::vector<AtomicSweepRow>& rows) {
    out << "alpha_p,H_m,R_phi,mu_R_phi,X,X_mu\n";
    for (const auto& row : rows) {
        out << format_g17(row.alpha_p) << ',' << format_g17(row.h_m) << ','
            << format_g17(row.r_phi) << ',' << format_g17(row.mu_r_phi) << ','
            << format_g17(row.x) << ',' << format_g17(row.x_mu) << '\n';
    }
}

void write_oscillator_sweep_csv(std::ostream& out, const std::vector<OscillatorSweepRow>& rows) {
    out << "alpha,H_m,R_phi,X\n";
    for (const auto& row : rows) {
        out << format_g17(row.alpha) << ',' << format_g17(row.h_m) << ','
            << format_g17(row.r_phi) << ',' << format_g17(row.x) << '\n';
    }
}

}  // namespace numphase
