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

#pragma once

#include <iosfwd>
#include <vector>

#include "numphase/distributions.hpp"

namespace numphase {

/// One point of the atomic coherent-state sweep.
struct AtomicSweepRow {
    double alpha_p;
    double h_m;
    double r_phi;
    double mu_r_phi;
    double x;
    double x_mu;
};

/// One point of the oscillator coherent-state sweep.
struct OscillatorSweepRow {
    double alpha;
    double h_m;
    double r_phi;
    double x;
};

struct AtomicSweepConfig {
    int d = 2;
    double beta_p = 0.0;
    double alpha_start = 0.0;
    double alpha_stop = 3.14159265358979323846;
    int steps = 181;
    KernelKind kernel = KernelKind::SU2;
    double mu = 4.085;
    int grid_k = 4096;
};

struct OscillatorSweepConfig {
    double alpha_start = 0.0;
    double alpha_stop = 3.0;
    int steps = 61;
    double tail_tol = 1e-12;
    int grid_k = 4096;
};

std::vector<AtomicSweepRow> run_atomic_sweep(const AtomicSweepConfig& cfg);
std::vector<OscillatorSweepRow> run_oscillator_sweep(const OscillatorSweepConfig& cfg);

/// Header "alpha_p,H_m,R_phi,mu_R_phi,X,X_mu", 17 significant digits.
void write_atomic_sweep_csv(std::ostream& out, const std::vector<AtomicSweepRow>& rows);
/// Header "alpha,H_m,R_phi,X", 17 significant digits.
void write_oscillator_sweep_csv(std::ostream& out, const std::vector<OscillatorSweepRow>& rows);

}  // namespace numphase
