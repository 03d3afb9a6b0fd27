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

#include <span>

#include "numphase/distributions.hpp"

namespace numphase {

// All entropic values are in bits. Natural-log intermediates never leak
// through this interface.

enum class EntropyFunctional { HDiscrete, RDiscrete, RPhase, HPhaseDifferential };

struct EntropyValue {
    double bits = 0.0;
    EntropyFunctional functional = EntropyFunctional::HDiscrete;
    /// Probability mass the input was missing (renormalized away before
    /// the functional was evaluated); 0 for exact distributions.
    double loss = 0.0;
};

/// Shannon entropy H = -sum p log2 p, with 0 log 0 := 0. Inputs summing
/// to 1 - loss < 1 are renormalized and the loss recorded.
EntropyValue shannon_entropy(std::span<const double> p);
EntropyValue shannon_entropy(const NumberDistribution& dist);

/// Knowledge of a discrete distribution relative to uniform over d
/// outcomes: R = sum p log2(d p) = log2 d - H.
EntropyValue knowledge_discrete(std::span<const double> p, int d);

/// Phase knowledge R[P] = integral P log2(2 pi P) dtheta over one
/// period, trapezoid rule on the stored grid. Values below -1e-9 are
/// rejected as quadrature failures; smaller negatives clip to 0.
EntropyValue knowledge_phase(const PhaseDistribution& dist);

/// Differential phase entropy -integral P log2 P dtheta. Checks the
/// identity h = log2(2 pi) - R[P] to 1e-9 before returning.
EntropyValue differential_phase_entropy(const PhaseDistribution& dist);

/// log2(2 pi), the uniform-phase differential entropy.
double log2_two_pi();

}  // namespace numphase
