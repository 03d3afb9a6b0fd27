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

#include "numphase/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace numphase {

namespace {

// Below this a probability is numerically zero; 0 log 0 := 0.
constexpr double kDensityFloor = 1e-300;
// Entries more negative than this are data errors, not roundoff.
constexpr double kNegativeTol = 1e-9;
constexpr double kIdentityTol = 1e-9;

double clipped(double p) {
    if (p < -kNegativeTol) {
        throw std::invalid_argument("probability " + std::to_string(p) +
                                    " below -1e-9; input is not a distribution");
    }
    return p < kDensityFloor ? 0.0 : p;
}

}  // namespace

double log2_two_pi() { return std::log2(2.0 * M_PI); }

EntropyValue shannon_entropy(std::span<const double> p) {
    if (p.empty()) throw std::invalid_argument("entropy of an empty distribution");
    double mass = 0.0;
    for (double v : p) mass += clipped(v);
    if (mass <= 0.0) throw std::invalid_argument("distribution has no probability mass");
    double h = 0.0;
    for (double v : p) {
        const double q = clipped(v) / mass;
        if (q > 0.0) h -= q * std::log2(q);
    }
    EntropyValue out;
    out.bits = h;
    out.functional = EntropyFunctional::HDiscrete;
    out.loss = mass < 1.0 ? 1.0 - mass : 0.0;
    return out;
}

EntropyValue shannon_entropy(const NumberDistribution& dist) {
    EntropyValue out = shannon_entropy(std::span<const double>(dist.p));
    return out;
}

EntropyValue knowledge_discrete(std::span<const double> p, int d) {
    if (d < 1 || static_cast<std::size_t>(d) < p.size()) {
        throw std::invalid_argument("knowledge needs d >= the number of outcomes");
    }
    EntropyValue h = shannon_entropy(p);
    EntropyValue out;
    out.bits = std::log2(static_cast<double>(d)) - h.bits;
    out.functional = EntropyFunctional::RDiscrete;
    out.loss = h.loss;
    return out;
}

EntropyValue knowledge_phase(const PhaseDistribution& dist) {
    if (dist.grid_k < 1 || dist.values.empty()) {
        throw std::invalid_argument("phase distribution is empty");
    }
    const double step = 2.0 * M_PI / static_cast<double>(dist.grid_k);
    double mass = 0.0;
    for (int k = 0; k < dist.grid_k; ++k) mass += clipped(dist.density(k)) * step;
    if (mass <= 0.0) throw std::invalid_argument("phase distribution has no mass");
    double r = 0.0;
    for (int k = 0; k < dist.grid_k; ++k) {
        const double q = clipped(dist.density(k)) / mass;
        if (q > 0.0) r += q * std::log2(2.0 * M_PI * q) * step;
    }
    if (r < -kNegativeTol) {
        throw std::runtime_error("phase knowledge " + std::to_string(r) +
                                 " below -1e-9; quadrature failed");
    }
    EntropyValue out;
    out.bits = r < 0.0 ? 0.0 : r;
    out.functional = EntropyFunctional::RPhase;
    out.loss = mass < 1.0 ? 1.0 - mass : 0.0;
    return out;
}

EntropyValue differential_phase_entropy(const PhaseDistribution& dist) {
    const EntropyValue r = knowledge_phase(dist);
    const double step = 2.0 * M_PI / static_cast<double>(dist.grid_k);
    double mass = 0.0;
    for (int k = 0; k < dist.grid_k; ++k) mass += clipped(dist.density(k)) * step;
    double h = 0.0;
    for (int k = 0; k < dist.grid_k; ++k) {
        const double q = clipped(dist.density(k)) / mass;
        if (q > 0.0) h -= q * std::log2(q) * step;
    }
    if (std::abs(h - (log2_two_pi() - r.bits)) > kIdentityTol) {
        throw std::runtime_error("differential phase entropy violates h = log2(2 pi) - R");
    }
    EntropyValue out;
    out.bits = h;
    out.functional = EntropyFunctional::HPhaseDifferential;
    out.loss = r.loss;
    return out;
}

}  // namespace numphase
