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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "numphase/distributions.hpp"

using namespace numphase;

TEST_CASE("canonical kernel weights every matrix element equally") {
    const PhaseKernel kernel = PhaseKernel::canonical(5);
    CHECK(kernel.kind() == KernelKind::Canonical);
    for (int m = 0; m < 5; ++m) {
        for (int n = 0; n < 5; ++n) CHECK(kernel.weight(m, n) == 1.0);
    }
}

TEST_CASE("su2 kernel diagonal is exactly one") {
    for (int d = 1; d <= 64; ++d) {
        const PhaseKernel kernel = PhaseKernel::su2(d);
        for (int k = 0; k < d; ++k) {
            CHECK(kernel.weight(k, k) == 1.0);
            // The literal Beta-function formula agrees to roundoff.
            CHECK(std::abs(su2_weight(d, k, k) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("su2 kernel matches the Beta-function formula off the diagonal") {
    // d=3, offset-1 entry: 3 sqrt(2) B(5/2, 3/2) = 3 sqrt(2) pi / 16.
    CHECK(std::abs(su2_weight(3, 1, 0) - 0.833040550904694) <= 1e-12);
    CHECK(std::abs(su2_weight(3, 1, 0) - 3.0 * std::sqrt(2.0) * M_PI / 16.0) <= 1e-12);
    const PhaseKernel kernel = PhaseKernel::su2(4);
    for (int m = 0; m < 4; ++m) {
        for (int n = 0; n < 4; ++n) {
            CHECK(kernel.weight(m, n) == kernel.weight(n, m));
            if (m != n) {
                CHECK(kernel.weight(m, n) > 0.0);
                CHECK(kernel.weight(m, n) < 1.0);
                CHECK(kernel.weight(m, n) == doctest::Approx(su2_weight(4, m, n)));
            }
        }
    }
    // Damping grows with distance from the diagonal.
    CHECK(kernel.weight(0, 2) < kernel.weight(0, 1));
    CHECK(kernel.weight(0, 3) < kernel.weight(0, 2));
}

TEST_CASE("number distribution reads the diagonal and clips noise") {
    const QuantumState state = make_glauber_coherent(Complex(2.0, 0.0));
    const NumberDistribution dist = number_distribution(state);
    CHECK(dist.size() == state.dim());
    CHECK(dist.truncation_loss <= 1e-12);
    CHECK(std::abs(dist.prob(4) - 0.19536681481316456) <= 1e-12);
    CHECK(dist.mass() == doctest::Approx(1.0).epsilon(1e-12));

    NumberDistribution noisy;
    noisy.p = {0.5, -1e-15, 0.5};
    CHECK(noisy.prob(1) == 0.0);
    CHECK(noisy.mass() == doctest::Approx(1.0));
}

TEST_CASE("number states have a flat phase distribution") {
    for (StateKind kind : {StateKind::Atomic, StateKind::TruncatedOscillator}) {
        const QuantumState state = make_fock(3, 6, kind);
        for (KernelKind kk : {KernelKind::Canonical, KernelKind::SU2}) {
            const PhaseKernel kernel =
                kk == KernelKind::SU2 ? PhaseKernel::su2(6) : PhaseKernel::canonical(6);
            const PhaseDistribution dist = phase_distribution(state, kernel, 128);
            for (int k = 0; k < dist.grid_k; ++k) {
                CHECK(std::abs(dist.density(k) - 1.0 / (2.0 * M_PI)) <= 1e-15);
            }
            CHECK(dist.integral() == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("equatorial qubit phase distribution is a shifted cosine") {
    const QuantumState state = make_equatorial(0.0);
    const PhaseDistribution canonical =
        phase_distribution(state, PhaseKernel::canonical(2), 256);
    const PhaseDistribution su2 = phase_distribution(state, PhaseKernel::su2(2), 256);
    const double g = su2_weight(2, 0, 1);  // pi/4
    CHECK(std::abs(g - M_PI / 4.0) <= 1e-13);
    for (int k = 0; k < 256; ++k) {
        const double theta = canonical.node(k);
        CHECK(std::abs(canonical.density(k) - (1.0 + std::cos(theta)) / (2.0 * M_PI)) <= 1e-13);
        CHECK(std::abs(su2.density(k) - (1.0 + g * std::cos(theta)) / (2.0 * M_PI)) <= 1e-13);
    }
    CHECK(canonical.integral() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(su2.integral() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("azimuth rotation translates the phase distribution") {
    const int K = 256;
    const int shift = 17;
    const double beta = 2.0 * M_PI * static_cast<double>(shift) / K;
    const PhaseKernel kernel = PhaseKernel::su2(4);
    const PhaseDistribution base =
        phase_distribution(make_atomic_coherent(1.0, 0.0, 4), kernel, K);
    const PhaseDistribution moved =
        phase_distribution(make_atomic_coherent(1.0, beta, 4), kernel, K);
    for (int k = 0; k < K; ++k) {
        CHECK(std::abs(moved.density((k + shift) % K) - base.density(k)) <= 1e-12);
    }
}

TEST_CASE("truncated states integrate to their kept mass") {
    const QuantumState state = make_glauber_coherent(Complex(1.0, 0.0), CutoffPolicy::fixed(1));
    const PhaseDistribution dist = phase_distribution(state, PhaseKernel::canonical(2), 128);
    CHECK(dist.truncation_loss == doctest::Approx(1.0 - 2.0 / M_E).epsilon(1e-12));
    CHECK(dist.integral() == doctest::Approx(2.0 / M_E).epsilon(1e-12));
}

TEST_CASE("phase grid is validated and auto-raised") {
    const QuantumState small = make_equatorial(0.0);
    CHECK_THROWS_AS(phase_distribution(small, PhaseKernel::canonical(2), 63),
                    std::invalid_argument);
    CHECK_THROWS_AS(phase_distribution(small, PhaseKernel::canonical(2), 130 + 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(phase_distribution(small, PhaseKernel::canonical(2), 32),
                    std::invalid_argument);

    const QuantumState wide = make_random_pure(7, 40);
    const PhaseDistribution dist = phase_distribution(wide, PhaseKernel::canonical(40), 64);
    CHECK(dist.grid_k == 80);  // raised to 2 * dim
    CHECK(dist.integral() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernel and state dimensions must agree") {
    const QuantumState state = make_equatorial(0.0);
    CHECK_THROWS_AS(phase_distribution(state, PhaseKernel::su2(3), 128),
                    std::invalid_argument);
}

TEST_CASE("non-Hermitian matrices are rejected by the residue check") {
    Matrix bad(2, 2);
    bad << Complex(0.5, 0.0), Complex(0.0, 0.3), Complex(0.0, 0.3), Complex(0.5, 0.0);
    CHECK_THROWS_AS(phase_distribution_of_matrix(bad, PhaseKernel::canonical(2), 128, 0.0),
                    std::invalid_argument);
    // The Hermitian counterpart sails through.
    Matrix good(2, 2);
    good << Complex(0.5, 0.0), Complex(0.0, 0.3), Complex(0.0, -0.3), Complex(0.5, 0.0);
    CHECK_NOTHROW(phase_distribution_of_matrix(good, PhaseKernel::canonical(2), 128, 0.0));
}

TEST_CASE("quadrature is exact for the trigonometric polynomial") {
    // The same distribution on two grids matches node-for-node where the
    // grids coincide, and both integrate to one.
    const QuantumState state = make_random_pure(11, 6);
    const PhaseKernel kernel = PhaseKernel::su2(6);
    const PhaseDistribution coarse = phase_distribution(state, kernel, 128);
    const PhaseDistribution fine = phase_distribution(state, kernel, 256);
    for (int k = 0; k < 128; ++k) {
        CHECK(std::abs(coarse.density(k) - fine.density(2 * k)) <= 1e-14);
    }
    CHECK(std::abs(coarse.integral() - fine.integral()) <= 1e-14);
}
