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

#include "numphase/state.hpp"

using namespace numphase;

TEST_CASE("fock states are valid projectors") {
    const QuantumState state = make_fock(2, 4);
    CHECK(state.dim() == 4);
    CHECK(state.kind() == StateKind::Atomic);
    CHECK(state.trace_real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(state.purity() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(state.matrix()(2, 2).real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(state.truncation_loss() == 0.0);
    CHECK_THROWS_AS(make_fock(4, 4), std::invalid_argument);
    CHECK_THROWS_AS(make_fock(-1, 4), std::invalid_argument);
}

TEST_CASE("glauber coherent state has Poissonian diagonal") {
    const QuantumState state = make_glauber_coherent(Complex(2.0, 0.0));
    CHECK(state.kind() == StateKind::TruncatedOscillator);
    CHECK(state.declared_mean() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(state.truncation_loss() <= 1e-12);
    CHECK(state.trace_real() == doctest::Approx(1.0 - state.truncation_loss()).epsilon(1e-14));
    // Diagonal entries against the Poisson law e^{-4} 4^m / m!.
    double expected = std::exp(-4.0);
    for (int m = 0; m < state.dim(); ++m) {
        CHECK(std::abs(state.matrix()(m, m).real() - expected) <= 1e-12);
        expected *= 4.0 / static_cast<double>(m + 1);
    }
    CHECK(std::abs(state.matrix()(4, 4).real() - 0.19536681481316456) <= 1e-12);
}

TEST_CASE("glauber phase enters through the off-diagonals") {
    const QuantumState state = make_glauber_coherent(Complex(0.0, 1.5));
    // rho_{01} = c_0 conj(c_1) with c_m carrying phase m * arg(alpha).
    const Complex entry = state.matrix()(0, 1);
    CHECK(std::arg(entry) == doctest::Approx(-M_PI / 2.0).epsilon(1e-12));
    CHECK(state.declared_mean() == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("fixed cutoff records the discarded mass") {
    const QuantumState state = make_glauber_coherent(Complex(1.0, 0.0), CutoffPolicy::fixed(1));
    CHECK(state.dim() == 2);
    CHECK(state.truncation_loss() == doctest::Approx(1.0 - 2.0 / M_E).epsilon(1e-12));
    CHECK(state.trace_real() == doctest::Approx(2.0 / M_E).epsilon(1e-12));
    CHECK_THROWS_AS(CutoffPolicy::fixed(0), std::invalid_argument);
    CHECK_THROWS_AS(CutoffPolicy::automatic(0.0), std::invalid_argument);
}

TEST_CASE("automatic cutoff keeps the Poisson tail below tolerance") {
    int previous = 0;
    for (double mean : {0.0, 0.25, 1.0, 2.0, 4.0, 9.0}) {
        const int cutoff = detail::auto_cutoff(mean, 1e-12);
        CHECK(cutoff >= previous);
        previous = cutoff;
        // Direct tail evaluation at the returned cutoff.
        double kept = 0.0;
        for (int n = 0; n <= cutoff; ++n) {
            kept += std::exp(-mean + n * (mean > 0.0 ? std::log(mean) : 0.0) -
                             detail::log_factorial(n));
        }
        CHECK(1.0 - kept <= 1e-12 + 1e-15);
    }
    // Looser tolerance allows a smaller basis.
    CHECK(detail::auto_cutoff(4.0, 1e-3) < detail::auto_cutoff(4.0, 1e-12));
}

TEST_CASE("atomic coherent state has binomial number statistics") {
    const QuantumState state = make_atomic_coherent(M_PI / 2.0, 0.0, 4);
    const double expected[4] = {1.0 / 8.0, 3.0 / 8.0, 3.0 / 8.0, 1.0 / 8.0};
    for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(state.matrix()(k, k).real() - expected[k]) <= 1e-12);
    }
    // Poles are number states.
    const QuantumState north = make_atomic_coherent(0.0, 0.3, 5);
    CHECK(north.matrix()(0, 0).real() == doctest::Approx(1.0).epsilon(1e-14));
    const QuantumState south = make_atomic_coherent(M_PI, 0.3, 5);
    CHECK(south.matrix()(4, 4).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(make_atomic_coherent(-0.1, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_atomic_coherent(3.5, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_atomic_coherent(1.0, 0.0, 1), std::invalid_argument);
}

TEST_CASE("equatorial qubit matches its hand-built matrix") {
    const QuantumState state = make_equatorial(0.7);
    CHECK(state.dim() == 2);
    CHECK(state.matrix()(0, 0).real() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(state.matrix()(1, 1).real() == doctest::Approx(0.5).epsilon(1e-14));
    const Complex off = state.matrix()(0, 1);
    CHECK(std::abs(off) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::arg(off) == doctest::Approx(-0.7).epsilon(1e-12));
}

TEST_CASE("random pure states are reproducible and Haar-seeded") {
    const QuantumState a = make_random_pure(42, 5);
    const QuantumState b = make_random_pure(42, 5);
    const QuantumState c = make_random_pure(43, 5);
    CHECK((a.matrix() - b.matrix()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.matrix() - c.matrix()).cwiseAbs().maxCoeff() > 1e-3);
    CHECK(a.purity() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.trace_real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mix forms convex combinations and validates its inputs") {
    const QuantumState zero = make_fock(0, 2);
    const QuantumState one = make_fock(1, 2);
    const QuantumState mixed = mix({zero, one}, {0.25, 0.75});
    CHECK(mixed.matrix()(0, 0).real() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(mixed.matrix()(1, 1).real() == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(mixed.purity() < 1.0);

    CHECK_THROWS_AS(mix({zero, one}, {0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(mix({zero, one}, {1.5, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(mix({zero}, {0.5, 0.5}), std::invalid_argument);
    const QuantumState osc = make_fock(0, 2, StateKind::TruncatedOscillator);
    CHECK_THROWS_AS(mix({zero, osc}, {0.5, 0.5}), std::invalid_argument);
    const QuantumState wide = make_fock(0, 3);
    CHECK_THROWS_AS(mix({zero, wide}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("validation rejects malformed density matrices") {
    Matrix bad(2, 2);
    bad << Complex(0.5, 0.0), Complex(0.1, 0.2), Complex(0.1, 0.2), Complex(0.5, 0.0);
    CHECK_THROWS_AS(QuantumState::atomic(bad), std::invalid_argument);  // not Hermitian

    Matrix indefinite(2, 2);
    indefinite << Complex(1.5, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(-0.5, 0.0);
    CHECK_THROWS_AS(QuantumState::atomic(indefinite), std::invalid_argument);

    Matrix scaled(2, 2);
    scaled << Complex(0.45, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(0.45, 0.0);
    CHECK_THROWS_AS(QuantumState::atomic(scaled), std::invalid_argument);  // trace 0.9

    // The same matrix is fine as an oscillator state once the missing
    // mass is declared.
    CHECK_NOTHROW(QuantumState::truncated_oscillator(scaled, 0.1, 0.45));
    CHECK_THROWS_AS(QuantumState::truncated_oscillator(scaled, -0.1, 0.0),
                    std::invalid_argument);

    // Tiny negative eigenvalues within the floor are accepted.
    Matrix nearly(2, 2);
    nearly << Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(-5e-11, 0.0);
    CHECK_NOTHROW(QuantumState::truncated_oscillator(nearly, 5e-11, 0.0));
}

TEST_CASE("unnormalized amplitudes need a matching loss declaration") {
    Vector c(2);
    c << Complex(0.6, 0.0), Complex(0.6, 0.0);  // norm^2 = 0.72
    CHECK_THROWS_AS(pure_state_from_amplitudes(c, StateKind::Atomic), std::invalid_argument);
    CHECK_NOTHROW(
        pure_state_from_amplitudes(c, StateKind::TruncatedOscillator, 1.0 - 0.72, 0.36));
}
