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

#include "numphase/complementarity.hpp"

using namespace numphase;

TEST_CASE("DFT basis pair is mutually unbiased in every dimension") {
    for (int d = 2; d <= 16; ++d) {
        const BasisPair pair = BasisPair::computational_vs_dft(d);
        CHECK(pair.dim() == d);
        CHECK(std::abs(overlap_f(pair) - 1.0 / std::sqrt(static_cast<double>(d))) <= 1e-12);
        CHECK(std::abs(x_min(pair)) <= 1e-12);
    }
}

TEST_CASE("identical bases give the most negative bound") {
    const Matrix id = Matrix::Identity(4, 4);
    const BasisPair pair(id, id);
    CHECK(overlap_f(pair) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(x_min(pair) + 2.0) <= 1e-12);  // -log2(4)
}

TEST_CASE("intermediate overlap reproduces the closed-form bound") {
    // Rotate the second qubit basis so the largest overlap is 0.9.
    const double c = 0.9;
    const double s = std::sqrt(1.0 - c * c);
    Matrix b(2, 2);
    b << Complex(c, 0.0), Complex(-s, 0.0), Complex(s, 0.0), Complex(c, 0.0);
    const BasisPair pair(Matrix::Identity(2, 2), b);
    CHECK(std::abs(overlap_f(pair) - 0.9) <= 1e-12);
    CHECK(std::abs(x_min(pair) - (-0.695993813109900)) <= 1e-12);
}

TEST_CASE("hadamard pair is the d=2 DFT pair") {
    const BasisPair h = BasisPair::computational_vs_hadamard();
    CHECK(std::abs(overlap_f(h) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(std::abs(x_min(h)) <= 1e-12);
}

TEST_CASE("basis pair construction validates unitarity and dimensions") {
    Matrix bad(2, 2);
    bad << Complex(1.0, 0.0), Complex(0.1, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0);
    CHECK_THROWS_AS(BasisPair(bad, Matrix::Identity(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(BasisPair(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                    std::invalid_argument);
    const BasisPair pair = BasisPair::computational_vs_dft(3);
    CHECK_THROWS_AS(pair.measure_a(make_equatorial(0.0)), std::invalid_argument);
}

TEST_CASE("number state against an MUB pair saturates the excess bound") {
    const BasisPair pair = BasisPair::computational_vs_dft(4);
    const ExcessReport rep = excess_finite(make_fock(1, 4), pair);
    CHECK(std::abs(rep.h_a) <= 1e-12);      // sharp in basis A
    CHECK(std::abs(rep.r_b) <= 1e-12);      // flat in basis B
    CHECK(std::abs(rep.x) <= 1e-12);
    CHECK(std::abs(rep.bound) <= 1e-12);
    CHECK(rep.satisfied);
    CHECK(std::abs(rep.x - rep.x_partner) <= 1e-12);
}

TEST_CASE("excess is nonnegative and direction-symmetric over random states") {
    for (int d : {2, 3, 4, 5}) {
        const BasisPair pair = BasisPair::computational_vs_dft(d);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            const QuantumState state = make_random_pure(seed * 7919 + d, d);
            const ExcessReport rep = excess_finite(state, pair);
            CHECK(rep.x >= rep.bound - 1e-9);
            CHECK(rep.satisfied);
            CHECK(std::abs(rep.x - rep.x_partner) <= 1e-9);
        }
    }
}

TEST_CASE("number-phase excess at the equator matches the scaled knowledge") {
    const QuantumState eq = make_equatorial(0.0);
    const PhaseKernel kernel = PhaseKernel::su2(2);
    const ExcessReport plain = excess_number_phase(eq, kernel, 1.0, 4096);
    CHECK(plain.h_a == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(plain.r_b - 0.244774819854308) <= 1e-9);
    CHECK(plain.x == doctest::Approx(plain.h_a - plain.r_b).epsilon(1e-12));
    CHECK(plain.satisfied);

    // Scaling by 1/R makes the excess vanish.
    const double mu_star = 4.085387543519415;
    const ExcessReport scaled = excess_number_phase(eq, kernel, mu_star, 4096);
    CHECK(std::abs(scaled.x) <= 1e-6);
    CHECK(scaled.satisfied);
    CHECK(scaled.mu == mu_star);
}

TEST_CASE("vacuum saturates the oscillator entropy-sum floor") {
    const QuantumState vacuum = make_glauber_coherent(Complex(0.0, 0.0));
    CHECK(vacuum.dim() == 1);
    CHECK(std::abs(bialynicki_sum(vacuum, 4096) - log2_two_pi()) <= 1e-9);
}

TEST_CASE("coherent states sit above the entropy-sum floor") {
    for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
        const QuantumState state = make_glauber_coherent(Complex(alpha, 0.0));
        CHECK(bialynicki_sum(state, 4096) >= log2_two_pi() - 1e-6);
    }
}

TEST_CASE("entropy-sum check is only defined for oscillator states") {
    CHECK_THROWS_AS(bialynicki_sum(make_equatorial(0.0), 4096), std::invalid_argument);
}
