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

#include "numphase/distributions.hpp"
#include "numphase/entropy.hpp"
#include "numphase/state.hpp"

namespace numphase {

/// Two orthonormal bases of the same finite dimension, stored as column
/// matrices. Construction checks unitarity to 1e-12.
class BasisPair {
public:
    BasisPair(Matrix a, Matrix b);

    /// Computational basis vs. the unitary DFT basis (an MUB pair for
    /// every d).
    static BasisPair computational_vs_dft(int d);
    /// Computational basis vs. the Hadamard basis (d = 2).
    static BasisPair computational_vs_hadamard();

    int dim() const { return static_cast<int>(a_.rows()); }
    const Matrix& a() const { return a_; }
    const Matrix& b() const { return b_; }

    /// Outcome distribution of measuring `state` in basis A (resp. B).
    std::vector<double> measure_a(const QuantumState& state) const;
    std::vector<double> measure_b(const QuantumState& state) const;

private:
    Matrix a_, b_;
};

/// f(A,B) = max_{a,b} |<a|b>|, in [d^{-1/2}, 1].
double overlap_f(const BasisPair& pair);

/// Degree of complementarity 2 log2(1/f) - log2 d, in [-log2 d, 0].
/// 0 for an MUB pair, -log2 d for identical bases.
double x_min(const BasisPair& pair);

/// One evaluated entropy-excess inequality: X = H_A - mu * R_B against
/// the applicable lower bound.
struct ExcessReport {
    double h_a = 0.0;
    double r_b = 0.0;
    double x = 0.0;
    double bound = 0.0;
    double mu = 1.0;
    bool satisfied = false;
    /// X(B,A) for the finite-dimensional case (equal to X(A,B) up to
    /// roundoff); unused for number-phase reports.
    double x_partner = 0.0;
};

/// Finite-dimensional excess X(A,B) = H(A) - R(B) with bound x_min(pair).
/// Satisfaction tolerance 1e-9 (exact arithmetic, no quadrature).
ExcessReport excess_finite(const QuantumState& state, const BasisPair& pair);

/// Number-phase excess X^mu = H[m] - mu R[phi] with bound 0.
/// Satisfaction tolerance 1e-6 (quadrature involved).
ExcessReport excess_number_phase(const QuantumState& state, const PhaseKernel& kernel,
                                 double mu = 1.0, int grid_k = 4096);

/// Differential phase entropy plus number entropy for an oscillator
/// state with the canonical kernel; the caller checks >= log2(2 pi).
double bialynicki_sum(const QuantumState& state, int grid_k = 4096);

}  // namespace numphase
