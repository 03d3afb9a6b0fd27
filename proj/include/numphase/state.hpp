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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace numphase {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Basis interpretation of a density matrix: a genuine d-level (atomic)
/// system, or the lowest N+1 Fock levels of an oscillator.
enum class StateKind { Atomic, TruncatedOscillator };

/// Fock-space cutoff selection for oscillator states. Auto picks the
/// smallest cutoff whose discarded tail mass is at most `tail_tol`;
/// Fixed pins the cutoff regardless of the discarded mass.
struct CutoffPolicy {
    enum class Mode { Auto, Fixed };
    Mode mode = Mode::Auto;
    double tail_tol = 1e-12;
    int fixed_n = 0;

    static CutoffPolicy automatic(double tail_tol = 1e-12);
    static CutoffPolicy fixed(int n);
};

/// Validated density matrix in the number (Wigner-Dicke or Fock) basis.
///
/// Construction enforces: Hermiticity to 1e-12 entrywise, eigenvalues
/// >= -1e-10, and trace within [1 - truncation_loss - 1e-12, 1 + 1e-12].
/// Atomic states must additionally have truncation_loss == 0 and unit
/// trace. Instances are immutable; all constructors below are pure
/// functions of their arguments.
class QuantumState {
public:
    static QuantumState atomic(Matrix rho);
    static QuantumState truncated_oscillator(Matrix rho, double truncation_loss,
                                             double declared_mean = 0.0);

    int dim() const { return static_cast<int>(rho_.rows()); }
    const Matrix& matrix() const { return rho_; }
    StateKind kind() const { return kind_; }
    double truncation_loss() const { return truncation_loss_; }
    double declared_mean() const { return declared_mean_; }

    double trace_real() const { return rho_.trace().real(); }
    double purity() const { return (rho_ * rho_).trace().real(); }

private:
    QuantumState(Matrix rho, StateKind kind, double truncation_loss, double declared_mean);
    void validate() const;

    Matrix rho_;
    StateKind kind_;
    double truncation_loss_;
    double declared_mean_;
};

/// Projector onto number state |m> in a dim-level space.
QuantumState make_fock(int m, int dim, StateKind kind = StateKind::Atomic);

/// Truncated Glauber coherent state |alpha>. The matrix keeps the raw
/// amplitudes e^{-|a|^2/2} a^m / sqrt(m!), so trace = 1 - truncation_loss.
QuantumState make_glauber_coherent(Complex alpha, CutoffPolicy policy = CutoffPolicy::automatic());

/// SU(2) (atomic) coherent state |alpha_p, beta_p> of a d-level system,
/// amplitudes c_k = sqrt(C(d-1,k)) cos^{d-1-k}(a/2) sin^k(a/2) e^{i k b}.
QuantumState make_atomic_coherent(double alpha_p, double beta_p, int d);

/// Equatorial qubit (|0> + e^{i phi0} |1>)/sqrt(2).
QuantumState make_equatorial(double phi0);

/// Haar-distributed pure state, bit-identical for identical seeds.
QuantumState make_random_pure(std::uint64_t seed, int d, StateKind kind = StateKind::Atomic);

/// Convex combination. States must share dim and kind; weights must sum
/// to 1 within 1e-12.
QuantumState mix(const std::vector<QuantumState>& states, const std::vector<double>& weights);

/// Rank-1 state from an amplitude vector. The vector need not be
/// normalized when a truncation loss accounts for the missing mass.
QuantumState pure_state_from_amplitudes(const Vector& amplitudes, StateKind kind,
                                        double truncation_loss = 0.0, double declared_mean = 0.0);

namespace detail {
// Smallest cutoff with Poisson tail mass <= tail_tol, capped by the
// ceiling ceil(|a|^2 + 12 sqrt(|a|^2 + 1) + 20).
int auto_cutoff(double mean, double tail_tol);
// log(k!) via lgamma, safe far beyond the double-overflow point of k!.
double log_factorial(int k);
// Haar amplitude vector drawn from a seeded engine.
Vector haar_amplitudes(std::uint64_t seed, int d);
}  // namespace detail

}  // namespace numphase
