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

#include <vector>

#include <Eigen/Dense>

#include "numphase/state.hpp"

namespace numphase {

/// Discrete number statistics p(m) = Re rho_mm.
struct NumberDistribution {
    std::vector<double> p;
    double truncation_loss = 0.0;

    int size() const { return static_cast<int>(p.size()); }
    /// p(m) with sub-noise negatives clipped to zero.
    double prob(int m) const { return p[static_cast<std::size_t>(m)] < 0.0 ? 0.0 : p[static_cast<std::size_t>(m)]; }
    double mass() const;
};

enum class KernelKind { Canonical, SU2 };

/// Weights G_mn applied to rho_mn e^{i(n-m)theta} in the phase
/// distribution. Canonical sets every entry to 1; SU2 damps the
/// off-diagonals with the coherent-state marginal weights. The diagonal
/// is exactly 1 in both cases, which fixes the normalization.
class PhaseKernel {
public:
    static PhaseKernel canonical(int dim);
    static PhaseKernel su2(int d);

    int dim() const { return static_cast<int>(g_.rows()); }
    KernelKind kind() const { return kind_; }
    double weight(int m, int n) const { return g_(m, n); }
    const Eigen::MatrixXd& weights() const { return g_; }

private:
    PhaseKernel(Eigen::MatrixXd g, KernelKind kind) : g_(std::move(g)), kind_(kind) {}
    Eigen::MatrixXd g_;
    KernelKind kind_;
};

/// Raw SU(2) kernel entry (2j+1) sqrt(C(2j,j+m) C(2j,j+n)) B(j-(m+n)/2+1, j+(m+n)/2+1)
/// for row/col indices in 0..d-1 (m = row - j). Exposed so the Beta-identity
/// on the diagonal can be checked against the literal formula.
double su2_weight(int d, int row, int col);

/// Periodic density sampled on theta_k = 2 pi k / K, k = 0..K-1.
struct PhaseDistribution {
    int grid_k = 0;
    std::vector<double> values;
    double truncation_loss = 0.0;

    double node(int k) const;
    /// Density at node k with quadrature-noise negatives clipped to zero.
    double density(int k) const { return values[static_cast<std::size_t>(k)] < 0.0 ? 0.0 : values[static_cast<std::size_t>(k)]; }
    /// Trapezoidal integral over one period (exact for trigonometric
    /// polynomials of degree < K/2).
    double integral() const;
};

NumberDistribution number_distribution(const QuantumState& state);

/// P(theta_k) = (1/2pi) sum_{m,n} G_mn rho_mn e^{i(n-m)theta_k}.
/// K must be even and >= 64; it is raised to 2*dim when too small for
/// the trapezoid rule to integrate the result exactly. An imaginary
/// residue above 1e-8 signals a non-Hermitian matrix and throws.
PhaseDistribution phase_distribution(const QuantumState& state, const PhaseKernel& kernel,
                                     int grid_k = 4096);

/// Same, for a raw matrix that has not passed QuantumState validation.
PhaseDistribution phase_distribution_of_matrix(const Matrix& rho, const PhaseKernel& kernel,
                                               int grid_k, double truncation_loss = 0.0);

}  // namespace numphase
