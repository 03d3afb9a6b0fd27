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

#include "numphase/distributions.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

namespace numphase {

namespace {

constexpr double kImaginaryResidueTol = 1e-8;
constexpr int kMinGrid = 64;

int effective_grid(int grid_k, int dim) {
    if (grid_k < kMinGrid || grid_k % 2 != 0) {
        throw std::invalid_argument("phase grid size must be even and >= 64");
    }
    if (grid_k < 2 * dim) {
        std::cerr << "numphase: raising phase grid from " << grid_k << " to " << 2 * dim
                  << " so the quadrature stays exact for dim " << dim << "\n";
        return 2 * dim;
    }
    return grid_k;
}

}  // namespace

double NumberDistribution::mass() const {
    double s = 0.0;
    for (int m = 0; m < size(); ++m) s += prob(m);
    return s;
}

double PhaseDistribution::node(int k) const {
    return 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(grid_k);
}

double PhaseDistribution::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * 2.0 * M_PI / static_cast<double>(grid_k);
}

PhaseKernel PhaseKernel::canonical(int dim) {
    if (dim < 1) throw std::invalid_argument("kernel dimension must be >= 1");
    return PhaseKernel(Eigen::MatrixXd::Ones(dim, dim), KernelKind::Canonical);
}

double su2_weight(int d, int row, int col) {
    if (d < 1 || row < 0 || col < 0 || row >= d || col >= d) {
        throw std::invalid_argument("su2_weight indices out of range");
    }
    // With j = (d-1)/2 and m = row - j, n = col - j the Beta arguments
    // j - (m+n)/2 + 1 and j + (m+n)/2 + 1 reduce to the forms below.
    const double a = static_cast<double>(d) - 0.5 * (row + col);
    const double b = 0.5 * (row + col) + 1.0;
    const double log_choose_row = std::lgamma(static_cast<double>(d)) -
                                  std::lgamma(static_cast<double>(row) + 1.0) -
                                  std::lgamma(static_cast<double>(d - row));
    const double log_choose_col = std::lgamma(static_cast<double>(d)) -
                                  std::lgamma(static_cast<double>(col) + 1.0) -
                                  std::lgamma(static_cast<double>(d - col));
    const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(static_cast<double>(d) + 1.0);
    return std::exp(std::log(static_cast<double>(d)) +
                    0.5 * (log_choose_row + log_choose_col) + log_beta);
}

PhaseKernel PhaseKernel::su2(int d) {
    if (d < 1) throw std::invalid_argument("kernel dimension must be >= 1");
    Eigen::MatrixXd g(d, d);
    for (int r = 0; r < d; ++r) {
        // The diagonal is 1 identically (the Beta factor cancels the
        // binomial ones); pin it so normalization is exact, not 1 +- ulp.
        g(r, r) = 1.0;
        for (int c = r + 1; c < d; ++c) {
            const double w = su2_weight(d, r, c);
            g(r, c) = w;
            g(c, r) = w;
        }
    }
    return PhaseKernel(std::move(g), KernelKind::SU2);
}

NumberDistribution number_distribution(const QuantumState& state) {
    NumberDistribution dist;
    dist.truncation_loss = state.truncation_loss();
    dist.p.resize(static_cast<std::size_t>(state.dim()));
    for (int m = 0; m < state.dim(); ++m) {
        dist.p[static_cast<std::size_t>(m)] = state.matrix()(m, m).real();
    }
    return dist;
}

PhaseDistribution phase_distribution_of_matrix(const Matrix& rho, const PhaseKernel& kernel,
                                               int grid_k, double truncation_loss) {
    const int dim = static_cast<int>(rho.rows());
    if (rho.cols() != dim || dim < 1) {
        throw std::invalid_argument("phase distribution needs a square matrix");
    }
    if (kernel.dim() != dim) {
        throw std::invalid_argument("kernel dimension " + std::to_string(kernel.dim()) +
                                    " does not match state dimension " + std::to_string(dim));
    }
    const int K = effective_grid(grid_k, dim);

    // Group the double sum by diagonal offset s = n - m. For Hermitian
    // input the lower coefficients are conjugates of the upper ones; both
    // are kept so a non-Hermitian matrix shows up as an imaginary residue
    // instead of being silently symmetrized.
    std::vector<Complex> upper(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
    std::vector<Complex> lower(static_cast<std::size_t>(dim), Complex(0.0, 0.0));
    for (int s = 0; s < dim; ++s) {
        Complex up(0.0, 0.0), lo(0.0, 0.0);
        for (int m = 0; m + s < dim; ++m) {
            up += kernel.weight(m, m + s) * rho(m, m + s);
            lo += kernel.weight(m + s, m) * rho(m + s, m);
        }
        upper[static_cast<std::size_t>(s)] = up;
        lower[static_cast<std::size_t>(s)] = lo;
    }

    PhaseDistribution dist;
    dist.grid_k = K;
    dist.truncation_loss = truncation_loss;
    dist.values.resize(static_cast<std::size_t>(K));
    double residue = 0.0;
    const double norm = 1.0 / (2.0 * M_PI);
    for (int k = 0; k < K; ++k) {
        const double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(K);
        const Complex w = std::polar(1.0, theta);
        Complex pw(1.0, 0.0);  // w^s, built up incrementally
        Complex value = upper[0];
        for (int s = 1; s < dim; ++s) {
            pw *= w;
            value += upper[static_cast<std::size_t>(s)] * pw +
                     lower[static_cast<std::size_t>(s)] * std::conj(pw);
        }
        value *= norm;
        residue = std::max(residue, std::abs(value.imag()));
        dist.values[static_cast<std::size_t>(k)] = value.real();
    }
    if (residue > kImaginaryResidueTol) {
        throw std::invalid_argument("phase distribution has imaginary residue " +
                                    std::to_string(residue) + "; matrix is not Hermitian");
    }
    return dist;
}

PhaseDistribution phase_distribution(const QuantumState& state, const PhaseKernel& kernel,
                                     int grid_k) {
    return phase_distribution_of_matrix(state.matrix(), kernel, grid_k,
                                        state.truncation_loss());
}

}  // namespace numphase
