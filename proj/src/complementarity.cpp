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

#include "numphase/complementarity.hpp"

#include <cmath>
#include <stdexcept>

namespace numphase {

namespace {

constexpr double kUnitarityTol = 1e-12;
constexpr double kFiniteTol = 1e-9;
constexpr double kQuadratureTol = 1e-6;

void check_unitary(const Matrix& u) {
    const auto n = u.rows();
    if (n < 1 || u.cols() != n) throw std::invalid_argument("basis matrix must be square");
    const double residue = (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (residue > kUnitarityTol) {
        throw std::invalid_argument("basis matrix is not unitary to 1e-12");
    }
}

std::vector<double> born_probabilities(const Matrix& basis, const QuantumState& state) {
    const int d = static_cast<int>(basis.rows());
    std::vector<double> p(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const Vector v = basis.col(i);
        const double value = (v.adjoint() * state.matrix() * v)(0, 0).real();
        p[static_cast<std::size_t>(i)] = value < 0.0 ? 0.0 : value;
    }
    return p;
}

}  // namespace

BasisPair::BasisPair(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    check_unitary(a_);
    check_unitary(b_);
    if (a_.rows() != b_.rows()) {
        throw std::invalid_argument("basis pair dimensions differ");
    }
}

BasisPair BasisPair::computational_vs_dft(int d) {
    if (d < 2) throw std::invalid_argument("basis pair needs d >= 2");
    Matrix b(d, d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
            b(j, k) = std::polar(scale, 2.0 * M_PI * j * k / static_cast<double>(d));
        }
    }
    return BasisPair(Matrix::Identity(d, d), std::move(b));
}

BasisPair BasisPair::computational_vs_hadamard() {
    Matrix b(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    b << s, s, s, -s;
    return BasisPair(Matrix::Identity(2, 2), std::move(b));
}

std::vector<double> BasisPair::measure_a(const QuantumState& state) const {
    if (state.dim() != dim()) throw std::invalid_argument("state/basis dimension mismatch");
    return born_probabilities(a_, state);
}

std::vector<double> BasisPair::measure_b(const QuantumState& state) const {
    if (state.dim() != dim()) throw std::invalid_argument("state/basis dimension mismatch");
    return born_probabilities(b_, state);
}

double overlap_f(const BasisPair& pair) {
    return (pair.a().adjoint() * pair.b()).cwiseAbs().maxCoeff();
}

double x_min(const BasisPair& pair) {
    const double f = overlap_f(pair);
    return -2.0 * std::log2(f) - std::log2(static_cast<double>(pair.dim()));
}

ExcessReport excess_finite(const QuantumState& state, const BasisPair& pair) {
    const std::vector<double> pa = pair.measure_a(state);
    const std::vector<double> pb = pair.measure_b(state);
    const int d = pair.dim();
    const double h_a = shannon_entropy(std::span<const double>(pa)).bits;
    const double r_b = knowledge_discrete(std::span<const double>(pb), d).bits;
    ExcessReport rep;
    rep.h_a = h_a;
    rep.r_b = r_b;
    rep.x = h_a - r_b;
    rep.bound = x_min(pair);
    rep.mu = 1.0;
    rep.satisfied = rep.x >= rep.bound - kFiniteTol;
    const double h_b = shannon_entropy(std::span<const double>(pb)).bits;
    const double r_a = knowledge_discrete(std::span<const double>(pa), d).bits;
    rep.x_partner = h_b - r_a;
    return rep;
}

ExcessReport excess_number_phase(const QuantumState& state, const PhaseKernel& kernel,
                                 double mu, int grid_k) {
    const NumberDistribution num = number_distribution(state);
    const PhaseDistribution phase = phase_distribution(state, kernel, grid_k);
    ExcessReport rep;
    rep.h_a = shannon_entropy(num).bits;
    rep.r_b = knowledge_phase(phase).bits;
    rep.mu = mu;
    rep.x = rep.h_a - mu * rep.r_b;
    rep.bound = 0.0;
    rep.satisfied = rep.x >= rep.bound - kQuadratureTol;
    rep.x_partner = 0.0;
    return rep;
}

double bialynicki_sum(const QuantumState& state, int grid_k) {
    if (state.kind() != StateKind::TruncatedOscillator) {
        throw std::invalid_argument("entropy-sum check applies to oscillator states");
    }
    const PhaseKernel kernel = PhaseKernel::canonical(state.dim());
    const NumberDistribution num = number_distribution(state);
    const PhaseDistribution phase = phase_distribution(state, kernel, grid_k);
    return shannon_entropy(num).bits + differential_phase_entropy(phase).bits;
}

}  // namespace numphase
