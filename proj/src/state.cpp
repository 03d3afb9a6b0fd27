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

#include "numphase/state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace numphase {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kTraceTol = 1e-12;
constexpr double kWeightSumTol = 1e-12;

double uniform_open01(std::mt19937_64& eng) {
    // 53-bit mantissa, offset so 0 is never produced.
    return (static_cast<double>(eng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Box-Muller pair from explicit uniforms; keeps the stream independent
// of any library distribution implementation, so a seed pins the state
// exactly.
std::pair<double, double> gaussian_pair(std::mt19937_64& eng) {
    const double u1 = uniform_open01(eng);
    const double u2 = uniform_open01(eng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double w = 2.0 * M_PI * u2;
    return {r * std::cos(w), r * std::sin(w)};
}

}  // namespace

CutoffPolicy CutoffPolicy::automatic(double tail_tol) {
    if (!(tail_tol > 0.0) || tail_tol > 1e-3) {
        throw std::invalid_argument("cutoff tail tolerance must lie in (0, 1e-3]");
    }
    CutoffPolicy p;
    p.mode = Mode::Auto;
    p.tail_tol = tail_tol;
    return p;
}

CutoffPolicy CutoffPolicy::fixed(int n) {
    if (n < 1) throw std::invalid_argument("fixed cutoff must be >= 1");
    CutoffPolicy p;
    p.mode = Mode::Fixed;
    p.fixed_n = n;
    return p;
}

QuantumState::QuantumState(Matrix rho, StateKind kind, double truncation_loss,
                           double declared_mean)
    : rho_(std::move(rho)), kind_(kind), truncation_loss_(truncation_loss),
      declared_mean_(declared_mean) {
    validate();
}

QuantumState QuantumState::atomic(Matrix rho) {
    return QuantumState(std::move(rho), StateKind::Atomic, 0.0, 0.0);
}

QuantumState QuantumState::truncated_oscillator(Matrix rho, double truncation_loss,
                                                double declared_mean) {
    return QuantumState(std::move(rho), StateKind::TruncatedOscillator, truncation_loss,
                        declared_mean);
}

void QuantumState::validate() const {
    const auto n = rho_.rows();
    if (n < 1 || rho_.cols() != n) {
        throw std::invalid_argument("density matrix must be square and non-empty");
    }
    if (!(truncation_loss_ >= 0.0)) {
        throw std::invalid_argument("truncation loss must be >= 0");
    }
    double herm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            herm = std::max(herm, std::abs(rho_(i, j) - std::conj(rho_(j, i))));
        }
    }
    if (herm > kHermitianTol) {
        throw std::invalid_argument("density matrix is not Hermitian (max residue " +
                                    std::to_string(herm) + ")");
    }
    const double tr = rho_.trace().real();
    const double lo = 1.0 - truncation_loss_ - kTraceTol;
    if (tr < lo || tr > 1.0 + kTraceTol) {
        throw std::invalid_argument("trace " + std::to_string(tr) +
                                    " outside [1 - loss - 1e-12, 1 + 1e-12]");
    }
    if (kind_ == StateKind::Atomic) {
        if (truncation_loss_ != 0.0) {
            throw std::invalid_argument("atomic states carry no truncation loss");
        }
        if (std::abs(tr - 1.0) > kTraceTol) {
            throw std::invalid_argument("atomic state trace must be 1 within 1e-12");
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue computation failed during state validation");
    }
    if (es.eigenvalues().minCoeff() < kEigenvalueFloor) {
        throw std::invalid_argument("density matrix has eigenvalue below -1e-10 (" +
                                    std::to_string(es.eigenvalues().minCoeff()) + ")");
    }
}

QuantumState pure_state_from_amplitudes(const Vector& amplitudes, StateKind kind,
                                        double truncation_loss, double declared_mean) {
    Matrix rho = amplitudes * amplitudes.adjoint();
    if (kind == StateKind::Atomic) return QuantumState::atomic(std::move(rho));
    return QuantumState::truncated_oscillator(std::move(rho), truncation_loss, declared_mean);
}

QuantumState make_fock(int m, int dim, StateKind kind) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    if (m < 0 || m >= dim) {
        throw std::invalid_argument("Fock index " + std::to_string(m) +
                                    " out of range for dim " + std::to_string(dim));
    }
    Vector c = Vector::Zero(dim);
    c(m) = 1.0;
    return pure_state_from_amplitudes(c, kind, 0.0, static_cast<double>(m));
}

namespace detail {

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

int auto_cutoff(double mean, double tail_tol) {
    const int ceiling =
        static_cast<int>(std::ceil(mean + 12.0 * std::sqrt(mean + 1.0) + 20.0));
    double tail = 1.0;
    const double log_mean = mean > 0.0 ? std::log(mean) : 0.0;
    for (int n = 0; n < ceiling; ++n) {
        const double log_p = -mean + n * log_mean - log_factorial(n);
        tail -= std::exp(log_p);
        if (tail <= tail_tol) return n;
    }
    return ceiling;
}

Vector haar_amplitudes(std::uint64_t seed, int d) {
    std::mt19937_64 eng(seed);
    Vector c(d);
    for (int k = 0; k < d; ++k) {
        const auto [re, im] = gaussian_pair(eng);
        c(k) = Complex(re, im);
    }
    c.normalize();
    return c;
}

}  // namespace detail

QuantumState make_glauber_coherent(Complex alpha, CutoffPolicy policy) {
    const double mean = std::norm(alpha);
    int cutoff;
    if (policy.mode == CutoffPolicy::Mode::Auto) {
        cutoff = detail::auto_cutoff(mean, policy.tail_tol);
    } else {
        cutoff = policy.fixed_n;
    }
    const int dim = cutoff + 1;
    Vector c = Vector::Zero(dim);
    if (mean == 0.0) {
        c(0) = 1.0;
    } else {
        const double mod = std::abs(alpha);
        const double arg = std::arg(alpha);
        for (int m = 0; m <= cutoff; ++m) {
            const double log_mod = -0.5 * mean + m * std::log(mod) - 0.5 * detail::log_factorial(m);
            c(m) = std::polar(std::exp(log_mod), m * arg);
        }
    }
    const double loss = std::max(0.0, 1.0 - c.squaredNorm());
    return pure_state_from_amplitudes(c, StateKind::TruncatedOscillator, loss, mean);
}

QuantumState make_atomic_coherent(double alpha_p, double beta_p, int d) {
    if (d < 2) throw std::invalid_argument("atomic coherent state needs d >= 2");
    if (alpha_p < 0.0 || alpha_p > M_PI) {
        throw std::invalid_argument("alpha_p must lie in [0, pi]");
    }
    beta_p = std::fmod(beta_p, 2.0 * M_PI);
    if (beta_p < 0.0) beta_p += 2.0 * M_PI;
    const double co = std::cos(alpha_p / 2.0);
    const double si = std::sin(alpha_p / 2.0);
    Vector c(d);
    for (int k = 0; k < d; ++k) {
        const double binom = std::exp(0.5 * (detail::log_factorial(d - 1) -
                                             detail::log_factorial(k) -
                                             detail::log_factorial(d - 1 - k)));
        const double mag = binom * std::pow(co, d - 1 - k) * std::pow(si, k);
        c(k) = std::polar(mag, k * beta_p);
    }
    c.normalize();
    return pure_state_from_amplitudes(c, StateKind::Atomic);
}

QuantumState make_equatorial(double phi0) { return make_atomic_coherent(M_PI / 2.0, phi0, 2); }

QuantumState make_random_pure(std::uint64_t seed, int d, StateKind kind) {
    if (d < 2) throw std::invalid_argument("random pure state needs d >= 2");
    return pure_state_from_amplitudes(detail::haar_amplitudes(seed, d), kind);
}

QuantumState mix(const std::vector<QuantumState>& states, const std::vector<double>& weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw std::invalid_argument("mix needs equally many states and weights");
    }
    const int dim = states.front().dim();
    const StateKind kind = states.front().kind();
    double wsum = 0.0;
    for (double w : weights) {
        if (w < 0.0 || w > 1.0) throw std::invalid_argument("weights must lie in [0, 1]");
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > kWeightSumTol) {
        throw std::invalid_argument("weights must sum to 1 within 1e-12");
    }
    Matrix rho = Matrix::Zero(dim, dim);
    double loss = 0.0;
    double mean = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (states[i].dim() != dim || states[i].kind() != kind) {
            throw std::invalid_argument("mix requires equal dimensions and kinds");
        }
        rho += weights[i] * states[i].matrix();
        loss += weights[i] * states[i].truncation_loss();
        mean += weights[i] * states[i].declared_mean();
    }
    if (kind == StateKind::Atomic) return QuantumState::atomic(std::move(rho));
    return QuantumState::truncated_oscillator(std::move(rho), loss, mean);
}

}  // namespace numphase
