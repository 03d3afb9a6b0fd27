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
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "numphase/complementarity.hpp"
#include "numphase/distributions.hpp"
#include "numphase/entropy.hpp"
#include "numphase/mu_search.hpp"
#include "numphase/serialize.hpp"
#include "numphase/state.hpp"
#include "numphase/sweeps.hpp"

namespace {

// Exit codes: 0 success, 1 a verified inequality failed, 2 usage or
// input errors.
constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void write_text(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
}

numphase::KernelKind kernel_kind_from_name(const std::string& name) {
    if (name == "canonical") return numphase::KernelKind::Canonical;
    if (name == "su2") return numphase::KernelKind::SU2;
    throw std::runtime_error("unknown kernel '" + name + "' (use canonical or su2)");
}

numphase::PhaseKernel make_kernel(const std::string& name, int dim) {
    return kernel_kind_from_name(name) == numphase::KernelKind::SU2
               ? numphase::PhaseKernel::su2(dim)
               : numphase::PhaseKernel::canonical(dim);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct VerifyCounters {
    long checks = 0;
    long violations = 0;

    void record(const std::string& label, bool ok, double value) {
        ++checks;
        if (!ok) ++violations;
        std::cout << (ok ? "ok   " : "FAIL ") << label << " (" << numphase::format_g17(value)
                  << ")\n";
    }
};

// Oscillator suite: entropy-sum and excess checks over a coherent sweep
// plus seeded random truncated states.
int run_verify_oscillator(double tail_tol, int grid_k, std::uint64_t seed, long samples) {
    VerifyCounters counters;
    const double floor_sum = numphase::log2_two_pi();

    const numphase::QuantumState vacuum =
        numphase::make_glauber_coherent(0.0, numphase::CutoffPolicy::automatic(tail_tol));
    const double vac_sum = numphase::bialynicki_sum(vacuum, grid_k);
    counters.record("vacuum entropy sum saturates log2(2pi)",
                    std::abs(vac_sum - floor_sum) <= 1e-9, vac_sum - floor_sum);

    const numphase::ExcessReport vac_excess = numphase::excess_number_phase(
        vacuum, numphase::PhaseKernel::canonical(vacuum.dim()), 1.0, grid_k);
    counters.record("vacuum excess is zero", std::abs(vac_excess.x) <= 1e-9, vac_excess.x);

    double worst_sum = std::numeric_limits<double>::infinity();
    double worst_x = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 61; ++i) {
        const double alpha = 3.0 * static_cast<double>(i) / 60.0;
        const numphase::QuantumState state = numphase::make_glauber_coherent(
            alpha, numphase::CutoffPolicy::automatic(tail_tol));
        worst_sum = std::min(worst_sum, numphase::bialynicki_sum(state, grid_k) - floor_sum);
        const numphase::ExcessReport rep = numphase::excess_number_phase(
            state, numphase::PhaseKernel::canonical(state.dim()), 1.0, grid_k);
        worst_x = std::min(worst_x, rep.x);
    }
    counters.record("coherent sweep entropy sum >= log2(2pi)", worst_sum >= -1e-6, worst_sum);
    counters.record("coherent sweep excess >= 0", worst_x >= -1e-6, worst_x);

    double worst_rand_sum = std::numeric_limits<double>::infinity();
    double worst_rand_x = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const numphase::QuantumState state = numphase::make_random_pure(
            seed + static_cast<std::uint64_t>(i), 32, numphase::StateKind::TruncatedOscillator);
        worst_rand_sum =
            std::min(worst_rand_sum, numphase::bialynicki_sum(state, grid_k) - floor_sum);
        const numphase::ExcessReport rep = numphase::excess_number_phase(
            state, numphase::PhaseKernel::canonical(state.dim()), 1.0, grid_k);
        worst_rand_x = std::min(worst_rand_x, rep.x);
    }
    counters.record("random states entropy sum >= log2(2pi)", worst_rand_sum >= -1e-6,
                    worst_rand_sum);
    counters.record("random states excess >= 0", worst_rand_x >= -1e-6, worst_rand_x);

    std::cout << counters.checks << " checks, " << counters.violations << " violations\n";
    return counters.violations == 0 ? kExitOk : kExitViolation;
}

// Atomic suite: mutually-unbiased-basis excess over random states plus
// the number-phase excess over the coherent family and random states.
int run_verify_atomic(int d, double mu, int grid_k, std::uint64_t seed, long samples) {
    VerifyCounters counters;
    const numphase::BasisPair pair = numphase::BasisPair::computational_vs_dft(d);
    const numphase::PhaseKernel kernel = numphase::PhaseKernel::su2(d);

    double worst_mub = std::numeric_limits<double>::infinity();
    double worst_symmetry = 0.0;
    for (long i = 0; i < samples; ++i) {
        const numphase::QuantumState state =
            numphase::make_random_pure(seed + static_cast<std::uint64_t>(i), d);
        const numphase::ExcessReport rep = numphase::excess_finite(state, pair);
        worst_mub = std::min(worst_mub, rep.x - rep.bound);
        worst_symmetry = std::max(worst_symmetry, std::abs(rep.x - rep.x_partner));
    }
    counters.record("random states MUB excess >= bound", worst_mub >= -1e-9, worst_mub);
    counters.record("excess is direction-symmetric", worst_symmetry <= 1e-9, worst_symmetry);

    double worst_coherent = std::numeric_limits<double>::infinity();
    for (int ia = 0; ia < 61; ++ia) {
        const double alpha_p = M_PI * static_cast<double>(ia) / 60.0;
        for (int ib = 0; ib < 16; ++ib) {
            const double beta_p = 2.0 * M_PI * static_cast<double>(ib) / 16.0;
            const numphase::QuantumState state =
                numphase::make_atomic_coherent(alpha_p, beta_p, d);
            const numphase::ExcessReport rep =
                numphase::excess_number_phase(state, kernel, mu, grid_k);
            worst_coherent = std::min(worst_coherent, rep.x);
        }
    }
    counters.record("coherent grid number-phase excess >= 0", worst_coherent >= -1e-6,
                    worst_coherent);

    double worst_random = std::numeric_limits<double>::infinity();
    for (long i = 0; i < samples; ++i) {
        const numphase::QuantumState state =
            numphase::make_random_pure(seed + 0x100000 + static_cast<std::uint64_t>(i), d);
        const numphase::ExcessReport rep =
            numphase::excess_number_phase(state, kernel, mu, grid_k);
        worst_random = std::min(worst_random, rep.x);
    }
    counters.record("random states number-phase excess >= 0", worst_random >= -1e-6,
                    worst_random);

    std::cout << counters.checks << " checks, " << counters.violations << " violations\n";
    return counters.violations == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"number-phase complementarity toolkit"};
    app.require_subcommand(1);
    int exit_code = kExitOk;

    // ---- sweep-atomic ----
    auto* sweep_atomic = app.add_subcommand(
        "sweep-atomic", "entropies of atomic coherent states along alpha_p, as CSV");
    numphase::AtomicSweepConfig atomic_cfg;
    std::string atomic_kernel = "su2";
    std::string atomic_out;
    sweep_atomic->add_option("--d", atomic_cfg.d, "system dimension")->capture_default_str();
    sweep_atomic->add_option("--beta-p", atomic_cfg.beta_p, "azimuth of the swept meridian")
        ->capture_default_str();
    sweep_atomic->add_option("--alpha-start", atomic_cfg.alpha_start, "first polar angle")
        ->capture_default_str();
    sweep_atomic->add_option("--alpha-stop", atomic_cfg.alpha_stop, "last polar angle")
        ->capture_default_str();
    sweep_atomic->add_option("--steps", atomic_cfg.steps, "number of sweep points")
        ->capture_default_str();
    sweep_atomic->add_option("--kernel", atomic_kernel, "phase kernel: canonical or su2")
        ->capture_default_str();
    sweep_atomic->add_option("--mu", atomic_cfg.mu, "scaling of R_phi in the X_mu column")
        ->capture_default_str();
    sweep_atomic->add_option("--grid-k", atomic_cfg.grid_k, "phase grid size")
        ->capture_default_str();
    sweep_atomic->add_option("--out", atomic_out, "output CSV path ('-' = stdout)");
    sweep_atomic->callback([&]() {
        atomic_cfg.kernel = kernel_kind_from_name(atomic_kernel);
        std::ostringstream ss;
        numphase::write_atomic_sweep_csv(ss, numphase::run_atomic_sweep(atomic_cfg));
        write_text(atomic_out, ss.str());
    });

    // ---- sweep-oscillator ----
    auto* sweep_osc = app.add_subcommand(
        "sweep-oscillator", "entropies of Glauber coherent states along alpha, as CSV");
    numphase::OscillatorSweepConfig osc_cfg;
    std::string osc_out;
    sweep_osc->add_option("--alpha-start", osc_cfg.alpha_start, "first amplitude")
        ->capture_default_str();
    sweep_osc->add_option("--alpha-stop", osc_cfg.alpha_stop, "last amplitude")
        ->capture_default_str();
    sweep_osc->add_option("--steps", osc_cfg.steps, "number of sweep points")
        ->capture_default_str();
    sweep_osc->add_option("--tail-tol", osc_cfg.tail_tol, "Fock tail mass kept below this")
        ->capture_default_str();
    sweep_osc->add_option("--grid-k", osc_cfg.grid_k, "phase grid size")->capture_default_str();
    sweep_osc->add_option("--out", osc_out, "output CSV path ('-' = stdout)");
    sweep_osc->callback([&]() {
        std::ostringstream ss;
        numphase::write_oscillator_sweep_csv(ss, numphase::run_oscillator_sweep(osc_cfg));
        write_text(osc_out, ss.str());
    });

    // ---- mu-search ----
    auto* mu_search = app.add_subcommand(
        "mu-search", "largest mu with H[m] - mu R[phi] >= 0 over pure states, as JSON");
    int mu_d = 2;
    std::string mu_kernel = "su2";
    long mu_budget = 100000;
    std::uint64_t mu_seed = 0;
    int mu_grid = 4096;
    long mu_samples = 10000;
    std::string mu_out;
    mu_search->add_option("--d", mu_d, "system dimension")->capture_default_str();
    mu_search->add_option("--kernel", mu_kernel, "phase kernel: canonical or su2")
        ->capture_default_str();
    mu_search->add_option("--budget", mu_budget, "ratio evaluations for the search stages")
        ->capture_default_str();
    mu_search->add_option("--seed", mu_seed, "seed for starts and the audit")
        ->capture_default_str();
    mu_search->add_option("--grid-k", mu_grid, "phase grid size")->capture_default_str();
    mu_search->add_option("--samples", mu_samples, "Haar audit sample count")
        ->capture_default_str();
    mu_search->add_option("--out", mu_out, "output JSON path ('-' = stdout)");
    mu_search->callback([&]() {
        const numphase::MuSearchReport rep = numphase::search_mu(
            mu_d, make_kernel(mu_kernel, mu_d), mu_budget, mu_seed, mu_grid, mu_samples);
        write_text(mu_out, numphase::mu_report_to_json(rep).dump(2) + "\n");
    });

    // ---- verify ----
    auto* verify = app.add_subcommand(
        "verify", "audit the uncertainty inequalities (exit 1 on any violation)");
    int verify_d = 0;
    double verify_mu = 1.0;
    int verify_grid = 4096;
    double verify_tail = 1e-12;
    std::uint64_t verify_seed = 0;
    long verify_samples = 1000;
    verify->add_option("--d", verify_d,
                       "atomic dimension; 0 runs the oscillator suite instead")
        ->capture_default_str();
    verify->add_option("--mu", verify_mu, "scaling of R_phi in the atomic suite")
        ->capture_default_str();
    verify->add_option("--grid-k", verify_grid, "phase grid size")->capture_default_str();
    verify->add_option("--tail-tol", verify_tail, "Fock tail mass kept below this")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for the random states")
        ->capture_default_str();
    verify->add_option("--samples", verify_samples, "random states per check")
        ->capture_default_str();
    verify->callback([&]() {
        if (verify_d == 0) {
            exit_code = run_verify_oscillator(verify_tail, verify_grid, verify_seed,
                                              verify_samples);
        } else {
            exit_code =
                run_verify_atomic(verify_d, verify_mu, verify_grid, verify_seed, verify_samples);
        }
    });

    // ---- eval ----
    auto* eval = app.add_subcommand(
        "eval", "number-phase excess of one state given as JSON (exit 1 if violated)");
    std::string eval_in;
    std::string eval_kernel = "auto";
    double eval_mu = 1.0;
    int eval_grid = 4096;
    std::string eval_out;
    eval->add_option("state", eval_in, "path to a state JSON document ('-' = stdin)")
        ->required();
    eval->add_option("--kernel", eval_kernel,
                     "canonical, su2, or auto (su2 for atomic states)")
        ->capture_default_str();
    eval->add_option("--mu", eval_mu, "scaling of R_phi")->capture_default_str();
    eval->add_option("--grid-k", eval_grid, "phase grid size")->capture_default_str();
    eval->add_option("--out", eval_out, "output JSON path ('-' = stdout)");
    eval->callback([&]() {
        const numphase::QuantumState state = numphase::state_from_json_text(read_input(eval_in));
        std::string kernel_name = eval_kernel;
        if (kernel_name == "auto") {
            kernel_name = state.kind() == numphase::StateKind::Atomic ? "su2" : "canonical";
        }
        const numphase::ExcessReport rep = numphase::excess_number_phase(
            state, make_kernel(kernel_name, state.dim()), eval_mu, eval_grid);
        write_text(eval_out, numphase::excess_to_json(rep).dump(2) + "\n");
        if (!rep.satisfied) exit_code = kExitViolation;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return exit_code;
}
