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

#include "numphase/serialize.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace numphase {

namespace {

Eigen::MatrixXd real_part_from_json(const nlohmann::json& doc, const char* key, int dim) {
    if (!doc.contains(key) || !doc[key].is_array() || static_cast<int>(doc[key].size()) != dim) {
        throw std::invalid_argument(std::string("state JSON needs a dim x dim array '") + key +
                                    "'");
    }
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const auto& row = doc[key][static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim) {
            throw std::invalid_argument(std::string("row of '") + key + "' has wrong length");
        }
        for (int j = 0; j < dim; ++j) {
            const auto& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_number()) {
                throw std::invalid_argument(std::string("entry of '") + key +
                                            "' is not a number");
            }
            m(i, j) = cell.get<double>();
        }
    }
    return m;
}

}  // namespace

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

QuantumState state_from_json(const nlohmann::json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("state JSON must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        throw std::invalid_argument("state JSON needs an integer 'dim'");
    }
    const int dim = doc["dim"].get<int>();
    if (dim < 1) throw std::invalid_argument("'dim' must be >= 1");
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        throw std::invalid_argument("state JSON needs a string 'kind'");
    }
    const std::string kind = doc["kind"].get<std::string>();
    const Eigen::MatrixXd re = real_part_from_json(doc, "re", dim);
    const Eigen::MatrixXd im = real_part_from_json(doc, "im", dim);
    Matrix rho = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
    if (kind == "atomic") {
        return QuantumState::atomic(std::move(rho));
    }
    if (kind == "oscillator") {
        const double trace = rho.trace().real();
        const double loss = trace < 1.0 ? 1.0 - trace : 0.0;
        double mean = 0.0;
        for (int m = 0; m < dim; ++m) mean += m * rho(m, m).real();
        return QuantumState::truncated_oscillator(std::move(rho), loss, mean);
    }
    throw std::invalid_argument("'kind' must be \"atomic\" or \"oscillator\"");
}

QuantumState state_from_json_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("state JSON does not parse: ") + e.what());
    }
    return state_from_json(doc);
}

nlohmann::ordered_json state_to_json(const QuantumState& state) {
    const int dim = state.dim();
    nlohmann::ordered_json doc;
    doc["dim"] = dim;
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (int i = 0; i < dim; ++i) {
        nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
        nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
        for (int j = 0; j < dim; ++j) {
            re_row.push_back(state.matrix()(i, j).real());
            im_row.push_back(state.matrix()(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    doc["re"] = std::move(re);
    doc["im"] = std::move(im);
    doc["kind"] = state.kind() == StateKind::Atomic ? "atomic" : "oscillator";
    return doc;
}

nlohmann::ordered_json excess_to_json(const ExcessReport& report) {
    nlohmann::ordered_json doc;
    doc["h_a"] = report.h_a;
    doc["r_b"] = report.r_b;
    doc["x"] = report.x;
    doc["bound"] = report.bound;
    doc["mu"] = report.mu;
    doc["satisfied"] = report.satisfied;
    return doc;
}

nlohmann::ordered_json mu_report_to_json(const MuSearchReport& report) {
    nlohmann::ordered_json doc;
    doc["d"] = report.d;
    doc["kernel"] = report.kernel;
    doc["kernel_is_assumption"] = report.kernel_is_assumption;
    doc["seed"] = report.seed;
    doc["budget"] = report.budget;
    doc["grid_k"] = report.grid_k;
    doc["mu_estimate"] = report.mu_estimate;
    doc["certified_floor"] = report.certified_floor;
    doc["tolerance"] = report.tolerance;
    doc["converged"] = report.converged;
    doc["ratio_samples"] = report.ratio_samples;
    nlohmann::ordered_json stages = nlohmann::ordered_json::array();
    for (const auto& stage : report.stages) {
        nlohmann::ordered_json s;
        s["method"] = stage.method;
        s["iterations"] = stage.iterations;
        s["best_ratio"] = stage.best_ratio;
        stages.push_back(std::move(s));
    }
    doc["stages"] = std::move(stages);
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (const Complex& c : report.argmin_state) {
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    doc["argmin_re"] = std::move(re);
    doc["argmin_im"] = std::move(im);
    doc["audit_samples"] = report.audit_samples;
    doc["audit_min_ratio"] = report.audit_min_ratio;
    return doc;
}

void write_number_csv(std::ostream& out, const NumberDistribution& dist) {
    out << "m,p\n";
    for (int m = 0; m < dist.size(); ++m) {
        out << m << ',' << format_g17(dist.prob(m)) << '\n';
    }
}

void write_phase_csv(std::ostream& out, const PhaseDistribution& dist) {
    out << "theta,density\n";
    for (int k = 0; k < dist.grid_k; ++k) {
        out << format_g17(dist.node(k)) << ',' << format_g17(dist.density(k)) << '\n';
    }
}

}  // namespace numphase
