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

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "numphase/complementarity.hpp"
#include "numphase/distributions.hpp"
#include "numphase/mu_search.hpp"
#include "numphase/state.hpp"

namespace numphase {

/// 17-significant-digit decimal form, '.' decimal separator.
std::string format_g17(double value);

/// Density matrix from a JSON document {"dim", "re", "im", "kind"}; the
/// result passes full QuantumState validation or the load throws.
QuantumState state_from_json(const nlohmann::json& doc);
QuantumState state_from_json_text(const std::string& text);

nlohmann::ordered_json state_to_json(const QuantumState& state);

/// Keys (h_a, r_b, x, bound, mu, satisfied) in that order.
nlohmann::ordered_json excess_to_json(const ExcessReport& report);

nlohmann::ordered_json mu_report_to_json(const MuSearchReport& report);

/// CSV with header "m,p", one row per number outcome.
void write_number_csv(std::ostream& out, const NumberDistribution& dist);
/// CSV with header "theta,density", theta in radians.
void write_phase_csv(std::ostream& out, const PhaseDistribution& dist);

}  // namespace numphase
