// Copyright 2026 The qpix authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file
/// Machine-readable run reports. Every report is JSON with a top-level
/// "schema": 1 field; a plain-text rendering of the same content is
/// available for terminals. Bitstring labels are rendered MSB-first, so
/// position bits precede color bits.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpix/grover.hpp"
#include "qpix/image.hpp"
#include "qpix/neqr.hpp"
#include "qpix/statevector.hpp"
#include "qpix/verify.hpp"

namespace qpix {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// One histogram row: a basis label, its analytic probability, and the
/// observed shot count. Labels are unique per report and probabilities
/// across a report's records sum to 1 within 1e-9.
struct HistogramRecord {
    std::string label;
    double probability = 0.0;
    std::uint64_t count = 0;
};

/// Bits of `index` rendered MSB-first as '0'/'1' characters.
std::string bitstring_label(std::uint64_t index, int num_bits);

Json image_to_json(const GrayImage& image);
GrayImage image_from_json(const Json& j);

/// Report for an encode run: gate listing, analytic nonzero amplitudes,
/// and the sampling histogram over encoded basis states.
Json encode_report(const GrayImage& image, const QuantumCircuit& circuit,
                   const Statevector& analytic, const MeasurementCounts& counts,
                   std::uint64_t shots, std::uint64_t seed);

/// Report for a search run, including the per-position histogram keyed by
/// (y, x) over the whole position grid.
Json search_report_to_json(const GrayImage& image, const SearchReport& report,
                           std::uint64_t shots, std::uint64_t seed);

Json verify_report_to_json(const VerificationRun& run);

/// Plain-text rendering of any report produced above.
std::string render_text(const Json& report);

}  // namespace qpix
