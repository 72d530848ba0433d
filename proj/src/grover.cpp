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

#include "qpix/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace qpix {

namespace {

// A multi-controlled Z that flips the sign of exactly the basis states of
// `width` qubits matching `pattern` on the `registers` qubits. When the
// pattern has no 1-bit the Z target is X-wrapped, since a bare Z never
// moves an all-zeros amplitude.
void append_pattern_phase_flip(QuantumCircuit& circuit,
                               const std::vector<int>& register_qubits,
                               std::uint64_t pattern) {
    int z_slot = -1;
    for (int j = static_cast<int>(register_qubits.size()) - 1; j >= 0; --j) {
        if ((pattern >> j) & 1) {
            z_slot = j;
            break;
        }
    }

    const bool wrap = z_slot < 0;
    if (wrap) {
        z_slot = static_cast<int>(register_qubits.size()) - 1;
    }
    const int z_target = register_qubits[z_slot];

    std::vector<Control> controls;
    controls.reserve(register_qubits.size() - 1);
    for (std::size_t j = 0; j < register_qubits.size(); ++j) {
        if (static_cast<int>(j) == z_slot) {
            continue;
        }
        controls.push_back(Control{register_qubits[j], static_cast<int>((pattern >> j) & 1)});
    }

    if (wrap) {
        circuit.add(Gate::x(z_target));
        circuit.add(Gate::z(z_target, controls));
        circuit.add(Gate::x(z_target));
    } else {
        circuit.add(Gate::z(z_target, std::move(controls)));
    }
}

void validate_spec(const NeqrLayout& layout, const OracleSpec& spec) {
    if (spec.mode == OracleMode::ColorEquals) {
        const std::uint64_t limit = std::uint64_t{1} << layout.q;
        if (spec.intensity >= limit) {
            throw ValidationError("target intensity " + std::to_string(spec.intensity) +
                                  " does not fit " + std::to_string(layout.q) + " bits");
        }
    } else {
        if (spec.position.y < 0 || spec.position.y >= layout.side() ||
            spec.position.x < 0 || spec.position.x >= layout.side()) {
            throw ValidationError("target position (" + std::to_string(spec.position.y) +
                                  "," + std::to_string(spec.position.x) +
                                  ") outside a " + std::to_string(layout.side()) + "x" +
                                  std::to_string(layout.side()) + " image");
        }
    }
}

bool verify_candidate(const GrayImage& image, const OracleSpec& spec,
                      PixelPosition candidate) {
    if (spec.mode == OracleMode::ColorEquals) {
        return image.at(candidate) == spec.intensity;
    }
    return candidate == spec.position;
}

// Counts per linear position, collapsing the color register when present.
MeasurementCounts project_to_positions(const MeasurementCounts& raw,
                                       const NeqrLayout& layout, OracleMode mode) {
    MeasurementCounts positions;
    positions.num_qubits = layout.position_qubits();
    positions.total_shots = raw.total_shots;
    const int shift = mode == OracleMode::ColorEquals ? layout.q : 0;
    for (const auto& [index, count] : raw.counts) {
        positions.counts[index >> shift] += count;
    }
    return positions;
}

PixelPosition modal_position(const MeasurementCounts& positions,
                             const NeqrLayout& layout) {
    std::uint64_t best_index = 0;
    std::uint64_t best_count = 0;
    for (const auto& [index, count] : positions.counts) {
        if (count > best_count) {  // ascending keys: ties keep the smaller index
            best_index = index;
            best_count = count;
        }
    }
    return layout.position_from_linear(best_index);
}

}  // namespace

const char* to_string(OracleMode mode) {
    return mode == OracleMode::ColorEquals ? "color-equals" : "index-equals";
}

QuantumCircuit build_phase_oracle(const NeqrLayout& layout, const OracleSpec& spec) {
    validate_spec(layout, spec);

    std::vector<int> register_qubits;
    std::uint64_t pattern;
    int width;
    if (spec.mode == OracleMode::ColorEquals) {
        width = layout.total_qubits();
        register_qubits.resize(layout.q);
        pattern = spec.intensity;
    } else {
        width = layout.position_qubits();
        register_qubits.resize(layout.position_qubits());
        pattern = layout.position_index(spec.position);
    }
    for (std::size_t j = 0; j < register_qubits.size(); ++j) {
        register_qubits[j] = static_cast<int>(j);
    }

    QuantumCircuit oracle(width);
    append_pattern_phase_flip(oracle, register_qubits, pattern);
    return oracle;
}

QuantumCircuit build_diffuser(const QuantumCircuit& prep) {
    QuantumCircuit diffuser = prep.inverse();

    std::vector<int> all_qubits(prep.num_qubits);
    for (int j = 0; j < prep.num_qubits; ++j) {
        all_qubits[j] = j;
    }
    append_pattern_phase_flip(diffuser, all_qubits, 0);

    diffuser.gates.insert(diffuser.gates.end(), prep.gates.begin(), prep.gates.end());
    return diffuser;
}

QuantumCircuit build_prep_circuit(const GrayImage& image, OracleMode mode) {
    if (mode == OracleMode::ColorEquals) {
        return build_neqr_circuit(image);
    }
    validate_image(image);
    QuantumCircuit prep(2 * image.n);
    for (int j = 0; j < prep.num_qubits; ++j) {
        prep.add(Gate::h(j));
    }
    return prep;
}

IterationPlan plan_iterations(std::uint64_t search_space, std::uint64_t marked_count) {
    if (search_space == 0) {
        throw ValidationError("search space must be nonempty");
    }
    if (marked_count == 0) {
        throw NoMarkedItemsError("no marked items in a search space of " +
                                 std::to_string(search_space));
    }
    if (marked_count > search_space) {
        throw ValidationError("marked count " + std::to_string(marked_count) +
                              " exceeds search space " + std::to_string(search_space));
    }

    const double ratio = static_cast<double>(marked_count) / static_cast<double>(search_space);
    const double theta = std::asin(std::sqrt(ratio));
    const int iterations = static_cast<int>(
        std::floor(std::numbers::pi / 4.0 * std::sqrt(1.0 / ratio)));
    const double angle = (2.0 * iterations + 1.0) * theta;
    const double amplitude = std::sin(angle);

    IterationPlan plan;
    plan.search_space = search_space;
    plan.marked_count = marked_count;
    plan.iterations = iterations;
    plan.predicted_success = amplitude * amplitude;
    return plan;
}

std::vector<PixelPosition> find_marked_positions(const GrayImage& image,
                                                 const OracleSpec& spec) {
    validate_image(image);
    const NeqrLayout layout = NeqrLayout::for_image(image);
    validate_spec(layout, spec);

    if (spec.mode == OracleMode::IndexEquals) {
        return {spec.position};
    }
    std::vector<PixelPosition> marked;
    for (std::uint64_t linear = 0; linear < image.pixel_count(); ++linear) {
        if (image.pixels[linear] == spec.intensity) {
            marked.push_back(layout.position_from_linear(linear));
        }
    }
    if (marked.empty()) {
        throw NoMarkedItemsError("no pixel has intensity " +
                                 std::to_string(spec.intensity));
    }
    return marked;
}

Statevector amplify(const GrayImage& image, const OracleSpec& spec,
                    const IterationPlan& plan) {
    const NeqrLayout layout = NeqrLayout::for_image(image);
    const QuantumCircuit prep = build_prep_circuit(image, spec.mode);
    const QuantumCircuit oracle = build_phase_oracle(layout, spec);
    const QuantumCircuit diffuser = build_diffuser(prep);

    Statevector state(prep.num_qubits);
    state.apply(prep);
    for (int i = 0; i < plan.iterations; ++i) {
        state.apply(oracle);
        state.apply(diffuser);
    }
    return state;
}

std::vector<double> position_probabilities(const Statevector& state,
                                           const NeqrLayout& layout, OracleMode mode) {
    const int shift = mode == OracleMode::ColorEquals ? layout.q : 0;
    std::vector<double> marginals(layout.num_positions(), 0.0);
    const auto& amps = state.amplitudes();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        marginals[k >> shift] += std::norm(amps[k]);
    }
    return marginals;
}

SearchReport run_search(const GrayImage& image, const OracleSpec& spec,
                        std::uint64_t shots, std::uint64_t seed, int max_retries) {
    if (max_retries < 0) {
        throw ValidationError("max_retries must be non-negative");
    }
    const NeqrLayout layout = NeqrLayout::for_image(image);

    SearchReport report;
    report.spec = spec;
    report.marked_positions = find_marked_positions(image, spec);
    report.plan = plan_iterations(layout.num_positions(), report.marked_positions.size());

    const Statevector state = amplify(image, spec, report.plan);
    report.position_probabilities = position_probabilities(state, layout, spec.mode);

    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        const MeasurementCounts raw =
            sample(state, shots, seed + static_cast<std::uint64_t>(attempt));
        MeasurementCounts positions = project_to_positions(raw, layout, spec.mode);
        const PixelPosition candidate = modal_position(positions, layout);
        if (verify_candidate(image, spec, candidate)) {
            report.sampled = std::move(positions);
            report.found = candidate;
            report.retries_used = attempt;
            return report;
        }
    }
    throw SearchFailureError("modal position failed verification " +
                             std::to_string(max_retries + 1) + " time(s)");
}

SearchReport find_darkest(const GrayImage& image, std::uint64_t shots,
                          std::uint64_t seed, int max_retries) {
    validate_image(image);
    const OracleSpec spec = OracleSpec::color_equals(image.min_intensity_value());
    return run_search(image, spec, shots, seed, max_retries);
}

}  // namespace qpix
