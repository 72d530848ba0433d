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

#include "qpix/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>

#include "qpix/errors.hpp"
#include "qpix/grover.hpp"
#include "qpix/neqr.hpp"
#include "qpix/statevector.hpp"

namespace qpix {
namespace {

struct TrialShape {
    int n = 0;
    int q = 0;
};

TrialShape draw_shape(int n_max, int q_max, std::mt19937_64& rng) {
    TrialShape shape;
    shape.n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n_max));
    shape.q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(q_max));
    return shape;
}

std::string describe_image(const GrayImage& image) {
    std::ostringstream out;
    out << "n=" << image.n << " q=" << image.q << " pixels=[";
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        if (i != 0) out << ",";
        out << image.pixels[i];
    }
    out << "]";
    return out.str();
}

void record_failure(PropertyResult& result, const GrayImage& image,
                    double deviation, const std::string& what) {
    result.status = PropertyStatus::Fail;
    result.max_deviation = std::max(result.max_deviation, deviation);
    result.detail = what + " for " + describe_image(image);
    result.failing_case = image;
}

/// Drops the first controlled-X so the mutated circuit encodes a wrong
/// intensity for exactly one pixel. Circuits without controlled gates
/// (the all-zero image) are left intact.
bool drop_one_controlled_x(QuantumCircuit& circuit) {
    auto it = std::find_if(circuit.gates.begin(), circuit.gates.end(),
                           [](const Gate& gate) {
                               return gate.kind == GateKind::X &&
                                      !gate.controls.empty();
                           });
    if (it == circuit.gates.end()) return false;
    circuit.gates.erase(it);
    return true;
}

PropertyResult check_equivalence(int n_max, int q_max, std::uint64_t trials,
                                 std::mt19937_64& rng, bool inject_fault) {
    PropertyResult result;
    result.name = "encode-circuit-analytic-equivalence";
    result.tolerance = kEquivalenceTolerance;
    if (trials == 0) return result;
    result.status = PropertyStatus::Pass;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const TrialShape shape = draw_shape(n_max, q_max, rng);
        const GrayImage image = random_image(shape.n, shape.q, rng);
        QuantumCircuit circuit = build_neqr_circuit(image);
        if (inject_fault) drop_one_controlled_x(circuit);
        Statevector state(circuit.num_qubits);
        state.apply(circuit);
        const Statevector reference = analytic_neqr_state(image);
        double deviation = 0.0;
        for (std::uint64_t k = 0; k < state.dimension(); ++k) {
            deviation = std::max(
                deviation, std::abs(state.amplitude(k) - reference.amplitude(k)));
        }
        ++result.trials;
        result.max_deviation = std::max(result.max_deviation, deviation);
        if (deviation > result.tolerance) {
            record_failure(result, image, deviation,
                           "circuit state deviates from analytic state");
            return result;
        }
    }
    return result;
}

PropertyResult check_success_law(int n_max, int q_max, std::uint64_t trials,
                                 std::mt19937_64& rng) {
    PropertyResult result;
    result.name = "amplified-success-law";
    result.tolerance = kSuccessLawTolerance;
    if (trials == 0) return result;
    result.status = PropertyStatus::Pass;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const TrialShape shape = draw_shape(n_max, q_max, rng);
        const GrayImage image = random_image(shape.n, shape.q, rng);
        const OracleSpec spec =
            OracleSpec::color_equals(image.min_intensity_value());
        const std::vector<PixelPosition> marked =
            find_marked_positions(image, spec);
        const NeqrLayout layout = NeqrLayout::for_image(image);
        const IterationPlan plan =
            plan_iterations(layout.num_positions(), marked.size());
        const Statevector state = amplify(image, spec, plan);
        const std::vector<double> probs =
            position_probabilities(state, layout, spec.mode);
        double mass = 0.0;
        for (const PixelPosition& position : marked) {
            mass += probs[layout.position_index(position)];
        }
        const double deviation = std::abs(mass - plan.predicted_success);
        ++result.trials;
        result.max_deviation = std::max(result.max_deviation, deviation);
        if (deviation > result.tolerance) {
            record_failure(result, image, deviation,
                           "marked-position mass deviates from predicted success");
            return result;
        }
    }
    return result;
}

PropertyResult check_decode_identity(int n_max, int q_max, std::uint64_t trials,
                                     std::mt19937_64& rng) {
    PropertyResult result;
    result.name = "decode-encode-identity";
    result.tolerance = 0.0;
    if (trials == 0) return result;
    result.status = PropertyStatus::Pass;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        const TrialShape shape = draw_shape(n_max, q_max, rng);
        const GrayImage image = random_image(shape.n, shape.q, rng);
        const NeqrLayout layout = NeqrLayout::for_image(image);
        const Statevector state = analytic_neqr_state(image);
        // Ideal-proportion counts: every position carries probability
        // 4^-n, so 64 shots per position is exact.
        MeasurementCounts counts;
        counts.num_qubits = layout.total_qubits();
        counts.total_shots = 0;
        const std::vector<double> probs = state.probabilities();
        for (std::uint64_t k = 0; k < state.dimension(); ++k) {
            if (probs[k] == 0.0) continue;
            const auto shots = static_cast<std::uint64_t>(
                std::llround(probs[k] * 64.0 * layout.num_positions()));
            counts.counts[k] = shots;
            counts.total_shots += shots;
        }
        const GrayImage decoded = decode_from_counts(counts, layout);
        ++result.trials;
        if (!(decoded == image)) {
            record_failure(result, image, 1.0,
                           "decoded image differs from original");
            return result;
        }
    }
    return result;
}

}  // namespace

const char* to_string(PropertyStatus status) {
    switch (status) {
        case PropertyStatus::Pass:
            return "pass";
        case PropertyStatus::Fail:
            return "fail";
        case PropertyStatus::Vacuous:
            return "vacuous";
    }
    return "unknown";
}

bool VerificationRun::all_passed() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return p.passed(); });
}

VerificationRun run_verification(int n_max, int q_max, std::uint64_t trials,
                                 std::uint64_t seed, bool inject_fault) {
    if (n_max < 1 || q_max < 1) {
        throw ValidationError("verification bounds must be at least 1");
    }
    if (q_max + 2 * n_max > kMaxQubits) {
        throw CapacityError("verification bounds need " +
                            std::to_string(q_max + 2 * n_max) +
                            " qubits, over the limit of " +
                            std::to_string(kMaxQubits));
    }
    VerificationRun run;
    run.n_max = n_max;
    run.q_max = q_max;
    run.trials = trials;
    run.seed = seed;
    run.fault_injection = inject_fault;
    // Independent streams per property keep results stable if one property
    // changes its draw count.
    std::mt19937_64 rng_equivalence(seed);
    std::mt19937_64 rng_success(seed + 1);
    std::mt19937_64 rng_decode(seed + 2);
    run.properties.push_back(
        check_equivalence(n_max, q_max, trials, rng_equivalence, inject_fault));
    run.properties.push_back(check_success_law(n_max, q_max, trials, rng_success));
    run.properties.push_back(
        check_decode_identity(n_max, q_max, trials, rng_decode));
    return run;
}

}  // namespace qpix
