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
/// Phase oracles, amplitude-amplification reflections, iteration
/// scheduling, and the two pixel-search pipelines:
///
///   - color-equals: amplify an NEQR-encoded image toward the pixels whose
///     intensity equals a target value, then read the position register.
///   - index-equals: plain Grover search over the 2n-qubit position space
///     for one known position.
///
/// Both reflect about the prepared state A|0> (general amplitude
/// amplification), not about the uniform superposition of the full
/// register; for the NEQR pipeline only that reflection concentrates the
/// position register on the marked pixels.

#pragma once

#include <cstdint>
#include <vector>

#include "qpix/image.hpp"
#include "qpix/neqr.hpp"
#include "qpix/statevector.hpp"

namespace qpix {

inline constexpr int kDefaultMaxRetries = 8;

enum class OracleMode { ColorEquals, IndexEquals };

const char* to_string(OracleMode mode);

/// What the phase oracle marks: either every basis state whose color
/// register equals `intensity`, or every basis state whose position
/// register equals `position`.
struct OracleSpec {
    OracleMode mode = OracleMode::ColorEquals;
    std::uint32_t intensity = 0;  ///< used when mode == ColorEquals
    PixelPosition position;       ///< used when mode == IndexEquals

    static OracleSpec color_equals(std::uint32_t intensity) {
        return OracleSpec{OracleMode::ColorEquals, intensity, {}};
    }
    static OracleSpec index_equals(PixelPosition position) {
        return OracleSpec{OracleMode::IndexEquals, 0, position};
    }
};

/// Grover schedule for a search space of N items with M marked:
///   r = floor((pi/4) * sqrt(N / M))
///   predicted_success = sin^2((2r + 1) * asin(sqrt(M / N)))
struct IterationPlan {
    std::uint64_t search_space = 0;  ///< N
    std::uint64_t marked_count = 0;  ///< M
    int iterations = 0;              ///< r
    double predicted_success = 0.0;
};

/// Everything one search run produced.
struct SearchReport {
    OracleSpec spec;
    std::vector<PixelPosition> marked_positions;
    IterationPlan plan;
    MeasurementCounts sampled;  ///< restricted to the 2n-qubit position register
    std::vector<double> position_probabilities;  ///< analytic, per linear position
    PixelPosition found;        ///< classically verified
    int retries_used = 0;
};

/// Phase oracle as a circuit: multiplies by -1 the amplitude of exactly
/// those basis states whose designated register matches the target,
/// leaving every other amplitude unchanged. Realized as a Z on one
/// register qubit controlled on the remaining register qubits with
/// polarities matching the target pattern; an all-zeros target X-wraps
/// the Z target and uses negative polarities throughout. O^2 = identity.
///
/// ColorEquals oracles span the full q + 2n qubits; IndexEquals oracles
/// span the standalone 2n-qubit position space.
QuantumCircuit build_phase_oracle(const NeqrLayout& layout, const OracleSpec& spec);

/// Reflection about the prepared state: A (2|0><0| - I) A^dagger, with the
/// inner reflection emitted as an X-wrapped Z on the all-zeros pattern.
/// The gate realization differs from the operator above by a global sign,
/// which no probability ever sees.
QuantumCircuit build_diffuser(const QuantumCircuit& prep);

/// State-preparation circuit A for the given pipeline: the NEQR encoding
/// circuit for ColorEquals, a Hadamard layer over the 2n-qubit position
/// space for IndexEquals.
QuantumCircuit build_prep_circuit(const GrayImage& image, OracleMode mode);

/// Throws NoMarkedItemsError when marked_count is zero and ValidationError
/// when it exceeds the search space.
IterationPlan plan_iterations(std::uint64_t search_space, std::uint64_t marked_count);

/// Pixel positions the oracle will mark. ColorEquals scans the image for
/// the target intensity (possibly several hits); IndexEquals validates
/// and returns the single requested position.
std::vector<PixelPosition> find_marked_positions(const GrayImage& image,
                                                 const OracleSpec& spec);

/// Prepares A|0> and applies `plan.iterations` rounds of oracle followed
/// by diffuser. Returns the pre-measurement state.
Statevector amplify(const GrayImage& image, const OracleSpec& spec,
                    const IterationPlan& plan);

/// Marginal probability of each pixel position in `state`, summed over
/// the color register for the ColorEquals pipeline.
std::vector<double> position_probabilities(const Statevector& state,
                                           const NeqrLayout& layout, OracleMode mode);

/// Full pipeline: plan, amplify, sample the position register, take the
/// modal position (ties toward the smaller linear index) and verify it
/// classically against the image. A failed verification re-samples with
/// the next seed, up to max_retries extra rounds, before raising
/// SearchFailureError. Deterministic for fixed inputs.
SearchReport run_search(const GrayImage& image, const OracleSpec& spec,
                        std::uint64_t shots, std::uint64_t seed,
                        int max_retries = kDefaultMaxRetries);

/// Scans for the minimum intensity classically, then runs the
/// color-equals search for it.
SearchReport find_darkest(const GrayImage& image, std::uint64_t shots,
                          std::uint64_t seed, int max_retries = kDefaultMaxRetries);

}  // namespace qpix
