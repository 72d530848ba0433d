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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "qpix/errors.hpp"
#include "qpix/grover.hpp"
#include "qpix/image.hpp"
#include "qpix/neqr.hpp"
#include "qpix/statevector.hpp"

using namespace qpix;

namespace {

GrayImage reference_image() { return GrayImage(1, 8, {0, 100, 200, 255}); }

double max_distance(const Statevector& a, const Statevector& b) {
    REQUIRE(a.dimension() == b.dimension());
    double worst = 0.0;
    for (std::uint64_t k = 0; k < a.dimension(); ++k) {
        worst = std::max(worst, std::abs(a.amplitude(k) - b.amplitude(k)));
    }
    return worst;
}

Statevector random_state(int num_qubits, std::mt19937_64& rng) {
    Statevector state(num_qubits);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double norm_sq = 0.0;
    for (auto& amp : state.mutable_amplitudes()) {
        amp = {coord(rng), coord(rng)};
        norm_sq += std::norm(amp);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& amp : state.mutable_amplitudes()) amp *= scale;
    return state;
}

// Distinct nonzero amplitudes at every index expose any misplaced flip.
Statevector ramp_state(int num_qubits) {
    Statevector state(num_qubits);
    auto& amps = state.mutable_amplitudes();
    double norm_sq = 0.0;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        amps[k] = static_cast<double>(k + 1);
        norm_sq += std::norm(amps[k]);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& amp : amps) amp *= scale;
    return state;
}

bool oracle_marks(const NeqrLayout& layout, const OracleSpec& spec,
                  std::uint64_t index) {
    if (spec.mode == OracleMode::ColorEquals) {
        return layout.color_of(index) == spec.intensity;
    }
    return (index == layout.position_index(spec.position));
}

// The oracle must negate exactly the marked amplitudes of an arbitrary
// state and touch nothing else.
void check_oracle_exact(const NeqrLayout& layout, const OracleSpec& spec) {
    const QuantumCircuit oracle = build_phase_oracle(layout, spec);
    const Statevector input = ramp_state(oracle.num_qubits);
    Statevector output = input;
    output.apply(oracle);
    for (std::uint64_t k = 0; k < input.dimension(); ++k) {
        const Amplitude expected = oracle_marks(layout, spec, k)
                                       ? -input.amplitude(k)
                                       : input.amplitude(k);
        CHECK(std::abs(output.amplitude(k) - expected) < 1e-14);
    }
}

GrayImage image_with_marked(int n, std::uint64_t marked_count) {
    GrayImage image = GrayImage::filled(n, 4, 9);
    for (std::uint64_t linear = 0; linear < marked_count; ++linear) {
        image.pixels[linear] = 0;
    }
    return image;
}

}  // namespace

TEST_CASE("index oracle on a 2x2 grid is a bare controlled z") {
    const NeqrLayout layout{1, 8};
    const QuantumCircuit oracle =
        build_phase_oracle(layout, OracleSpec::index_equals({1, 1}));
    CHECK(oracle.num_qubits == 2);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle.gates[0].kind == GateKind::Z);
    CHECK(oracle.gates[0].controls.size() == 1);

    Statevector state(2);
    state.apply(Gate::h(0));
    state.apply(Gate::h(1));
    state.apply(oracle);
    CHECK(state.amplitude(0).real() == doctest::Approx(0.5));
    CHECK(state.amplitude(1).real() == doctest::Approx(0.5));
    CHECK(state.amplitude(2).real() == doctest::Approx(0.5));
    CHECK(state.amplitude(3).real() == doctest::Approx(-0.5));
}

TEST_CASE("color oracle for intensity zero flips only all-zero color terms") {
    const NeqrLayout layout{1, 2};
    check_oracle_exact(layout, OracleSpec::color_equals(0));
}

TEST_CASE("oracles negate exactly the marked subspace, exhaustively") {
    for (int n = 1; n <= 2; ++n) {
        for (int q = 1; q <= 4; ++q) {
            const NeqrLayout layout{n, q};
            for (std::uint32_t v = 0; v < (std::uint32_t{1} << q); ++v) {
                check_oracle_exact(layout, OracleSpec::color_equals(v));
            }
            for (int y = 0; y < layout.side(); ++y) {
                for (int x = 0; x < layout.side(); ++x) {
                    check_oracle_exact(layout, OracleSpec::index_equals({y, x}));
                }
            }
        }
    }
}

TEST_CASE("oracle application is an involution") {
    const NeqrLayout layout{1, 3};
    const QuantumCircuit oracle =
        build_phase_oracle(layout, OracleSpec::color_equals(5));
    std::mt19937_64 rng(17);
    const Statevector input = random_state(oracle.num_qubits, rng);
    Statevector state = input;
    state.apply(oracle);
    state.apply(oracle);
    CHECK(max_distance(state, input) < 1e-14);
}

TEST_CASE("oracle rejects out-of-range targets") {
    const NeqrLayout layout{1, 4};
    CHECK_THROWS_AS(build_phase_oracle(layout, OracleSpec::color_equals(16)),
                    ValidationError);
    CHECK_THROWS_AS(build_phase_oracle(layout, OracleSpec::index_equals({2, 0})),
                    ValidationError);
    CHECK_THROWS_AS(build_phase_oracle(layout, OracleSpec::index_equals({0, -1})),
                    ValidationError);
}

TEST_CASE("diffuser fixes the prepared state and negates its complement") {
    const GrayImage image = reference_image();
    const QuantumCircuit prep = build_prep_circuit(image, OracleMode::ColorEquals);
    const QuantumCircuit diffuser = build_diffuser(prep);

    Statevector prepared(prep.num_qubits);
    prepared.apply(prep);

    // The gate realization is the reflection up to one global sign s;
    // probabilities never see s, but it must be consistent across inputs.
    Statevector fixed = prepared;
    fixed.apply(diffuser);
    const double sign = (fixed.amplitude(0) / prepared.amplitude(0)).real();
    CHECK(std::abs(std::abs(sign) - 1.0) < 1e-10);
    for (std::uint64_t k = 0; k < prepared.dimension(); ++k) {
        CHECK(std::abs(fixed.amplitude(k) - sign * prepared.amplitude(k)) < 1e-10);
    }

    // Build a unit vector orthogonal to the prepared state and check it
    // maps to -s times itself.
    std::mt19937_64 rng(23);
    Statevector orthogonal = random_state(prep.num_qubits, rng);
    Amplitude overlap = 0.0;
    for (std::uint64_t k = 0; k < prepared.dimension(); ++k) {
        overlap += std::conj(prepared.amplitude(k)) * orthogonal.amplitude(k);
    }
    double norm_sq = 0.0;
    for (std::uint64_t k = 0; k < prepared.dimension(); ++k) {
        auto& amp = orthogonal.mutable_amplitudes()[k];
        amp -= overlap * prepared.amplitude(k);
        norm_sq += std::norm(amp);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& amp : orthogonal.mutable_amplitudes()) amp *= scale;

    Statevector reflected = orthogonal;
    reflected.apply(diffuser);
    for (std::uint64_t k = 0; k < orthogonal.dimension(); ++k) {
        CHECK(std::abs(reflected.amplitude(k) + sign * orthogonal.amplitude(k)) <
              1e-10);
    }
}

TEST_CASE("iteration plan reproduces the closed-form schedule") {
    struct Case {
        std::uint64_t search_space;
        std::uint64_t marked_count;
        int iterations;
        double predicted;
    };
    // Expected values recomputed from r = floor(pi/4 sqrt(N/M)) and
    // sin^2((2r+1) asin(sqrt(M/N))).
    const Case cases[] = {
        {4, 1, 1, 1.0},
        {4, 2, 1, 0.5},
        {4, 3, 0, 0.75},
        {4, 4, 0, 1.0},
        {16, 1, 3, 0.9613189697265625},
        {16, 2, 2, 0.9453125},
        {16, 3, 1, 0.94921875},
        {16, 4, 1, 1.0},
        {256, 1, 12, 0.9999470421032736},
    };
    for (const Case& c : cases) {
        CAPTURE(c.search_space);
        CAPTURE(c.marked_count);
        const IterationPlan plan = plan_iterations(c.search_space, c.marked_count);
        CHECK(plan.search_space == c.search_space);
        CHECK(plan.marked_count == c.marked_count);
        CHECK(plan.iterations == c.iterations);
        CHECK(std::abs(plan.predicted_success - c.predicted) < 1e-12);
    }
}

TEST_CASE("iteration plan rejects degenerate inputs") {
    CHECK_THROWS_AS(plan_iterations(0, 0), ValidationError);
    CHECK_THROWS_AS(plan_iterations(4, 0), NoMarkedItemsError);
    CHECK_THROWS_AS(plan_iterations(4, 5), ValidationError);
}

TEST_CASE("marked positions are scanned in row-major order") {
    const GrayImage twin(1, 4, {5, 5, 9, 9});
    const std::vector<PixelPosition> marked =
        find_marked_positions(twin, OracleSpec::color_equals(5));
    CHECK(marked == std::vector<PixelPosition>{{0, 0}, {0, 1}});
    CHECK_THROWS_AS(find_marked_positions(twin, OracleSpec::color_equals(7)),
                    NoMarkedItemsError);
    CHECK(find_marked_positions(twin, OracleSpec::index_equals({1, 0})) ==
          std::vector<PixelPosition>{{1, 0}});
}

TEST_CASE("one iteration sends the reference image's darkest pixel to certainty") {
    const GrayImage image = reference_image();
    const OracleSpec spec = OracleSpec::color_equals(0);
    const IterationPlan plan = plan_iterations(4, 1);
    CHECK(plan.iterations == 1);
    const Statevector state = amplify(image, spec, plan);
    const std::vector<double> probs =
        position_probabilities(state, NeqrLayout::for_image(image), spec.mode);
    REQUIRE(probs.size() == 4);
    CHECK(std::abs(probs[0] - 1.0) < 1e-10);
    CHECK(probs[1] < 1e-10);
    CHECK(probs[2] < 1e-10);
    CHECK(probs[3] < 1e-10);
}

TEST_CASE("relocating the minimum relocates the certain outcome") {
    // Four layouts with the minimum at linear positions 0, 1, 2, 3.
    const std::vector<std::vector<std::uint32_t>> layouts = {
        {0, 121, 43, 244},
        {121, 0, 43, 244},
        {121, 43, 0, 244},
        {121, 43, 244, 0},
    };
    const PixelPosition expected[] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (std::size_t row = 0; row < layouts.size(); ++row) {
        CAPTURE(row);
        const GrayImage image(1, 8, layouts[row]);
        const SearchReport report = find_darkest(image, 1024, 0);
        CHECK(report.found == expected[row]);
        CHECK(report.plan.iterations == 1);
        CHECK(std::abs(report.plan.predicted_success - 1.0) < 1e-10);
        const std::uint64_t linear =
            NeqrLayout::for_image(image).position_index(expected[row]);
        CHECK(std::abs(report.position_probabilities[linear] - 1.0) < 1e-10);
        CHECK(report.retries_used == 0);
    }
}

TEST_CASE("position search works on the standalone position space") {
    const GrayImage image = reference_image();
    for (int y = 0; y < 2; ++y) {
        for (int x = 0; x < 2; ++x) {
            const SearchReport report =
                run_search(image, OracleSpec::index_equals({y, x}), 256, 0);
            CHECK(report.found == PixelPosition{y, x});
            const std::uint64_t linear =
                NeqrLayout::for_image(image).position_index({y, x});
            CHECK(std::abs(report.position_probabilities[linear] - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("amplified mass matches the success law on both pipelines") {
    for (int n : {1, 2}) {
        const auto search_space = std::uint64_t{1} << (2 * n);
        for (std::uint64_t marked_count : {std::uint64_t{1}, std::uint64_t{2},
                                           std::uint64_t{3}, std::uint64_t{4}}) {
            CAPTURE(n);
            CAPTURE(marked_count);
            const GrayImage image = image_with_marked(n, marked_count);
            const NeqrLayout layout = NeqrLayout::for_image(image);
            const OracleSpec spec = OracleSpec::color_equals(0);
            const IterationPlan plan = plan_iterations(search_space, marked_count);
            const double predicted =
                std::pow(std::sin((2.0 * plan.iterations + 1.0) *
                                  std::asin(std::sqrt(
                                      static_cast<double>(marked_count) /
                                      static_cast<double>(search_space)))),
                         2.0);
            CHECK(std::abs(plan.predicted_success - predicted) < 1e-12);

            const Statevector state = amplify(image, spec, plan);
            const std::vector<double> probs =
                position_probabilities(state, layout, spec.mode);
            double mass = 0.0;
            for (std::uint64_t linear = 0; linear < marked_count; ++linear) {
                mass += probs[linear];
            }
            CHECK(std::abs(mass - predicted) < 1e-9);
        }
    }
}

TEST_CASE("search is deterministic for fixed inputs") {
    const GrayImage image = reference_image();
    const SearchReport a = find_darkest(image, 512, 9);
    const SearchReport b = find_darkest(image, 512, 9);
    CHECK(a.found == b.found);
    CHECK(a.sampled.counts == b.sampled.counts);
    CHECK(a.retries_used == b.retries_used);
}

TEST_CASE("a half-marked image still verifies within the retry budget") {
    const GrayImage twin(1, 4, {5, 5, 9, 9});
    const SearchReport report =
        run_search(twin, OracleSpec::color_equals(5), 1024, 0);
    CHECK(std::abs(report.plan.predicted_success - 0.5) < 1e-12);
    CHECK(report.plan.iterations == 1);
    CHECK(twin.at(report.found) == 5);
}

TEST_CASE("search failure surfaces after the retry budget") {
    // One shot, no retries: seed 2 lands on an unmarked position.
    const GrayImage twin(1, 4, {5, 5, 9, 9});
    CHECK_THROWS_AS(run_search(twin, OracleSpec::color_equals(5), 1, 2, 0),
                    SearchFailureError);
    CHECK_THROWS_AS(run_search(twin, OracleSpec::color_equals(5), 1, 0, -1),
                    ValidationError);
}

TEST_CASE("searching a constant image returns the first position") {
    const GrayImage flat = GrayImage::filled(1, 3, 7);
    const SearchReport report = find_darkest(flat, 256, 0);
    CHECK(report.plan.marked_count == 4);
    CHECK(report.plan.iterations == 0);
    CHECK(std::abs(report.plan.predicted_success - 1.0) < 1e-12);
    CHECK(flat.at(report.found) == 7);
}

TEST_CASE("no marked items propagates from the full pipeline") {
    CHECK_THROWS_AS(run_search(reference_image(), OracleSpec::color_equals(42),
                               128, 0),
                    NoMarkedItemsError);
}
