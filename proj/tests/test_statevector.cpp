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
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qpix/errors.hpp"
#include "qpix/statevector.hpp"

using namespace qpix;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

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

Gate random_gate(int num_qubits, std::mt19937_64& rng) {
    const GateKind kinds[] = {GateKind::H, GateKind::X, GateKind::Z};
    Gate gate;
    gate.kind = kinds[rng() % 3];
    gate.target = static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits));
    const int num_controls =
        static_cast<int>(rng() % static_cast<std::uint64_t>(num_qubits));
    std::vector<int> qubits;
    for (int qubit = 0; qubit < num_qubits; ++qubit) {
        if (qubit != gate.target) qubits.push_back(qubit);
    }
    std::shuffle(qubits.begin(), qubits.end(), rng);
    for (int j = 0; j < num_controls && j < static_cast<int>(qubits.size()); ++j) {
        gate.controls.push_back(Control{qubits[j], static_cast<int>(rng() % 2)});
    }
    return gate;
}

// Reference semantics, written pairwise instead of the library's flat
// index scan: for every index pair differing only in the target bit and
// matching every control, apply the 2x2 single-qubit matrix.
Statevector reference_apply(const Statevector& input, const Gate& gate) {
    Statevector output = input;
    if (gate.kind == GateKind::I) return output;
    const std::uint64_t target_mask = std::uint64_t{1} << gate.target;
    auto matches = [&](std::uint64_t k) {
        for (const Control& control : gate.controls) {
            const int bit = static_cast<int>(k >> control.qubit & 1);
            if (bit != control.value) return false;
        }
        return true;
    };
    for (std::uint64_t k0 = 0; k0 < input.dimension(); ++k0) {
        if (k0 & target_mask) continue;
        if (!matches(k0)) continue;
        const std::uint64_t k1 = k0 | target_mask;
        const Amplitude a0 = input.amplitude(k0);
        const Amplitude a1 = input.amplitude(k1);
        auto& out = output.mutable_amplitudes();
        switch (gate.kind) {
            case GateKind::H:
                out[k0] = (a0 + a1) * kInvSqrt2;
                out[k1] = (a0 - a1) * kInvSqrt2;
                break;
            case GateKind::X:
                out[k0] = a1;
                out[k1] = a0;
                break;
            case GateKind::Z:
                out[k1] = -a1;
                break;
            case GateKind::I:
                break;
        }
    }
    return output;
}

}  // namespace

TEST_CASE("gate kind names") {
    CHECK(std::string(to_string(GateKind::H)) == "H");
    CHECK(std::string(to_string(GateKind::X)) == "X");
    CHECK(std::string(to_string(GateKind::Z)) == "Z");
    CHECK(std::string(to_string(GateKind::I)) == "I");
}

TEST_CASE("gate validation rejects malformed gates") {
    CHECK_THROWS_AS(validate_gate(Gate::x(3), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(Gate::x(-1), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(Gate::x(0, {Control{3, 1}}), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(Gate::x(0, {Control{0, 1}}), 3), ValidationError);
    CHECK_THROWS_AS(validate_gate(Gate::x(0, {Control{1, 2}}), 3), ValidationError);
    CHECK_THROWS_AS(
        validate_gate(Gate::x(0, {Control{1, 1}, Control{1, 0}}), 3),
        ValidationError);
    CHECK_NOTHROW(validate_gate(Gate::x(0, {Control{1, 0}, Control{2, 1}}), 3));
}

TEST_CASE("statevector starts in the all-zeros state") {
    Statevector state(3);
    CHECK(state.num_qubits() == 3);
    CHECK(state.dimension() == 8);
    CHECK(state.amplitude(0) == Amplitude{1.0, 0.0});
    for (std::uint64_t k = 1; k < 8; ++k) {
        CHECK(state.amplitude(k) == Amplitude{0.0, 0.0});
    }
    CHECK(state.norm() == doctest::Approx(1.0));
}

TEST_CASE("statevector rejects out-of-budget sizes") {
    CHECK_THROWS_AS(Statevector(0), CapacityError);
    CHECK_THROWS_AS(Statevector(-2), CapacityError);
    CHECK_THROWS_AS(Statevector(kMaxQubits + 1), CapacityError);
}

TEST_CASE("hadamard splits and recombines") {
    Statevector state(1);
    state.apply(Gate::h(0));
    CHECK(state.amplitude(0).real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    CHECK(state.amplitude(1).real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
    state.apply(Gate::h(0));
    CHECK(std::abs(state.amplitude(0) - Amplitude{1.0, 0.0}) < 1e-15);
    CHECK(std::abs(state.amplitude(1)) < 1e-15);
}

TEST_CASE("x swaps basis amplitudes and z flips the sign of |1>") {
    Statevector state(2);
    state.apply(Gate::x(1));  // |10> = index 2
    CHECK(state.amplitude(2) == Amplitude{1.0, 0.0});
    state.apply(Gate::z(1));
    CHECK(state.amplitude(2) == Amplitude{-1.0, 0.0});
    state.apply(Gate::identity(0));
    CHECK(state.amplitude(2) == Amplitude{-1.0, 0.0});
}

TEST_CASE("controls gate the action on both polarities") {
    // Positive control: X on qubit 0 fires only when qubit 1 is |1>.
    Statevector state(2);
    state.apply(Gate::x(0, {Control{1, 1}}));
    CHECK(state.amplitude(0) == Amplitude{1.0, 0.0});  // control not met

    state.apply(Gate::x(1));
    state.apply(Gate::x(0, {Control{1, 1}}));
    CHECK(state.amplitude(3) == Amplitude{1.0, 0.0});  // |11>

    // Negative control: fires only when the control qubit is |0>.
    Statevector negative(2);
    negative.apply(Gate::x(0, {Control{1, 0}}));
    CHECK(negative.amplitude(1) == Amplitude{1.0, 0.0});  // |01>
}

TEST_CASE("hzh equals x and hxh equals z") {
    std::mt19937_64 rng(11);
    const Statevector input = random_state(3, rng);

    Statevector lhs = input;
    lhs.apply(Gate::h(1));
    lhs.apply(Gate::z(1));
    lhs.apply(Gate::h(1));
    Statevector rhs = input;
    rhs.apply(Gate::x(1));
    CHECK(max_distance(lhs, rhs) < 1e-12);

    lhs = input;
    lhs.apply(Gate::h(2));
    lhs.apply(Gate::x(2));
    lhs.apply(Gate::h(2));
    rhs = input;
    rhs.apply(Gate::z(2));
    CHECK(max_distance(lhs, rhs) < 1e-12);
}

TEST_CASE("every gate matches the pairwise reference on random states") {
    std::mt19937_64 rng(2024);
    for (int num_qubits = 1; num_qubits <= 6; ++num_qubits) {
        for (int round = 0; round < 60; ++round) {
            const Statevector input = random_state(num_qubits, rng);
            const Gate gate = random_gate(num_qubits, rng);
            Statevector actual = input;
            actual.apply(gate);
            const Statevector expected = reference_apply(input, gate);
            CHECK(max_distance(actual, expected) < 1e-14);
        }
    }
}

TEST_CASE("gates are self-inverse") {
    std::mt19937_64 rng(5);
    const Statevector input = random_state(5, rng);
    for (int round = 0; round < 100; ++round) {
        const Gate gate = random_gate(5, rng);
        Statevector state = input;
        state.apply(gate);
        state.apply(gate);
        CHECK(max_distance(state, input) < 1e-12);
    }
}

TEST_CASE("long random circuits preserve the norm") {
    std::mt19937_64 rng(99);
    Statevector state = random_state(12, rng);
    QuantumCircuit circuit(12);
    for (int round = 0; round < 1000; ++round) {
        circuit.add(random_gate(12, rng));
    }
    state.apply(circuit);
    CHECK(std::abs(state.norm() - 1.0) < 1e-9);
}

TEST_CASE("circuit inverse undoes the circuit") {
    std::mt19937_64 rng(7);
    QuantumCircuit circuit(4);
    for (int round = 0; round < 50; ++round) {
        circuit.add(random_gate(4, rng));
    }
    Statevector state(4);
    state.apply(circuit);
    state.apply(circuit.inverse());
    Statevector zero(4);
    CHECK(max_distance(state, zero) < 1e-10);
}

TEST_CASE("circuit application validates the qubit count") {
    Statevector state(3);
    QuantumCircuit circuit(4);
    CHECK_THROWS_AS(state.apply(circuit), ValidationError);
    CHECK_THROWS_AS(QuantumCircuit(2).add(Gate::x(5)), ValidationError);
}

TEST_CASE("probabilities follow the born rule and sum to one") {
    std::mt19937_64 rng(31);
    const Statevector state = random_state(6, rng);
    const std::vector<double> probs = state.probabilities();
    double total = 0.0;
    for (std::uint64_t k = 0; k < state.dimension(); ++k) {
        CHECK(probs[k] == doctest::Approx(std::norm(state.amplitude(k))));
        total += probs[k];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("sampling is seeded, exhaustive, and excludes zero mass") {
    Statevector state(2);
    state.apply(Gate::h(0));  // half mass each on indices 0 and 1

    const MeasurementCounts a = sample(state, 100000, 42);
    const MeasurementCounts b = sample(state, 100000, 42);
    CHECK(a.counts == b.counts);
    CHECK(a.num_qubits == 2);
    CHECK(a.total_shots == 100000);

    std::uint64_t total = 0;
    for (const auto& [index, count] : a.counts) {
        CHECK(index < 2);  // indices 2 and 3 carry zero probability
        total += count;
    }
    CHECK(total == 100000);
    CHECK(std::abs(static_cast<double>(a.counts.at(0)) / 100000.0 - 0.5) < 0.02);

    const MeasurementCounts c = sample(state, 100000, 43);
    CHECK(c.counts != a.counts);
}

TEST_CASE("sampling a basis state returns only that index") {
    Statevector state(3);
    state.apply(Gate::x(2));
    const MeasurementCounts counts = sample(state, 500, 0);
    CHECK(counts.counts.size() == 1);
    CHECK(counts.counts.at(4) == 500);
}

TEST_CASE("sampling rejects zero shots") {
    Statevector state(1);
    CHECK_THROWS_AS(sample(state, 0, 0), ValidationError);
}
