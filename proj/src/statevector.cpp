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

#include "qpix/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>

namespace qpix {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

const char* to_string(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::I: return "I";
    }
    return "?";
}

Gate Gate::h(int target, std::vector<Control> controls) {
    return Gate{GateKind::H, target, std::move(controls)};
}

Gate Gate::x(int target, std::vector<Control> controls) {
    return Gate{GateKind::X, target, std::move(controls)};
}

Gate Gate::z(int target, std::vector<Control> controls) {
    return Gate{GateKind::Z, target, std::move(controls)};
}

Gate Gate::identity(int target) {
    return Gate{GateKind::I, target, {}};
}

void validate_gate(const Gate& gate, int num_qubits) {
    if (gate.target < 0 || gate.target >= num_qubits) {
        throw ValidationError("gate target " + std::to_string(gate.target) +
                              " out of range for " + std::to_string(num_qubits) +
                              " qubits");
    }
    std::uint64_t seen = 0;
    for (const Control& c : gate.controls) {
        if (c.qubit < 0 || c.qubit >= num_qubits) {
            throw ValidationError("control qubit " + std::to_string(c.qubit) +
                                  " out of range for " + std::to_string(num_qubits) +
                                  " qubits");
        }
        if (c.qubit == gate.target) {
            throw ValidationError("control qubit " + std::to_string(c.qubit) +
                                  " collides with the gate target");
        }
        if (c.value != 0 && c.value != 1) {
            throw ValidationError("control polarity must be 0 or 1, got " +
                                  std::to_string(c.value));
        }
        const std::uint64_t bit = std::uint64_t{1} << c.qubit;
        if (seen & bit) {
            throw ValidationError("duplicate control on qubit " +
                                  std::to_string(c.qubit));
        }
        seen |= bit;
    }
}

QuantumCircuit::QuantumCircuit(int num_qubits) : num_qubits(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("circuit qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
}

QuantumCircuit& QuantumCircuit::add(Gate gate) {
    validate_gate(gate, num_qubits);
    gates.push_back(std::move(gate));
    return *this;
}

QuantumCircuit QuantumCircuit::inverse() const {
    QuantumCircuit reversed(num_qubits);
    reversed.gates.assign(gates.rbegin(), gates.rend());
    return reversed;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
    }
    amplitudes_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = Amplitude{1.0, 0.0};
}

void Statevector::apply(const Gate& gate) {
    validate_gate(gate, num_qubits_);
    if (gate.kind == GateKind::I) {
        return;
    }

    const std::uint64_t target_mask = std::uint64_t{1} << gate.target;
    std::uint64_t control_mask = 0;
    std::uint64_t control_value = 0;
    for (const Control& c : gate.controls) {
        control_mask |= std::uint64_t{1} << c.qubit;
        if (c.value) {
            control_value |= std::uint64_t{1} << c.qubit;
        }
    }

    const std::uint64_t dim = dimension();
    switch (gate.kind) {
        case GateKind::X:
            for (std::uint64_t k = 0; k < dim; ++k) {
                if (!(k & target_mask) && (k & control_mask) == control_value) {
                    std::swap(amplitudes_[k], amplitudes_[k | target_mask]);
                }
            }
            break;
        case GateKind::Z:
            for (std::uint64_t k = 0; k < dim; ++k) {
                if ((k & target_mask) && (k & control_mask) == control_value) {
                    amplitudes_[k] = -amplitudes_[k];
                }
            }
            break;
        case GateKind::H:
            for (std::uint64_t k = 0; k < dim; ++k) {
                if (!(k & target_mask) && (k & control_mask) == control_value) {
                    const Amplitude a = amplitudes_[k];
                    const Amplitude b = amplitudes_[k | target_mask];
                    amplitudes_[k] = (a + b) * kInvSqrt2;
                    amplitudes_[k | target_mask] = (a - b) * kInvSqrt2;
                }
            }
            break;
        case GateKind::I:
            break;
    }
}

void Statevector::apply(const QuantumCircuit& circuit) {
    if (circuit.num_qubits != num_qubits_) {
        throw ValidationError("circuit spans " + std::to_string(circuit.num_qubits) +
                              " qubits but the state has " +
                              std::to_string(num_qubits_));
    }
    for (const Gate& gate : circuit.gates) {
        apply(gate);
    }
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> probs(amplitudes_.size());
    for (std::uint64_t k = 0; k < amplitudes_.size(); ++k) {
        probs[k] = std::norm(amplitudes_[k]);
    }
    return probs;
}

double Statevector::norm() const {
    double sum = 0.0;
    for (const Amplitude& a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

MeasurementCounts sample(const Statevector& state, std::uint64_t shots,
                         std::uint64_t seed) {
    if (shots < 1) {
        throw ValidationError("shot count must be at least 1");
    }

    std::vector<double> cumulative = state.probabilities();
    std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
    const double total = cumulative.back();

    MeasurementCounts result;
    result.num_qubits = state.num_qubits();
    result.total_shots = shots;

    std::mt19937_64 rng(seed);
    for (std::uint64_t shot = 0; shot < shots; ++shot) {
        // 53-bit uniform draw in [0, 1), scaled into the cumulative range.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::uint64_t index;
        if (it == cumulative.end()) {
            // Rounding pushed u to the top of the range; take the last
            // index that carries probability mass.
            index = cumulative.size() - 1;
            while (index > 0 && cumulative[index] == cumulative[index - 1]) {
                --index;
            }
        } else {
            index = static_cast<std::uint64_t>(it - cumulative.begin());
        }
        ++result.counts[index];
    }
    return result;
}

}  // namespace qpix
