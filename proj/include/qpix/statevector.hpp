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
/// Dense statevector simulator over the gate set {H, X, Z, I} with
/// arbitrary positive- and negative-polarity controls.
///
/// Basis convention: basis index k is read with qubit 0 as the least
/// significant bit, so qubit t corresponds to the bit mask 1 << t.
/// Multi-controlled gates act natively as index-masked amplitude updates;
/// no decomposition into a hardware gate basis happens anywhere.

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpix/errors.hpp"

namespace qpix {

/// Largest supported register: 2^24 amplitudes (256 MiB of doubles).
inline constexpr int kMaxQubits = 24;

enum class GateKind { H, X, Z, I };

const char* to_string(GateKind kind);

/// A control terminal. `value` is the polarity: 1 triggers on |1>, 0 on |0>.
/// Negative-polarity controls are first-class so circuit builders do not
/// need explicit X-wrap pairs (they may still emit them; the states agree).
struct Control {
    int qubit = 0;
    int value = 1;

    friend bool operator==(const Control&, const Control&) = default;
};

/// One gate application: a target qubit, an optional control set, a kind.
struct Gate {
    GateKind kind = GateKind::I;
    int target = 0;
    std::vector<Control> controls;

    static Gate h(int target, std::vector<Control> controls = {});
    static Gate x(int target, std::vector<Control> controls = {});
    static Gate z(int target, std::vector<Control> controls = {});
    static Gate identity(int target);

    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Throws ValidationError unless every index is in [0, num_qubits), the
/// target is not also a control, controls are distinct, and polarities
/// are 0 or 1.
void validate_gate(const Gate& gate, int num_qubits);

/// An ordered gate list over a fixed qubit count. Application is unitary:
/// it preserves the L2 norm of any statevector.
struct QuantumCircuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    QuantumCircuit() = default;
    explicit QuantumCircuit(int num_qubits);

    /// Appends a validated gate; returns *this for chaining.
    QuantumCircuit& add(Gate gate);

    /// Gate-wise reversed circuit. Every gate in the {H, X, Z, I} set is
    /// self-inverse, so the reversed list is the exact inverse circuit.
    QuantumCircuit inverse() const;

    std::size_t size() const noexcept { return gates.size(); }
};

using Amplitude = std::complex<double>;

/// Dense complex amplitude vector over num_qubits qubits.
class Statevector {
  public:
    /// Creates |0...0>: amplitude 1 at index 0, 0 elsewhere.
    /// Throws CapacityError unless 1 <= num_qubits <= kMaxQubits.
    explicit Statevector(int num_qubits);

    int num_qubits() const noexcept { return num_qubits_; }
    std::uint64_t dimension() const noexcept { return amplitudes_.size(); }

    const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
    Amplitude amplitude(std::uint64_t index) const { return amplitudes_.at(index); }

    /// Direct write access for constructing states analytically.
    /// Callers are responsible for leaving the vector normalized.
    std::vector<Amplitude>& mutable_amplitudes() noexcept { return amplitudes_; }

    /// Applies one gate in place. For H on target t, amplitudes at the
    /// index pairs (k, k ^ 2^t) mix by [[1,1],[1,-1]]/sqrt(2); X swaps the
    /// pair; Z negates amplitudes at indices with bit t set; I is a no-op.
    /// Controls restrict the action to indices whose control bits match
    /// the stated polarities.
    void apply(const Gate& gate);

    /// Applies the gates in list order. Throws ValidationError when the
    /// circuit's qubit count differs from the state's.
    void apply(const QuantumCircuit& circuit);

    /// Born-rule vector: element k equals |amplitude_k|^2.
    std::vector<double> probabilities() const;

    double norm() const;

  private:
    int num_qubits_ = 0;
    std::vector<Amplitude> amplitudes_;
};

/// Observed shot totals per basis index. Keys are basis indices in
/// [0, 2^num_qubits); values sum to total_shots. The map is ordered so
/// iteration (and therefore every report derived from it) is deterministic.
struct MeasurementCounts {
    int num_qubits = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
};

/// Draws `shots` independent basis indices from probabilities(state).
///
/// Deterministic across runs and platforms for a fixed seed: the generator
/// is std::mt19937_64 seeded with `seed` (its output sequence is pinned by
/// the C++ standard); shot i consumes the i-th 64-bit draw, mapped to
/// [0, 1) with 53-bit resolution and resolved by inverse-CDF lookup over
/// the prefix sums of the probability vector. Randomness is consumed in
/// strictly sequential shot order.
MeasurementCounts sample(const Statevector& state, std::uint64_t shots,
                         std::uint64_t seed);

}  // namespace qpix
