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
/// NEQR encoding: a classical grayscale image becomes a quantum state with
/// one superposition term per pixel, the pixel's intensity stored in a
/// color register entangled with a position register.
///
/// Register layout: color qubits are indices 0..q-1, position qubits are
/// q..q+2n-1 with the X (column) bits below the Y (row) bits. The basis
/// index of pixel (y, x) with color c is therefore
///     k = ((y * 2^n + x) << q) | c
/// and rendering k MSB-first yields the position bits followed by the
/// color bits.

#pragma once

#include <cstdint>
#include <string>

#include "qpix/image.hpp"
#include "qpix/statevector.hpp"

namespace qpix {

/// Qubit/bit bookkeeping for an NEQR register of given shape.
struct NeqrLayout {
    int n = 0;  ///< side exponent
    int q = 0;  ///< color bit depth

    static NeqrLayout for_image(const GrayImage& image) { return {image.n, image.q}; }

    int total_qubits() const noexcept { return q + 2 * n; }
    int position_qubits() const noexcept { return 2 * n; }
    int side() const noexcept { return 1 << n; }
    std::uint64_t num_positions() const noexcept { return std::uint64_t{1} << (2 * n); }
    std::uint64_t dimension() const noexcept { return std::uint64_t{1} << total_qubits(); }

    /// Linear pixel index y * 2^n + x.
    std::uint64_t position_index(PixelPosition p) const noexcept {
        return (static_cast<std::uint64_t>(p.y) << n) | static_cast<std::uint64_t>(p.x);
    }

    PixelPosition position_from_linear(std::uint64_t linear) const noexcept {
        return PixelPosition{static_cast<int>(linear >> n),
                             static_cast<int>(linear & ((std::uint64_t{1} << n) - 1))};
    }

    /// Full basis index of pixel p carrying color c.
    std::uint64_t basis_index(PixelPosition p, std::uint32_t color) const noexcept {
        return (position_index(p) << q) | color;
    }

    PixelPosition position_of(std::uint64_t basis_index) const noexcept {
        return position_from_linear(basis_index >> q);
    }

    std::uint32_t color_of(std::uint64_t basis_index) const noexcept {
        return static_cast<std::uint32_t>(basis_index & ((std::uint64_t{1} << q) - 1));
    }

    friend bool operator==(const NeqrLayout&, const NeqrLayout&) = default;
};

/// Preparation circuit: H on each position qubit, then, for every pixel
/// and every set intensity bit, one X on the corresponding color qubit
/// controlled on the full position pattern of that pixel (0-bits as
/// negative-polarity controls). Zero intensity bits contribute no gates,
/// so an all-zero image compiles to the Hadamard layer alone.
///
/// Applying the result to |0...0> matches analytic_neqr_state(image).
QuantumCircuit build_neqr_circuit(const GrayImage& image);

/// The encoded state built directly, without simulating any gates:
/// amplitude 1/2^n at basis_index(p, image[p]) for every pixel p, zero
/// elsewhere. Normalized to unit norm (1/2^n per term).
Statevector analytic_neqr_state(const GrayImage& image);

/// Reconstructs an image from measurement counts over q + 2n qubits. Each
/// pixel takes the color of the most frequent basis index carrying its
/// position (ties break toward the smaller color value). Positions with
/// zero observations raise IncompleteReadoutError listing every missing
/// (y, x).
GrayImage decode_from_counts(const MeasurementCounts& counts, const NeqrLayout& layout);

}  // namespace qpix
