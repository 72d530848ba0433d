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

#include "qpix/neqr.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace qpix {

QuantumCircuit build_neqr_circuit(const GrayImage& image) {
    validate_image(image);
    const NeqrLayout layout = NeqrLayout::for_image(image);
    QuantumCircuit circuit(layout.total_qubits());

    for (int j = 0; j < layout.position_qubits(); ++j) {
        circuit.add(Gate::h(layout.q + j));
    }

    // One block per pixel, in linear position order; within a block the
    // color bits ascend.
    for (std::uint64_t linear = 0; linear < layout.num_positions(); ++linear) {
        const std::uint32_t value = image.pixels[linear];
        if (value == 0) {
            continue;  // the all-identities block
        }
        std::vector<Control> pattern;
        pattern.reserve(layout.position_qubits());
        for (int j = 0; j < layout.position_qubits(); ++j) {
            pattern.push_back(Control{layout.q + j, static_cast<int>((linear >> j) & 1)});
        }
        for (int bit = 0; bit < layout.q; ++bit) {
            if ((value >> bit) & 1) {
                circuit.add(Gate::x(bit, pattern));
            }
        }
    }
    return circuit;
}

Statevector analytic_neqr_state(const GrayImage& image) {
    validate_image(image);
    const NeqrLayout layout = NeqrLayout::for_image(image);
    Statevector state(layout.total_qubits());
    auto& amps = state.mutable_amplitudes();
    amps[0] = 0.0;

    const double amplitude = std::ldexp(1.0, -layout.n);  // exactly 2^-n
    for (std::uint64_t linear = 0; linear < layout.num_positions(); ++linear) {
        amps[(linear << layout.q) | image.pixels[linear]] = amplitude;
    }
    return state;
}

GrayImage decode_from_counts(const MeasurementCounts& counts, const NeqrLayout& layout) {
    if (counts.num_qubits != layout.total_qubits()) {
        throw ValidationError("counts span " + std::to_string(counts.num_qubits) +
                              " qubits but the layout needs " +
                              std::to_string(layout.total_qubits()));
    }

    struct Best {
        std::uint64_t count = 0;
        std::uint32_t color = 0;
        bool seen = false;
    };
    std::vector<Best> best(layout.num_positions());

    for (const auto& [index, count] : counts.counts) {
        if (index >= layout.dimension()) {
            throw ValidationError("basis index " + std::to_string(index) +
                                  " out of range for " +
                                  std::to_string(layout.total_qubits()) + " qubits");
        }
        const std::uint64_t linear = index >> layout.q;
        const std::uint32_t color = layout.color_of(index);
        Best& slot = best[linear];
        // Ordered map iteration makes "first strictly greater wins" the
        // smallest-color tie break.
        if (!slot.seen || count > slot.count) {
            slot = Best{count, color, true};
        }
    }

    std::vector<std::pair<int, int>> missing;
    for (std::uint64_t linear = 0; linear < best.size(); ++linear) {
        if (!best[linear].seen) {
            const PixelPosition p = layout.position_from_linear(linear);
            missing.emplace_back(p.y, p.x);
        }
    }
    if (!missing.empty()) {
        std::string what = "no observations for " + std::to_string(missing.size()) +
                           " pixel position(s):";
        for (const auto& [y, x] : missing) {
            what += " (" + std::to_string(y) + "," + std::to_string(x) + ")";
        }
        throw IncompleteReadoutError(what, std::move(missing));
    }

    GrayImage image(layout.n, layout.q, {});
    image.pixels.reserve(best.size());
    for (const Best& slot : best) {
        image.pixels.push_back(slot.color);
    }
    validate_image(image);
    return image;
}

}  // namespace qpix
