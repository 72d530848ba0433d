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

#include "qpix/image.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "qpix/statevector.hpp"

namespace qpix {

GrayImage::GrayImage(int n, int q, std::vector<std::uint32_t> pixels)
    : n(n), q(q), pixels(std::move(pixels)) {}

GrayImage GrayImage::filled(int n, int q, std::uint32_t value) {
    GrayImage image(n, q, {});
    if (n < 1) {
        throw ValidationError("side exponent must be at least 1");
    }
    image.pixels.assign(image.pixel_count(), value);
    validate_image(image);
    return image;
}

GrayImage GrayImage::from_raster(std::size_t width, std::size_t height, int q,
                                 std::vector<std::uint32_t> values) {
    if (width != height) {
        throw ImageShapeError("image must be square, got " + std::to_string(width) +
                              "x" + std::to_string(height));
    }
    if (width < 2 || !std::has_single_bit(width)) {
        throw ImageShapeError("image side must be a power of two of at least 2, got " +
                              std::to_string(width));
    }
    GrayImage image(std::countr_zero(width), q, std::move(values));
    validate_image(image);
    return image;
}

std::uint32_t GrayImage::at(int y, int x) const {
    return pixels.at(static_cast<std::size_t>(y) * side() + x);
}

std::uint32_t& GrayImage::at(int y, int x) {
    return pixels.at(static_cast<std::size_t>(y) * side() + x);
}

std::uint32_t GrayImage::min_intensity_value() const {
    return *std::min_element(pixels.begin(), pixels.end());
}

void validate_image(const GrayImage& image) {
    if (image.n < 1) {
        throw ValidationError("side exponent must be at least 1, got " +
                              std::to_string(image.n));
    }
    if (image.q < 1) {
        throw ValidationError("bit depth must be at least 1, got " +
                              std::to_string(image.q));
    }
    if (image.q + 2 * image.n > kMaxQubits) {
        throw CapacityError("encoding needs " + std::to_string(image.q + 2 * image.n) +
                            " qubits, over the limit of " + std::to_string(kMaxQubits));
    }
    if (image.pixels.size() != image.pixel_count()) {
        throw ImageShapeError("expected " + std::to_string(image.pixel_count()) +
                              " pixels for side exponent " + std::to_string(image.n) +
                              ", got " + std::to_string(image.pixels.size()));
    }
    const std::uint32_t limit = image.max_intensity();
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        if (image.pixels[i] > limit) {
            throw IntensityRangeError("pixel " + std::to_string(i) + " has intensity " +
                                      std::to_string(image.pixels[i]) +
                                      ", above the " + std::to_string(image.q) +
                                      "-bit maximum " + std::to_string(limit));
        }
    }
}

GrayImage random_image(int n, int q, std::mt19937_64& rng) {
    GrayImage image(n, q, {});
    if (n < 1) {
        throw ValidationError("side exponent must be at least 1");
    }
    const std::uint64_t mask = (std::uint64_t{1} << q) - 1;
    image.pixels.reserve(image.pixel_count());
    for (std::uint64_t i = 0; i < image.pixel_count(); ++i) {
        image.pixels.push_back(static_cast<std::uint32_t>(rng() & mask));
    }
    validate_image(image);
    return image;
}

}  // namespace qpix
