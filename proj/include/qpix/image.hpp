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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qpix/errors.hpp"

namespace qpix {

/// Row and column of one pixel. Both indices are in [0, 2^n).
struct PixelPosition {
    int y = 0;
    int x = 0;

    friend auto operator<=>(const PixelPosition&, const PixelPosition&) = default;
};

/// A 2^n x 2^n grid of q-bit grayscale intensities, row-major.
/// 0 is black, 2^q - 1 is white.
struct GrayImage {
    int n = 0;                         ///< side exponent; side length is 2^n
    int q = 0;                         ///< intensity bit depth
    std::vector<std::uint32_t> pixels; ///< 2^(2n) entries, each < 2^q

    GrayImage() = default;
    GrayImage(int n, int q, std::vector<std::uint32_t> pixels);

    /// Constant image of the given value, validated.
    static GrayImage filled(int n, int q, std::uint32_t value);

    /// Builds from an explicit raster, deriving the side exponent.
    /// Throws ImageShapeError unless the raster is square with a
    /// power-of-two side of at least 2.
    static GrayImage from_raster(std::size_t width, std::size_t height, int q,
                                 std::vector<std::uint32_t> values);

    int side() const noexcept { return 1 << n; }
    std::uint64_t pixel_count() const noexcept { return std::uint64_t{1} << (2 * n); }
    std::uint32_t max_intensity() const noexcept { return (std::uint32_t{1} << q) - 1; }

    std::uint32_t at(int y, int x) const;
    std::uint32_t& at(int y, int x);
    std::uint32_t at(PixelPosition p) const { return at(p.y, p.x); }

    std::uint32_t min_intensity_value() const;

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// Checks every GrayImage invariant. Images are never silently padded or
/// truncated; each violation raises a distinct error:
///   - ImageShapeError      wrong grid size for the declared exponent
///   - IntensityRangeError  a pixel value >= 2^q
///   - CapacityError        q + 2n exceeds the simulator qubit budget
///   - ValidationError      non-positive n or q
void validate_image(const GrayImage& image);

/// Uniformly random image: each pixel is an independent draw of q bits
/// from the generator. Consumes exactly 2^(2n) draws.
GrayImage random_image(int n, int q, std::mt19937_64& rng);

}  // namespace qpix
