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
/// Grayscale image files. PGM (both plain P2 and binary P5, netpbm
/// convention, maxval = 2^q - 1) is the primary format; CSV (one image
/// row per line of comma-separated decimals) is the fallback.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qpix/image.hpp"

namespace qpix {

enum class PgmFormat { Plain, Binary };  // P2, P5

/// Parses PGM bytes. The maxval must be 2^q - 1 for some q >= 1; samples
/// are one byte up to maxval 255 and two big-endian bytes above.
/// Malformed input raises ParseError carrying the byte offset.
GrayImage parse_pgm(std::string_view data);

/// Canonical PGM bytes: magic, "width height", maxval, raster. The same
/// image always serializes to the same bytes.
std::string serialize_pgm(const GrayImage& image, PgmFormat format);

/// Parses CSV rows of decimal intensities. The bit depth is the smallest
/// q covering the largest value unless an explicit depth is given.
GrayImage parse_csv(std::string_view data, std::optional<int> bit_depth = {});

std::string serialize_csv(const GrayImage& image);

GrayImage read_pgm(const std::filesystem::path& path);
GrayImage read_csv(const std::filesystem::path& path, std::optional<int> bit_depth = {});

/// Reads either format, sniffing the PGM magic (P2/P5) first and falling
/// back to CSV.
GrayImage read_image_file(const std::filesystem::path& path,
                          std::optional<int> bit_depth = {});

void write_pgm(const GrayImage& image, const std::filesystem::path& path,
               PgmFormat format);
void write_csv(const GrayImage& image, const std::filesystem::path& path);

/// Writes via a temporary file in the target directory plus an atomic
/// rename, so readers never observe a partial file.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace qpix
