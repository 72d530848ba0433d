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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpix {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An input violates a documented precondition or invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A requested simulation exceeds the supported qubit budget.
class CapacityError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// An image grid is not a square power-of-two raster.
class ImageShapeError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// A pixel value does not fit the declared bit depth.
class IntensityRangeError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

/// Malformed input file. `byte_offset` points at the offending byte.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : Error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

  private:
    std::size_t byte_offset_;
};

/// Measurement counts do not cover every pixel position.
/// `missing_positions` holds the uncovered (y, x) pairs in row-major order.
class IncompleteReadoutError : public Error {
  public:
    IncompleteReadoutError(const std::string& what,
                           std::vector<std::pair<int, int>> missing_positions)
        : Error(what), missing_positions_(std::move(missing_positions)) {}

    const std::vector<std::pair<int, int>>& missing_positions() const noexcept {
        return missing_positions_;
    }

  private:
    std::vector<std::pair<int, int>> missing_positions_;
};

/// A search was requested but nothing in the image matches the target.
class NoMarkedItemsError : public Error {
  public:
    using Error::Error;
};

/// Sampling retries were exhausted without a classically verified hit.
class SearchFailureError : public Error {
  public:
    using Error::Error;
};

}  // namespace qpix
