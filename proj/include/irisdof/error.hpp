// Copyright 2026 the irisdof authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irisdof {

/// Violated call contract: bad dimensions, out-of-range flag values, etc.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Segmentation geometry that cannot produce a valid unwrap.
struct SegmentationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated file content. `offset` is the byte position at
/// which the problem was detected.
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& what, std::size_t at = 0)
        : std::runtime_error(what + " (byte offset " + std::to_string(at) + ")"), offset(at) {}
    std::size_t offset;
};

/// Image with no usable pixels or a zero intensity median.
struct DegenerateImageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Statistics that cannot support a binomial fit (zero variance, too few pairs).
struct DegenerateStatisticsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace irisdof
