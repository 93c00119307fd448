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

#include <cstdint>
#include <string>
#include <vector>

namespace irisdof {

/// Boolean grid marking usable iris pixels (1 = usable). Dims must match the
/// normalized image it annotates.
struct OcclusionMask {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> valid;

    static OcclusionMask all_valid(int rows, int cols) {
        OcclusionMask m;
        m.rows = rows;
        m.cols = cols;
        m.valid.assign(static_cast<std::size_t>(rows) * cols, 1);
        return m;
    }

    std::uint8_t at(int r, int c) const {
        return valid[static_cast<std::size_t>(r) * cols + c];
    }
    std::uint8_t& at(int r, int c) {
        return valid[static_cast<std::size_t>(r) * cols + c];
    }
};

/// Rectangular polar-unwrapped iris grid.
///
/// Row 0 is the pupil-iris boundary, the last row the iris-sclera boundary.
/// Columns are periodic: column 0 and the last column are angular neighbors.
/// Intensities are unit-scale (8-bit value v stored as v/255), carried as
/// doubles; values above 1.0 are legal after intensity normalization.
struct NormalizedIris {
    int rows = 0;
    int cols = 0;
    std::vector<double> intensities;  // row-major
    std::vector<std::uint8_t> mask;   // 1 = valid iris pixel
    std::string image_id;
    std::string subject_id;
    double scale = 1.0;            // resolution fraction relative to the 128x960 base
    double intensity_scale = 1.0;  // multiplicative factor already applied

    std::size_t cells() const { return intensities.size(); }

    double at(int r, int c) const {
        return intensities[static_cast<std::size_t>(r) * cols + c];
    }
    double& at(int r, int c) {
        return intensities[static_cast<std::size_t>(r) * cols + c];
    }
    bool valid_at(int r, int c) const {
        return mask[static_cast<std::size_t>(r) * cols + c] != 0;
    }

    std::size_t valid_count() const {
        std::size_t n = 0;
        for (auto v : mask) n += (v != 0);
        return n;
    }
};

/// Throws ArgumentError when dims are non-positive, grid sizes disagree, or
/// an intensity is negative or non-finite.
void validate(const NormalizedIris& nir);

}  // namespace irisdof
