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

enum class EyeSide { left, right, unknown };

EyeSide eye_side_from_string(const std::string& s);
std::string to_string(EyeSide side);

/// Raw 8-bit grayscale eye capture, row-major, origin at the top-left corner.
/// Pixel centers sit on integer coordinates: (x, y) with x in [0, width) and
/// y in [0, height).
struct EyeImage {
    std::string image_id;
    std::string subject_id;
    EyeSide eye_side = EyeSide::unknown;
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> intensities;

    std::uint8_t at(int x, int y) const {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return intensities[static_cast<std::size_t>(y) * width + x];
    }
};

/// Pupil and limbus circles in source-image pixel coordinates. Sub-pixel
/// centers and radii are allowed. The pupil circle must lie strictly inside
/// the iris circle.
struct IrisSegmentation {
    double pupil_center_x = 0.0;
    double pupil_center_y = 0.0;
    double pupil_radius = 0.0;
    double iris_center_x = 0.0;
    double iris_center_y = 0.0;
    double iris_radius = 0.0;
};

/// Throws ArgumentError when dims are non-positive or the grid size disagrees.
void validate(const EyeImage& eye);

/// Throws SegmentationError when radii are non-positive, pupil_radius >=
/// iris_radius, or the pupil circle is not strictly contained in the iris
/// circle.
void validate(const IrisSegmentation& seg);

}  // namespace irisdof
