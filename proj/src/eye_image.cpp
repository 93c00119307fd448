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

#include "irisdof/eye_image.hpp"

#include <cmath>

#include "irisdof/error.hpp"

namespace irisdof {

EyeSide eye_side_from_string(const std::string& s) {
    if (s == "left" || s == "L" || s == "l") return EyeSide::left;
    if (s == "right" || s == "R" || s == "r") return EyeSide::right;
    if (s.empty() || s == "unknown") return EyeSide::unknown;
    throw ArgumentError("unrecognized eye_side value: '" + s + "'");
}

std::string to_string(EyeSide side) {
    switch (side) {
        case EyeSide::left: return "left";
        case EyeSide::right: return "right";
        default: return "unknown";
    }
}

void validate(const EyeImage& eye) {
    if (eye.width < 1 || eye.height < 1)
        throw ArgumentError("eye image dims must be at least 1x1");
    const auto expected = static_cast<std::size_t>(eye.width) * eye.height;
    if (eye.intensities.size() != expected)
        throw ArgumentError("eye image grid has " + std::to_string(eye.intensities.size()) +
                            " entries, expected " + std::to_string(expected));
}

void validate(const IrisSegmentation& seg) {
    if (!(seg.pupil_radius > 0.0))
        throw SegmentationError("pupil_radius must be positive");
    if (!(seg.iris_radius > 0.0))
        throw SegmentationError("iris_radius must be positive");
    if (!(seg.pupil_radius < seg.iris_radius))
        throw SegmentationError("pupil_radius must be smaller than iris_radius");
    const double dx = seg.pupil_center_x - seg.iris_center_x;
    const double dy = seg.pupil_center_y - seg.iris_center_y;
    const double center_dist = std::sqrt(dx * dx + dy * dy);
    if (!(center_dist + seg.pupil_radius < seg.iris_radius))
        throw SegmentationError("pupil circle must lie strictly inside the iris circle");
}

}  // namespace irisdof
