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
#include <string>
#include <vector>

#include "irisdof/eye_image.hpp"
#include "irisdof/normalized_iris.hpp"

namespace irisdof {

/// Image selection thresholds. Both bounds are inclusive: an image passes at
/// median exactly `min_median_intensity` and pupil radius exactly
/// `max_pupil_radius`. Median is on the 0-255 scale; radius in source pixels.
struct SelectionCriteria {
    double min_median_intensity = 70.0;
    double max_pupil_radius = 52.0;
};

struct SelectionInput {
    NormalizedIris nir;
    IrisSegmentation seg;
};

struct SelectionRejection {
    std::size_t index = 0;
    std::string image_id;
    std::string reason;
};

struct SelectionResult {
    std::vector<SelectionInput> accepted;  // input order preserved
    std::vector<SelectionRejection> rejected;
};

/// Keeps items whose unmasked intensity median (x255) is >= the floor and
/// whose pupil radius is <= the cap. Items with zero valid pixels are
/// rejected with a diagnostic record, never a hard failure.
SelectionResult select_images(std::vector<SelectionInput> items,
                              const SelectionCriteria& criteria);

/// Median of the unmasked intensities, unit scale. Even counts average the
/// two central order statistics. Throws DegenerateImageError when no cell is
/// valid.
double median_unmasked(const NormalizedIris& nir);

/// Multiplies every unmasked intensity by target_median / median(unmasked) so
/// the unmasked median lands exactly on target_median; no clamping, values
/// above 1.0 stay. Masked cells are set to target_median. The applied factor
/// accumulates into intensity_scale.
/// Throws DegenerateImageError on a zero median or when no cell is valid.
NormalizedIris normalize_intensity(const NormalizedIris& nir,
                                   double target_median = 127.0 / 255.0);

}  // namespace irisdof
