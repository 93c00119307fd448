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

#include "irisdof/preprocess.hpp"

#include <algorithm>
#include <utility>

#include "irisdof/error.hpp"

namespace irisdof {

namespace {

// Median of a scratch vector; even counts average the two central order
// statistics.
double median_of(std::vector<double>& v) {
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    const double hi = v[mid];
    if (n % 2 == 1) return hi;
    std::nth_element(v.begin(), v.begin() + (mid - 1), v.begin() + mid);
    return 0.5 * (v[mid - 1] + hi);
}

}  // namespace

double median_unmasked(const NormalizedIris& nir) {
    std::vector<double> vals;
    vals.reserve(nir.cells());
    for (std::size_t k = 0; k < nir.cells(); ++k)
        if (nir.mask[k]) vals.push_back(nir.intensities[k]);
    if (vals.empty())
        throw DegenerateImageError("image '" + nir.image_id + "' has no unmasked pixels");
    return median_of(vals);
}

SelectionResult select_images(std::vector<SelectionInput> items,
                              const SelectionCriteria& criteria) {
    SelectionResult result;
    for (std::size_t i = 0; i < items.size(); ++i) {
        SelectionInput& item = items[i];
        const std::string id = item.nir.image_id;
        if (item.nir.valid_count() == 0) {
            result.rejected.push_back({i, id, "no unmasked pixels"});
            continue;
        }
        const double median255 = median_unmasked(item.nir) * 255.0;
        if (median255 < criteria.min_median_intensity) {
            result.rejected.push_back(
                {i, id, "median intensity " + std::to_string(median255) + " below floor"});
            continue;
        }
        if (item.seg.pupil_radius > criteria.max_pupil_radius) {
            result.rejected.push_back(
                {i, id, "pupil radius " + std::to_string(item.seg.pupil_radius) + " above cap"});
            continue;
        }
        result.accepted.push_back(std::move(item));
    }
    return result;
}

NormalizedIris normalize_intensity(const NormalizedIris& nir, double target_median) {
    const double median = median_unmasked(nir);  // throws when nothing is valid
    if (median <= 0.0)
        throw DegenerateImageError("image '" + nir.image_id + "' has zero intensity median");

    const double factor = target_median / median;
    NormalizedIris out = nir;
    for (std::size_t k = 0; k < out.cells(); ++k)
        out.intensities[k] = out.mask[k] ? out.intensities[k] * factor : target_median;
    out.intensity_scale = nir.intensity_scale * factor;
    return out;
}

}  // namespace irisdof
