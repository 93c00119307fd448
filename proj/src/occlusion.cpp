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

#include "irisdof/occlusion.hpp"

#include <algorithm>

#include "irisdof/error.hpp"
#include "irisdof/unwrap.hpp"

namespace irisdof {

OcclusionMask specular_mask_heuristic(const EyeImage& eye,
                                      const IrisSegmentation& seg,
                                      const NormalizedIris& normalized,
                                      int threshold, int dilation) {
    const int rows = normalized.rows;
    const int cols = normalized.cols;
    OcclusionMask out = OcclusionMask::all_valid(rows, cols);

    std::vector<std::uint8_t> hot(static_cast<std::size_t>(rows) * cols, 0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const SamplePoint p = unwrap_sample_point(seg, rows, cols, i, j);
            double v;
            if (bilinear_sample(eye, p.x, p.y, v) && v >= threshold)
                hot[static_cast<std::size_t>(i) * cols + j] = 1;
        }
    }

    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (!hot[static_cast<std::size_t>(i) * cols + j]) continue;
            const int r0 = std::max(0, i - dilation);
            const int r1 = std::min(rows - 1, i + dilation);
            for (int r = r0; r <= r1; ++r) {
                for (int dc = -dilation; dc <= dilation; ++dc) {
                    const int c = ((j + dc) % cols + cols) % cols;
                    out.at(r, c) = 0;
                }
            }
        }
    }
    return out;
}

NormalizedIris attach_mask(const NormalizedIris& nir,
                           const OcclusionMask* external,
                           const OcclusionMask* heuristic) {
    NormalizedIris out = nir;
    for (const OcclusionMask* m : {external, heuristic}) {
        if (!m) continue;
        if (m->rows != nir.rows || m->cols != nir.cols)
            throw ArgumentError("occlusion mask dims do not match the normalized image");
        for (std::size_t k = 0; k < out.mask.size(); ++k)
            out.mask[k] = out.mask[k] & m->valid[k];
    }
    return out;
}

}  // namespace irisdof
