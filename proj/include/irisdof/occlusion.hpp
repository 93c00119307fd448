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

#include "irisdof/eye_image.hpp"
#include "irisdof/normalized_iris.hpp"

namespace irisdof {

/// Marks normalized cells whose source sample reads at or above `threshold`
/// (0-255 scale), dilated by `dilation` cells in the normalized grid
/// (wrapping angularly, clipping radially). Samples are re-read from the
/// source image, so the result does not depend on any intensity scaling
/// applied to `normalized`.
OcclusionMask specular_mask_heuristic(const EyeImage& eye,
                                      const IrisSegmentation& seg,
                                      const NormalizedIris& normalized,
                                      int threshold = 250, int dilation = 2);

/// ANDs the image mask with every provided mask (nullptr = none).
/// Intensities are unchanged. Throws ArgumentError on dimension mismatch.
NormalizedIris attach_mask(const NormalizedIris& nir,
                           const OcclusionMask* external = nullptr,
                           const OcclusionMask* heuristic = nullptr);

}  // namespace irisdof
