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

#include "irisdof/normalized_iris.hpp"

namespace irisdof {

/// One rung of the resolution pyramid: rows = ceil(scale * base_rows),
/// cols = ceil(scale * base_cols).
struct ResolutionLevel {
    double scale = 1.0;
    int rows = 0;
    int cols = 0;
};

/// ceil(scale * base). Throws ArgumentError unless 0 < scale <= 1.
int scaled_dim(int base, double scale);

ResolutionLevel resolution_level(int base_rows, int base_cols, double scale);

/// Cubic-convolution reduction (Keys kernel, a = -0.5) with antialiasing:
/// for scale < 1 the kernel support widens by 1/scale and the kernel is
/// evaluated at scaled offsets. Separable; columns wrap angularly, rows
/// clamp at the radial edges. Masked cells are pre-filled with the unmasked
/// median so occlusions do not bleed; the mask itself is resampled as a
/// real-valued coverage field and thresholded at 0.5.
NormalizedIris downscale(const NormalizedIris& nir, double scale);

}  // namespace irisdof
