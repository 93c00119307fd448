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

/// Continuous source-image coordinates of the texture sample for one output cell.
struct SamplePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Sample location for output cell (row, col) of a rows x cols unwrap.
///
/// The angle for column j is 2*pi*(j + 0.5)/cols, measured from 3 o'clock and
/// proceeding counterclockwise as the image is viewed (y axis points down, so
/// the ray direction is (cos t, -sin t)). A ray cast from the pupil center at
/// that angle meets the pupil circle at the inner anchor and the limbus circle
/// at the outer anchor; the sample sits at radial fraction (row + 0.5)/rows
/// between the anchors.
///
/// Throws SegmentationError when the ray misses the limbus circle.
SamplePoint unwrap_sample_point(const IrisSegmentation& seg, int rows, int cols,
                                int row, int col);

/// Bilinear read of the source image at continuous (x, y). Returns false when
/// the location falls outside [0, width-1] x [0, height-1].
bool bilinear_sample(const EyeImage& eye, double x, double y, double& out);

/// Rubber-sheet unwrap of the iris annulus into a rows x cols grid.
/// Intensities are divided by 255; samples outside image bounds are masked
/// rather than treated as errors.
NormalizedIris unwrap(const EyeImage& eye, const IrisSegmentation& seg,
                      int rows, int cols);

}  // namespace irisdof
