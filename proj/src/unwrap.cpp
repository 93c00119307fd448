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

#include "irisdof/unwrap.hpp"

#include <cmath>
#include <numbers>

#include "irisdof/error.hpp"

namespace irisdof {

SamplePoint unwrap_sample_point(const IrisSegmentation& seg, int rows, int cols,
                                int row, int col) {
    const double theta = 2.0 * std::numbers::pi * (col + 0.5) / cols;
    // Image y points down; (cos t, -sin t) walks counterclockwise in view.
    const double dir_x = std::cos(theta);
    const double dir_y = -std::sin(theta);

    const double px = seg.pupil_center_x;
    const double py = seg.pupil_center_y;

    // Ray/limbus intersection: |P + t*dir - C|^2 = R^2 with |dir| = 1.
    const double ox = px - seg.iris_center_x;
    const double oy = py - seg.iris_center_y;
    const double b = dir_x * ox + dir_y * oy;
    const double c = ox * ox + oy * oy - seg.iris_radius * seg.iris_radius;
    const double disc = b * b - c;
    if (disc < 0.0)
        throw SegmentationError("unwrap ray misses the limbus circle");
    const double t_outer = -b + std::sqrt(disc);
    if (t_outer <= 0.0)
        throw SegmentationError("limbus intersection lies behind the pupil center");

    const double inner_x = px + seg.pupil_radius * dir_x;
    const double inner_y = py + seg.pupil_radius * dir_y;
    const double outer_x = px + t_outer * dir_x;
    const double outer_y = py + t_outer * dir_y;

    const double f = (row + 0.5) / rows;
    return {inner_x + f * (outer_x - inner_x), inner_y + f * (outer_y - inner_y)};
}

bool bilinear_sample(const EyeImage& eye, double x, double y, double& out) {
    const int w = eye.width;
    const int h = eye.height;
    if (x < 0.0 || y < 0.0 || x > w - 1.0 || y > h - 1.0) return false;

    int x0 = static_cast<int>(std::floor(x));
    int y0 = static_cast<int>(std::floor(y));
    // Exact right/bottom edge: shift the cell so the 2x2 stencil stays inside.
    if (x0 == w - 1 && w > 1) x0 = w - 2;
    if (y0 == h - 1 && h > 1) y0 = h - 2;
    const double fx = x - x0;
    const double fy = y - y0;

    if (w == 1 && h == 1) {
        out = eye.at(0, 0);
        return true;
    }
    const int x1 = (w == 1) ? x0 : x0 + 1;
    const int y1 = (h == 1) ? y0 : y0 + 1;

    const double v00 = eye.at(x0, y0);
    const double v10 = eye.at(x1, y0);
    const double v01 = eye.at(x0, y1);
    const double v11 = eye.at(x1, y1);
    out = (1.0 - fy) * ((1.0 - fx) * v00 + fx * v10) +
          fy * ((1.0 - fx) * v01 + fx * v11);
    return true;
}

NormalizedIris unwrap(const EyeImage& eye, const IrisSegmentation& seg,
                      int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw ArgumentError("unwrap dims must be at least 1x1");
    validate(eye);
    validate(seg);

    NormalizedIris nir;
    nir.rows = rows;
    nir.cols = cols;
    nir.intensities.assign(static_cast<std::size_t>(rows) * cols, 0.0);
    nir.mask.assign(static_cast<std::size_t>(rows) * cols, 0);
    nir.image_id = eye.image_id;
    nir.subject_id = eye.subject_id;

    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const SamplePoint p = unwrap_sample_point(seg, rows, cols, i, j);
            double v;
            if (bilinear_sample(eye, p.x, p.y, v)) {
                nir.at(i, j) = v / 255.0;
                nir.mask[static_cast<std::size_t>(i) * cols + j] = 1;
            }
        }
    }
    return nir;
}

}  // namespace irisdof
