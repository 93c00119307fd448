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

#include "irisdof/downscale.hpp"

#include <cmath>
#include <vector>

#include "irisdof/error.hpp"
#include "irisdof/preprocess.hpp"

namespace irisdof {

namespace {

// Keys cubic convolution kernel, a = -0.5.
double keys_cubic(double u) {
    u = std::fabs(u);
    if (u <= 1.0) return (1.5 * u - 2.5) * u * u + 1.0;
    if (u < 2.0) return -0.5 * (((u - 5.0) * u + 8.0) * u - 4.0);
    return 0.0;
}

enum class Boundary { clamp, wrap };

struct Tap {
    int src;
    double weight;
};

// Contributor table for one axis. Output index i samples the continuous
// source coordinate (i + 0.5)/scale - 0.5; on reduction the kernel support
// widens by 1/scale and the kernel is evaluated at scaled offsets.
std::vector<std::vector<Tap>> build_taps(int n_in, int n_out, double scale,
                                         Boundary boundary) {
    const double kernel_scale = scale < 1.0 ? scale : 1.0;
    const double support = 2.0 / kernel_scale;

    std::vector<std::vector<Tap>> taps(n_out);
    for (int i = 0; i < n_out; ++i) {
        const double center = (i + 0.5) / scale - 0.5;
        const int lo = static_cast<int>(std::ceil(center - support));
        const int hi = static_cast<int>(std::floor(center + support));

        double sum = 0.0;
        auto& row = taps[i];
        row.reserve(hi - lo + 1);
        for (int j = lo; j <= hi; ++j) {
            const double w = keys_cubic(kernel_scale * (center - j));
            if (w == 0.0) continue;
            int src = j;
            if (boundary == Boundary::wrap) {
                src = ((j % n_in) + n_in) % n_in;
            } else {
                if (src < 0) src = 0;
                if (src >= n_in) src = n_in - 1;
            }
            row.push_back({src, w});
            sum += w;
        }
        for (Tap& t : row) t.weight /= sum;
    }
    return taps;
}

// Separable application: radial pass (clamped) then angular pass (wrapped).
std::vector<double> apply_separable(const std::vector<double>& in, int rows,
                                    int cols,
                                    const std::vector<std::vector<Tap>>& row_taps,
                                    const std::vector<std::vector<Tap>>& col_taps) {
    const int out_rows = static_cast<int>(row_taps.size());
    const int out_cols = static_cast<int>(col_taps.size());

    std::vector<double> tmp(static_cast<std::size_t>(out_rows) * cols, 0.0);
    for (int r = 0; r < out_rows; ++r) {
        for (const Tap& t : row_taps[r]) {
            const double* src = &in[static_cast<std::size_t>(t.src) * cols];
            double* dst = &tmp[static_cast<std::size_t>(r) * cols];
            for (int c = 0; c < cols; ++c) dst[c] += t.weight * src[c];
        }
    }

    std::vector<double> out(static_cast<std::size_t>(out_rows) * out_cols, 0.0);
    for (int r = 0; r < out_rows; ++r) {
        const double* src = &tmp[static_cast<std::size_t>(r) * cols];
        double* dst = &out[static_cast<std::size_t>(r) * out_cols];
        for (int c = 0; c < out_cols; ++c) {
            double acc = 0.0;
            for (const Tap& t : col_taps[c]) acc += t.weight * src[t.src];
            dst[c] = acc;
        }
    }
    return out;
}

}  // namespace

int scaled_dim(int base, double scale) {
    if (!(scale > 0.0 && scale <= 1.0))
        throw ArgumentError("scale must lie in (0, 1]");
    if (base < 1) throw ArgumentError("base dimension must be at least 1");
    return static_cast<int>(std::ceil(scale * base));
}

ResolutionLevel resolution_level(int base_rows, int base_cols, double scale) {
    return {scale, scaled_dim(base_rows, scale), scaled_dim(base_cols, scale)};
}

NormalizedIris downscale(const NormalizedIris& nir, double scale) {
    const int out_rows = scaled_dim(nir.rows, scale);
    const int out_cols = scaled_dim(nir.cols, scale);

    const auto row_taps = build_taps(nir.rows, out_rows, scale, Boundary::clamp);
    const auto col_taps = build_taps(nir.cols, out_cols, scale, Boundary::wrap);

    // Fill occluded cells with the unmasked median so they cannot bleed into
    // valid neighborhoods through the filter support.
    const std::size_t n_valid = nir.valid_count();
    std::vector<double> filled = nir.intensities;
    if (n_valid > 0 && n_valid < nir.cells()) {
        const double fill = median_unmasked(nir);
        for (std::size_t k = 0; k < filled.size(); ++k)
            if (!nir.mask[k]) filled[k] = fill;
    }

    std::vector<double> coverage(nir.cells());
    for (std::size_t k = 0; k < coverage.size(); ++k)
        coverage[k] = nir.mask[k] ? 1.0 : 0.0;

    NormalizedIris out;
    out.rows = out_rows;
    out.cols = out_cols;
    out.intensities = apply_separable(filled, nir.rows, nir.cols, row_taps, col_taps);
    out.image_id = nir.image_id;
    out.subject_id = nir.subject_id;
    out.scale = nir.scale * scale;
    out.intensity_scale = nir.intensity_scale;

    const std::vector<double> cov =
        apply_separable(coverage, nir.rows, nir.cols, row_taps, col_taps);
    out.mask.resize(cov.size());
    for (std::size_t k = 0; k < cov.size(); ++k)
        out.mask[k] = cov[k] >= 0.5 ? 1 : 0;

    // The cubic kernel can undershoot; comparisons require non-negative values.
    for (double& v : out.intensities)
        if (v < 0.0) v = 0.0;
    return out;
}

}  // namespace irisdof
