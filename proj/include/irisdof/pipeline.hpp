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

#include <filesystem>
#include <string>
#include <vector>

#include "irisdof/compare.hpp"
#include "irisdof/emit.hpp"
#include "irisdof/manifest.hpp"
#include "irisdof/preprocess.hpp"
#include "irisdof/stats.hpp"

namespace irisdof {

struct UnwrapConfig {
    int rows = 128;
    int cols = 960;
    int specular_threshold = 250;
    int specular_dilation = 2;
    bool apply_specular_heuristic = true;
    double target_median = 127.0 / 255.0;
};

struct RunConfig {
    SelectionCriteria criteria;
    CompareConfig compare;
    std::vector<double> scales{1.0, 0.8, 0.5, 0.4, 0.3, 0.2, 0.1, 0.05};
    std::filesystem::path output_dir;
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = hardware default; outputs are invariant to it
    UnwrapConfig unwrap;
};

/// Scales must lie in (0, 1], strictly descending, no duplicates.
void validate_scales(const std::vector<double>& scales);

struct NormalizeOutcome {
    std::vector<NormalizedIris> accepted;  // manifest order
    std::vector<SelectionRejection> rejected;
};

/// Manifest -> unwrap -> specular/external masks -> selection ->
/// intensity normalization. Images run in parallel on `threads` workers;
/// the outcome is identical for any worker count.
NormalizeOutcome normalize_dataset(const DatasetManifest& manifest,
                                   const UnwrapConfig& cfg,
                                   const SelectionCriteria& criteria,
                                   int threads = 0);

struct SweepOutcome {
    SweepTable table;
    std::vector<std::uint64_t> pair_counts;  // per level, post-exclusions
};

/// Pyramid -> all-pairs -> stats per scale, with files written under
/// output_dir: stats.csv, dof_vs_resolution.svg, and per level pairs +
/// histogram CSV/SVG (the highest-resolution level owns the unsuffixed
/// names, lower levels carry a _NNN percent suffix).
SweepOutcome run_sweep(const std::vector<NormalizedIris>& images,
                       const RunConfig& cfg);

/// Percent tag used in sweep file names: 1.0 -> "100", 0.05 -> "005".
std::string scale_tag(double scale);

}  // namespace irisdof
