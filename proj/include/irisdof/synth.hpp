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

#include <cstdint>
#include <optional>
#include <vector>

#include "irisdof/normalized_iris.hpp"

namespace irisdof {

struct GaussianAmplitude {
    double mu = 0.5;
    double sigma = 0.1;
};

/// Recipe for a deterministic synthetic normalized-iris set. Image i derives
/// its random stream from (seed, i), so output is identical for any
/// generation order or worker count.
struct SynthSpec {
    int count = 2;
    int rows = 32;
    int cols = 240;
    std::optional<GaussianAmplitude> gaussian;  // nullopt = uniform [0,1)
    double correlation_sigma = 0.0;             // Gaussian blur radius in cells; 0 = i.i.d.
    double occlusion_fraction = 0.0;            // in [0, 1)
    std::uint64_t seed = 0;
};

/// Throws ArgumentError on count < 2, non-positive dims, negative sigma, or
/// occlusion_fraction outside [0, 1).
void validate(const SynthSpec& spec);

/// i.i.d. pixels from the amplitude distribution. Requires
/// correlation_sigma == 0.
std::vector<NormalizedIris> gen_iid(const SynthSpec& spec);

/// White Gaussian noise blurred with a Gaussian kernel of the given sigma
/// (periodic in the angular axis, clamped radially), then affinely rescaled
/// to median 127/255. Requires correlation_sigma > 0.
std::vector<NormalizedIris> gen_correlated(const SynthSpec& spec);

/// Marks a contiguous band of rows at the pupil edge plus a random angular
/// arc invalid until each image's invalid fraction reaches
/// spec.occlusion_fraction. Arc placement comes from (seed, i, mask-tag).
void gen_occlusion(const SynthSpec& spec, std::vector<NormalizedIris>& images);

/// gen_iid or gen_correlated by correlation_sigma, with occlusion applied
/// when occlusion_fraction > 0.
std::vector<NormalizedIris> generate(const SynthSpec& spec);

/// True when the requested occlusion leaves an expected pairwise overlap of
/// fewer than 2 cells; callers should surface this as a warning.
bool occlusion_overlap_warning(const SynthSpec& spec);

}  // namespace irisdof
