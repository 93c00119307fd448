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

#include "irisdof/normalized_iris.hpp"

#include <cmath>

#include "irisdof/error.hpp"

namespace irisdof {

void validate(const NormalizedIris& nir) {
    if (nir.rows < 1 || nir.cols < 1)
        throw ArgumentError("normalized iris dims must be at least 1x1");
    const auto expected = static_cast<std::size_t>(nir.rows) * nir.cols;
    if (nir.intensities.size() != expected)
        throw ArgumentError("intensity grid size mismatch");
    if (nir.mask.size() != expected)
        throw ArgumentError("mask dims must equal intensity dims");
    if (!(nir.scale > 0.0 && nir.scale <= 1.0))
        throw ArgumentError("scale must lie in (0, 1]");
    if (!(nir.intensity_scale > 0.0))
        throw ArgumentError("intensity_scale must be positive");
    for (double v : nir.intensities)
        if (!std::isfinite(v) || v < 0.0)
            throw ArgumentError("intensities must be finite and non-negative");
}

}  // namespace irisdof
