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
#include <string>
#include <vector>

#include "irisdof/normalized_iris.hpp"

namespace irisdof {

struct CompareConfig {
    double tolerance = 0.5 / 255.0;   // strict bound on |a - b|
    bool exclude_same_subject = true;
    std::uint64_t min_overlap = 1;
};

/// One imposter comparison. id_a < id_b lexicographically.
struct PairResult {
    std::string id_a;
    std::string id_b;
    std::uint64_t overlap = 0;     // cells unmasked in both images
    std::uint64_t mismatches = 0;  // overlap cells failing the match predicate
    double hamming = 0.0;          // mismatches / overlap
};

/// True iff |a - b| < tolerance (strict).
inline bool pixels_match(double a, double b, double tolerance) {
    const double d = a - b;
    return (d < 0 ? -d : d) < tolerance;
}

/// Masked tolerance Hamming distance for one pair. Counts accumulate as exact
/// integers; the single division happens at the end in double precision.
/// Returns nullopt when the overlap is below cfg.min_overlap.
/// Throws ArgumentError on dimension mismatch.
std::optional<PairResult> hamming_pair(const NormalizedIris& x,
                                       const NormalizedIris& y,
                                       const CompareConfig& cfg = {});

struct AllPairsResult {
    std::vector<PairResult> pairs;  // ascending by (id_a, id_b)
    std::uint64_t skipped_same_subject = 0;
    std::uint64_t skipped_low_overlap = 0;
};

/// Exactly one result per unordered pair of distinct images, minus same-subject
/// pairs (when configured) and pairs under the overlap floor (counted).
/// The pair workload is split into blocks processed on `threads` workers
/// (0 = hardware default); output is bit-identical for any worker count.
/// Throws ArgumentError on fewer than 2 images, duplicate ids, or mixed dims.
AllPairsResult all_pairs(const std::vector<NormalizedIris>& images,
                         const CompareConfig& cfg = {}, int threads = 0);

}  // namespace irisdof
