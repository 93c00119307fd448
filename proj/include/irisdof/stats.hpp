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
#include <string>
#include <vector>

#include "irisdof/compare.hpp"
#include "irisdof/downscale.hpp"

namespace irisdof {

/// Binomial trial count N and per-trial success probability p.
struct BinomialModel {
    long long trials = 1;
    double success_prob = 0.5;
};

/// Exact binomial probability for k successes, computed through log-gamma so
/// it stays finite for N in the hundreds. Throws ArgumentError when k is
/// outside [0, N], N < 1, or p is outside [0, 1].
double binomial_pmf(const BinomialModel& model, long long k);

struct DofEstimate {
    double dof_real = 0.0;
    long long dof = 0;  // dof_real rounded to nearest, half away from zero
};

/// Degrees of freedom of the binomial matching (mean, std): p(1-p)/std^2.
/// Throws DegenerateStatisticsError when std is 0 or mean is outside (0, 1).
DofEstimate estimate_dof(double mean, double std_dev);

struct ImposterStats {
    std::uint64_t n_pairs = 0;
    double mean = 0.0;     // the binomial p
    double std_dev = 0.0;  // sample standard deviation, n-1 denominator
    double dof_real = 0.0;
    long long dof = 0;
    bool dof_defined = false;  // false iff std_dev == 0
};

/// Mean / sample std / DoF of the Hamming values. Sums are compensated so the
/// result is order-independent at the emitted precision.
/// Throws ArgumentError on fewer than 2 pairs.
ImposterStats imposter_stats(const std::vector<PairResult>& pairs);

enum class HistogramNormalization { counts, probability };

/// Bins tile [0, 1] exactly. n_bins = 0 picks the binomial lattice pitch
/// (one bin per 1/N, N = fitted DoF).
struct HistogramSpec {
    int n_bins = 0;
    HistogramNormalization normalization = HistogramNormalization::probability;
};

struct HistogramBin {
    double left = 0.0;
    std::uint64_t count = 0;
    double mass = 0.0;  // count, or count/n under probability normalization
};

struct OverlayPoint {
    double x = 0.0;     // k / N
    double mass = 0.0;  // pmf scaled to the histogram's normalization
};

struct HistogramWithOverlay {
    std::vector<HistogramBin> bins;
    std::vector<OverlayPoint> overlay;  // N + 1 lattice points
};

/// Histogram of the Hamming values plus the fitted binomial overlay
/// (N = stats.dof, p = stats.mean), scaled so total masses agree.
/// Throws DegenerateStatisticsError when stats.dof is undefined.
HistogramWithOverlay histogram_with_overlay(const std::vector<PairResult>& pairs,
                                            const ImposterStats& stats,
                                            const HistogramSpec& spec = {});

struct SweepLevel {
    ResolutionLevel level;
    std::vector<PairResult> pairs;
};

/// One row of the resolution-sweep table.
struct SweepRow {
    double scale = 1.0;
    int rows = 0;
    int cols = 0;
    std::uint64_t n_pairs = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double dof_real = 0.0;
    long long dof = 0;
    bool dof_defined = false;
};

/// Builds a row directly from published or precomputed moments.
SweepRow sweep_row_from_moments(const ResolutionLevel& level,
                                std::uint64_t n_pairs, double mean,
                                double std_dev);

struct SweepTable {
    std::vector<SweepRow> rows;  // descending scale, one per non-empty level
    std::vector<std::string> diagnostics;
};

/// imposter_stats applied per level. Levels must arrive sorted by strictly
/// descending scale (ArgumentError otherwise); levels with fewer than 2 pairs
/// are skipped with a diagnostic.
SweepTable sweep_table(const std::vector<SweepLevel>& levels);

}  // namespace irisdof
