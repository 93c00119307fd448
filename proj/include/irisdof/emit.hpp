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

#include "irisdof/stats.hpp"

namespace irisdof {

/// Shortest representation with 9 significant digits ("%.9g").
std::string format_g9(double v);

/// pairs.csv: id_a,id_b,overlap,mismatches,hamming
void write_pairs_csv(const std::filesystem::path& path,
                     const std::vector<PairResult>& pairs);

/// stats.csv: scale,rows,cols,n_pairs,mean,std,dof_real,dof
/// (dof columns are empty for rows whose DoF is undefined).
void write_stats_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows);

/// histogram.csv: bin_left,count,overlay_mass. Overlay lattice points are
/// aggregated into the bin containing them so column sums match the
/// in-memory totals.
void write_histogram_csv(const std::filesystem::path& path,
                         const HistogramWithOverlay& h);

/// Schematic renderings; the CSVs are the contract.
void write_histogram_svg(const std::filesystem::path& path,
                         const HistogramWithOverlay& h);
void write_dof_svg(const std::filesystem::path& path,
                   const std::vector<SweepRow>& rows);

/// Writes pairs.csv, stats.csv, histogram.csv, histogram.svg and
/// dof_vs_resolution.svg into output_dir. Throws DegenerateStatisticsError
/// on an empty pair list (nothing is written) and IoError on an unwritable
/// directory.
void emit_results(const std::vector<PairResult>& pairs,
                  const ImposterStats& stats,
                  const std::vector<SweepRow>& sweep,
                  const std::filesystem::path& output_dir);

}  // namespace irisdof
