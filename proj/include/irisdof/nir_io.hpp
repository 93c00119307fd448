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

#include "irisdof/normalized_iris.hpp"

namespace irisdof {

/// NIR1 container, little-endian throughout:
///   "NIR1" | u32 rows | u32 cols | f32 scale | f32 intensity_scale |
///   16-byte zero-padded image_id | 16-byte zero-padded subject_id |
///   rows*cols f32 intensities (row-major, row 0 = pupil boundary) |
///   rows*cols mask bytes (1 = valid).
/// Intensities are stored single-precision; computation stays double.
void save_nir(const NormalizedIris& nir, const std::filesystem::path& path);

/// Throws FormatError (with byte offset) on bad magic, dim overflow, or a
/// truncated payload; IoError when the file cannot be opened.
NormalizedIris load_nir(const std::filesystem::path& path);

}  // namespace irisdof
