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

#include "irisdof/eye_image.hpp"
#include "irisdof/normalized_iris.hpp"

namespace irisdof {

/// Binary 8-bit PGM (P5, maxval 255). Identity fields are left empty; the
/// caller fills them from the manifest. Throws FormatError / IoError.
EyeImage read_pgm(const std::filesystem::path& path);
void write_pgm(const EyeImage& eye, const std::filesystem::path& path);

/// Binary PBM (P4) aligned to the normalized grid. Black (bit 1) marks an
/// occluded cell, so valid = !bit.
OcclusionMask read_pbm(const std::filesystem::path& path);
void write_pbm(const OcclusionMask& mask, const std::filesystem::path& path);

}  // namespace irisdof
