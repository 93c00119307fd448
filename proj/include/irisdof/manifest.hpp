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

#include "irisdof/eye_image.hpp"

namespace irisdof {

struct ManifestRow {
    std::string image_id;
    std::string subject_id;
    EyeSide eye_side = EyeSide::unknown;
    std::filesystem::path image_path;          // resolved against the manifest dir
    IrisSegmentation seg;
    std::filesystem::path mask_path;           // empty = no external mask
};

struct DatasetManifest {
    std::vector<ManifestRow> rows;
};

/// CSV with header columns image_id, subject_id, eye_side, image_path,
/// pupil_x, pupil_y, pupil_r, iris_x, iris_y, iris_r and optionally
/// mask_path, in any order. Segmentation invariants are enforced per row and
/// referenced files must exist; failures carry the 1-based data row index.
/// Throws FormatError / IoError.
DatasetManifest parse_manifest(const std::filesystem::path& path);

}  // namespace irisdof
