// Copyright 2026 The entdyn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "entdyn/dynamics.hpp"

namespace entdyn {

/// One output curve of a reproduction preset.
struct CurveSpec {
    std::string filename;
    std::string label;
    DynamicsConfig config;
};

struct FigurePreset {
    std::string id;
    std::string notes;
    std::vector<CurveSpec> curves;
};

std::vector<std::string> figure_ids();

/// Parameter sets for the canned experiments fig2..fig10b. Throws
/// config_error for an unknown id.
FigurePreset figure_preset(const std::string& id, std::uint64_t seed);

/// Run every curve of a preset and write one CSV per curve plus
/// manifest.csv into out_dir (created if missing).
void run_reproduce(const FigurePreset& preset, const std::filesystem::path& out_dir,
                   int threads = 1);

}  // namespace entdyn
