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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "entdyn/dynamics.hpp"

// Flat key=value experiment configs. One `key = value` per line, `#` starts
// a comment, unknown or duplicate keys are errors. Recognized keys:
//   initial, q, a_sq, channel, epsilon, p, side, hamiltonian, alpha,
//   steps, seed, ensemble_size, record_every, output
// Defaults: steps=500, ensemble_size=1, side=B, record_every=1, seed=42,
// hamiltonian=none, output=stdout. initial, channel and alpha are required;
// q/a_sq only with initial=rho1|rho2, epsilon only with channel=ref1..3,
// p only with channel=damping.

namespace entdyn {

/// Raw config as read from a file or assembled from flags; every field
/// optional so layers can be merged before resolution.
struct ExperimentConfig {
    std::optional<std::string> initial;
    std::optional<double> q;
    std::optional<double> a_sq;
    std::optional<std::string> channel;
    std::optional<double> epsilon;
    std::optional<double> p;
    std::optional<std::string> side;
    std::optional<std::string> hamiltonian;
    std::optional<double> alpha;
    std::optional<int> steps;
    std::optional<std::uint64_t> seed;
    std::optional<int> ensemble_size;
    std::optional<int> record_every;
    std::optional<std::string> output;
};

/// Parse config text; throws config_error naming the offending key/line.
ExperimentConfig parse_config_text(const std::string& text);

ExperimentConfig parse_config_file(const std::filesystem::path& path);

/// Overlay `overrides` on `base`: any field present in overrides wins.
ExperimentConfig merge_overrides(ExperimentConfig base, const ExperimentConfig& overrides);

/// Seed precedence: flag > ENTDYN_SEED environment variable > config file >
/// default 42. Throws config_error if the environment value is not a valid
/// unsigned 64-bit integer.
std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed,
                           std::optional<std::uint64_t> file_seed);

struct ResolvedExperiment {
    DynamicsConfig dynamics;
    std::string output;  // empty = stdout
};

/// Apply defaults, check required and conditional keys, map enum strings.
/// All failures throw config_error naming the key.
ResolvedExperiment resolve_experiment(const ExperimentConfig& cfg);

}  // namespace entdyn
