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

#include <stdexcept>

namespace entdyn {

// Numerical failure: a corrupted state, a non-converging solver, a matrix
// that stopped being a density matrix. Indicates a defect or accumulated
// breakdown, not a user mistake. The CLI maps this to exit code 3.
class numerical_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid experiment configuration: unknown key, missing key, value out of
// range. The CLI maps this (and std::invalid_argument) to exit code 2.
class config_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace entdyn
