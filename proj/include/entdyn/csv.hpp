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

#include <iosfwd>
#include <string>

#include "entdyn/dynamics.hpp"

namespace entdyn {

/// Numeric CSV field: 12 significant digits.
std::string g12(double v);

/// Time-series CSV: header
/// step,mean_E_nats,mean_E_over_ln2,mean_S,mean_S_A,mean_S_B,std_E,std_S
/// then one row per recorded step. LF line endings, no trailing comma.
void write_series_csv(std::ostream& os, const EnsembleSeries& series);

}  // namespace entdyn
