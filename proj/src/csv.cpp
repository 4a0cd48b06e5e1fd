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

#include "entdyn/csv.hpp"

#include <cstdio>
#include <ostream>

namespace entdyn {

std::string g12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_series_csv(std::ostream& os, const EnsembleSeries& series) {
    os << "step,mean_E_nats,mean_E_over_ln2,mean_S,mean_S_A,mean_S_B,std_E,std_S\n";
    for (const EnsembleRecord& r : series.records) {
        os << r.step << ',' << g12(r.mean_eof_nats) << ',' << g12(r.mean_eof_rescaled) << ','
           << g12(r.mean_s_total) << ',' << g12(r.mean_s_a) << ',' << g12(r.mean_s_b) << ','
           << g12(r.std_eof_nats) << ',' << g12(r.std_s_total) << '\n';
    }
}

}  // namespace entdyn
