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

#include "entdyn/sampling.hpp"

#include <cmath>
#include <numbers>

namespace entdyn {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

using Complex = std::complex<double>;

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

std::uint64_t RandomSource::next_u64() {
    state_ += kGolden;
    return finalize(state_);
}

double RandomSource::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomSource::next_angle() { return 2.0 * std::numbers::pi * next_double(); }

RandomSource RandomSource::derive(std::uint64_t index) const {
    return RandomSource(finalize(seed_ + (index + 1) * kGolden));
}

PureState sample_pure(RandomSource& rng) {
    double theta[3];
    double phi[3];
    for (int k = 1; k <= 3; ++k) {
        const double xi = rng.next_double();
        theta[k - 1] = std::asin(std::pow(xi, 1.0 / (2.0 * k)));
        phi[k - 1] = rng.next_angle();
    }
    const double s3 = std::sin(theta[2]);
    const double s2 = std::sin(theta[1]);
    PureState psi;
    psi.amplitudes = {
        Complex(std::cos(theta[2])),
        s3 * std::cos(theta[1]) * unit_phase(phi[2]),
        s3 * s2 * std::cos(theta[0]) * unit_phase(phi[1]),
        s3 * s2 * std::sin(theta[0]) * unit_phase(phi[0]),
    };
    return psi;
}

ComplexMatrix sample_su2(RandomSource& rng) {
    const double xi = rng.next_double();
    const double phi1 = rng.next_angle();
    const double phi2 = rng.next_angle();
    const double theta = std::asin(std::sqrt(xi));
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    ComplexMatrix u(2);
    u(0, 0) = c * unit_phase(phi1);
    u(0, 1) = s * unit_phase(phi2);
    u(1, 0) = -s * unit_phase(-phi2);
    u(1, 1) = c * unit_phase(-phi1);
    return u;
}

PureState sample_separable(RandomSource& rng) {
    const ComplexMatrix u1 = sample_su2(rng);
    const ComplexMatrix u2 = sample_su2(rng);
    PureState psi;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) psi.amplitudes[2 * i + j] = u1(i, 0) * u2(j, 0);
    return psi;
}

PureState sample_max_entangled(RandomSource& rng) {
    const double xi = rng.next_double();
    const double phi1 = rng.next_angle();
    const double phi2 = rng.next_angle();
    const double theta = std::asin(std::sqrt(xi));
    const double c = std::cos(theta) / std::sqrt(2.0);
    const double s = std::sin(theta) / std::sqrt(2.0);
    PureState psi;
    psi.amplitudes = {
        c * unit_phase(phi1),
        s * unit_phase(phi2),
        -s * unit_phase(-phi2),
        c * unit_phase(-phi1),
    };
    return psi;
}

}  // namespace entdyn
