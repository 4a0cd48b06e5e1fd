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

#include "entdyn/matcore.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

/// Seeded deterministic random source built on splitmix64 (Steele, Lea &
/// Flood; public domain): state advances by the 64-bit golden-ratio
/// increment and each output is the three-round xor-multiply finalizer of
/// the new state. Identical seed, identical stream, on every platform.
///
/// A source is single-consumer. Parallel work must use derive(): the
/// sub-seed for index i is the finalizer applied to seed + (i+1) increments,
/// i.e. the (i+1)-th raw output of the base stream, which splits off a
/// statistically independent stream per index regardless of consumption
/// order.
class RandomSource {
  public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64();

    /// Uniform on [0, 1), 53 usable bits.
    double next_double();

    /// Uniform on [0, 2*pi).
    double next_angle();

    /// Independent sub-stream for the given index, a pure function of
    /// (seed, index); unaffected by how much this source has consumed.
    RandomSource derive(std::uint64_t index) const;

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// Haar-uniform two-qubit pure state via the Hurwitz angle parametrization:
/// azimuthal angles uniform, polar angles theta_k = arcsin(xi^(1/2k)) from
/// uniform xi, k = 1..3 drawn in that order (xi before phi at each k).
PureState sample_pure(RandomSource& rng);

/// Haar-uniform SU(2) element: determinant exactly 1, first column uniform
/// on the Bloch sphere.
ComplexMatrix sample_su2(RandomSource& rng);

/// Product state U1 x U2 |00> with independent Haar SU(2) factors; both
/// marginals are pure and the entanglement is exactly zero.
PureState sample_separable(RandomSource& rng);

/// Maximally entangled state
///   (cos t e^{i phi1}, sin t e^{i phi2}, -sin t e^{-i phi2},
///    cos t e^{-i phi1}) / sqrt(2),
/// phi1, phi2 uniform on [0, 2*pi) and P(t) = sin(2t) on [0, pi/2]. Both
/// marginals equal I/2; drawn in the order xi, phi1, phi2.
PureState sample_max_entangled(RandomSource& rng);

}  // namespace entdyn
