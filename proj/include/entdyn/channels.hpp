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

#include <string>
#include <vector>

#include "entdyn/matcore.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

/// A channel in Kraus form: sigma -> sum_i V_i sigma V_i†. Every factory in
/// this module produces a trace-preserving set (sum V_i† V_i = I within
/// tol::kChannelResidual); the struct itself stays hand-buildable so broken
/// sets can be fed to the diagnostics below.
struct KrausChannel {
    std::vector<ComplexMatrix> operators;
    std::string label;

    int dim() const { return operators.empty() ? 0 : operators.front().dim(); }
};

/// A one-qubit channel attached to one side of the pair. Lifting tensors the
/// Kraus operators with the identity on the untouched side.
struct LocalChannel {
    KrausChannel channel;  // d = 2
    SubsystemId side = SubsystemId::B;
};

/// Boolean verdict plus the residual it was judged on, so tests can assert
/// tightness rather than a bare pass/fail.
struct ResidualCheck {
    bool ok = false;
    double residual = 0.0;
};

/// Mixture of unitary conjugations: V_i = sqrt(p_i) A_i. Requires probs
/// summing to 1 within tol::kProbabilityNormalization, all non-negative, and
/// every generator unitary within tol::kUnitaryCheck. The result is always
/// bistochastic.
KrausChannel make_random_external_field(const std::vector<double>& probs,
                                        const std::vector<ComplexMatrix>& unitaries,
                                        std::string label = "random-external-field");

// The three Pauli-generated mixtures used throughout, parametrized by the
// environment coupling epsilon in [0, 1]. Generators are {I, sx, sy, sz}.
//   ref1: [1-e, 0, 0, e]
//   ref2: [1-e, 0, e/2, e/2]
//   ref3: [1-e, e/3, e/3, e/3]   (iterated: the depolarizing channel)
KrausChannel ref1(double epsilon);
KrausChannel ref2(double epsilon);
KrausChannel ref3(double epsilon);

/// Decay toward the ground state |0>: M1 = diag(1, sqrt(p)),
/// M2 = sqrt(1-p) |0><1|, with p in [0, 1] the per-step probability that the
/// excited population survives. Trace preserving; not bistochastic for p < 1.
KrausChannel make_amplitude_damping(double p);

/// sum_i V_i† V_i = I within tol::kChannelResidual?
ResidualCheck is_trace_preserving(const KrausChannel& c);

/// sum_i V_i V_i† = I within tol::kChannelResidual?
ResidualCheck is_bistochastic(const KrausChannel& c);

/// Kraus set of `outer` applied after `inner` (all pairwise products).
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// kron(I, op) for side B, kron(op, I) for side A.
ComplexMatrix lift(const ComplexMatrix& op, SubsystemId side);

/// Apply a channel whose dimension matches the state.
DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho);

/// Apply a one-qubit channel to one side of a two-qubit state. The marginal
/// of the untouched side is preserved.
DensityMatrix apply(const LocalChannel& lc, const DensityMatrix& rho);

}  // namespace entdyn
