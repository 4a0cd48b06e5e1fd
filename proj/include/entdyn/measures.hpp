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

#include "entdyn/matcore.hpp"
#include "entdyn/states.hpp"

// Scalar diagnostics of two-qubit states. All entropies are in nats
// (natural logarithm): the binary entropy peaks at ln 2 and a maximally
// mixed pair sits at ln 4.

namespace entdyn {

/// Total and marginal entropies plus the two subsystem classicality flags.
/// violates_a means S(rho) < S(rho_A) beyond the dead band: the composite
/// carries less information than subsystem A alone, marking A "quantum".
struct EntropyReport {
    double s_total = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
    bool violates_a = false;
    bool violates_b = false;
};

/// Concurrence plus the entanglement of formation it determines, both raw
/// (nats, up to ln 2) and rescaled to [0, 1].
struct EntanglementValue {
    double concurrence = 0.0;
    double eof_nats = 0.0;
    double eof_rescaled = 0.0;
};

/// s(x) = -x ln x - (1-x) ln(1-x), with 0 ln 0 = 0. Requires x in [0, 1].
double binary_entropy(double x);

/// S(rho) = -Tr(rho ln rho). Eigenvalues below
/// tol::kEntropyEigenvalueCutoff contribute nothing. Checks unit trace and
/// positivity from the spectrum it computes anyway; failures throw
/// numerical_error.
double von_neumann_entropy(const DensityMatrix& rho);

/// S, S_A, S_B and the violation flags for a 4x4 state.
EntropyReport entropy_report(const DensityMatrix& rho);

/// Two-qubit concurrence C = max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3)
/// - sqrt(mu4)), mu_i the descending eigenvalues of rho * rho_tilde with
/// rho_tilde = (sy x sy) conj(rho) (sy x sy). Evaluated on the Hermitian
/// product sqrt(rho) rho_tilde sqrt(rho), which has the same spectrum, so
/// only the Hermitian eigensolver is ever needed.
double concurrence(const DensityMatrix& rho);

/// E = s((1 + sqrt(1 - C^2)) / 2) in nats, zero for separable states and
/// ln 2 at maximal entanglement.
EntanglementValue entanglement_of_formation(const DensityMatrix& rho);

/// Upper bound on the entropy gain of a single channel application that
/// leaves `untouched` alone and acts on the other, m-dimensional subsystem:
///   S(out) - S(in) <= S(marginal of untouched) - S(in) + ln m.
/// For separable inputs the right-hand side never exceeds ln m.
double entropy_increase_bound(const DensityMatrix& rho_in, SubsystemId untouched,
                              int attacked_dim = 2);

}  // namespace entdyn
