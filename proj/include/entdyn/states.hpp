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

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "entdyn/matcore.hpp"

namespace entdyn {

/// Two-qubit pure state, amplitudes in the basis order |00>,|01>,|10>,|11>.
struct PureState {
    std::array<std::complex<double>, 4> amplitudes{};

    double norm() const;
};

/// A quantum state: Hermitian, unit trace, positive semidefinite.
///
/// Validation is an explicit step, not part of construction, so that
/// mid-trajectory states (which accumulate rounding) can be re-validated at
/// checkpoints with the documented tolerances instead of on every step.
class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return matrix_.dim(); }

    /// Throws numerical_error naming the failed check (trace off by more
    /// than tol::kValidationTrace, Hermitian residual above
    /// tol::kValidationHermitian, or an eigenvalue below
    /// tol::kEigenvalueFloor). `context` is prefixed to the message.
    void validate(const std::string& context = {}) const;

  private:
    ComplexMatrix matrix_;
};

/// Pauli-product coefficients of a two-qubit state: two local Bloch vectors
/// and the 3x3 correlation matrix.
struct BlochDecomposition {
    std::array<double, 3> a{};  // subsystem A
    std::array<double, 3> b{};  // subsystem B
    std::array<std::array<double, 3>, 3> t{};
};

/// Rank-1 projector |psi><psi|. Input must be normalized within
/// tol::kNormCheck.
DensityMatrix pure_to_density(const PureState& psi);

/// (|00> + |11>)/sqrt(2).
PureState bell_state();

namespace detail {
/// The X-form mixture matrix q|Psi1><Psi1| + (1-q)|Psi2><Psi2| with
/// |Psi1> = a|00> + sqrt(1-a^2)|11>, |Psi2> = a|10> + sqrt(1-a^2)|01>,
/// a = sqrt(a_sq). No parameter validation; boundary values allowed.
ComplexMatrix rho1_matrix(double q, double a_sq);
}  // namespace detail

/// Rank-2 X-form state with spectrum {q, 1-q, 0, 0}. Requires 0 < q < 1 and
/// 0 < a_sq < 1 (open intervals). The public parameter is a^2, matching how
/// the family is usually quoted.
DensityMatrix make_rho1(double q, double a_sq);

/// make_rho1 with the subsystems exchanged.
DensityMatrix make_rho2(double q, double a_sq);

/// Conjugation by the SWAP permutation (|01> <-> |10|). Involution;
/// preserves spectrum, trace and entropy exactly.
DensityMatrix swap_sides(const DensityMatrix& rho);

/// a_i = Tr(rho sigma_i x I), b_j = Tr(rho I x sigma_j),
/// T_ij = Tr(rho sigma_i x sigma_j). Throws numerical_error if any
/// coefficient has imaginary part above tol::kBlochImaginaryResidual.
BlochDecomposition bloch_decompose(const DensityMatrix& rho);

/// rho = 1/4 (I x I + sum a_i sigma_i x I + sum b_j I x sigma_j
///            + sum T_ij sigma_i x sigma_j).
DensityMatrix bloch_assemble(const BlochDecomposition& d);

/// Textual dump: dim lines of dim entries, each `re±imj` with 12
/// significant digits, single-space separated.
void write_matrix_dump(std::ostream& os, const ComplexMatrix& m);

}  // namespace entdyn
