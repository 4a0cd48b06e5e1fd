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

// Central numerical tolerances. Every threshold used by the library lives
// here so it can be adjusted in one place.

namespace entdyn::tol {

// Hermiticity gate on eigensolver inputs (max entrywise |m - m†|).
inline constexpr double kHermiticityCheck = 1e-10;

// Cyclic Jacobi convergence: off-diagonal Frobenius norm target and sweep cap.
inline constexpr double kJacobiOffDiagonal = 1e-13;
inline constexpr int kJacobiMaxSweeps = 50;

// Pivots below this are left alone: a 4x4 worth of them still sits three
// decades under the convergence target, and rotating on subnormal entries
// computes the pivot phase from garbage bits.
inline constexpr double kJacobiPivotSkip = 1e-16;

// Unitarity gate (max entrywise |UU† - I|) for channel generators and
// exponentials.
inline constexpr double kUnitaryCheck = 1e-10;

// Eigenvalues below this are materially negative; values in
// [kEigenvalueFloor, 0) count as rounding noise and are clamped to zero.
// Iterated channel application accumulates roughly 1e-14 per step.
inline constexpr double kEigenvalueFloor = -1e-8;

// Density-matrix validation thresholds (checkpoint revalidation of
// mid-trajectory states).
inline constexpr double kValidationTrace = 1e-8;
inline constexpr double kValidationHermitian = 1e-8;

// Pure-state normalization gate.
inline constexpr double kNormCheck = 1e-10;

// Probability vectors must sum to 1 within this.
inline constexpr double kProbabilityNormalization = 1e-12;

// Trace-preserving / bistochastic residual acceptance.
inline constexpr double kChannelResidual = 1e-10;

// Spectrum weights below this contribute nothing to -Σ λ ln λ.
inline constexpr double kEntropyEigenvalueCutoff = 1e-12;

// Eigenvalues of the spin-flip product below this are treated as exact
// zeros before taking square roots, so rank-deficient (pure) inputs do not
// leak O(sqrt(eps)) noise into the concurrence.
inline constexpr double kConcurrenceSpectrumFloor = 1e-12;

// Dead band on the entropy-inequality violation flags.
inline constexpr double kViolationDeadBand = 1e-9;

// Pauli-basis coefficients must be real up to this residual.
inline constexpr double kBlochImaginaryResidual = 1e-8;

}  // namespace entdyn::tol
