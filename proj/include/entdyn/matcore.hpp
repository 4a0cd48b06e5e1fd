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

#include <complex>
#include <initializer_list>
#include <vector>

namespace entdyn {

/// Dense square complex matrix, row-major. The workhorse carrier at
/// dimensions 2 and 4; no attempt is made at large-n performance.
///
/// Convention fixed across the library: subsystem A is the left tensor
/// factor and the two-qubit computational basis is ordered
/// |00>, |01>, |10>, |11>.
class ComplexMatrix {
  public:
    using Complex = std::complex<double>;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);  // zero-filled
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int row, int col) { return entries_[static_cast<std::size_t>(row) * dim_ + col]; }
    const Complex& operator()(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;  // entrywise, in the standard basis
    Complex trace() const;

    /// Largest entrywise |this - other|; dimension mismatch is infinite.
    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double tolerance) const;
    /// Largest entrywise magnitude.
    double max_abs() const;

    bool is_hermitian(double tolerance) const;

    /// Exact structural equality (dimension and every entry bit-for-bit).
    bool operator==(const ComplexMatrix& other) const = default;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex factor);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex factor) { return a *= factor; }
    friend ComplexMatrix operator*(Complex factor, ComplexMatrix a) { return a *= factor; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    int dim_ = 0;
    std::vector<Complex> entries_;  // dim_^2 entries, row-major
};

/// Which half of the 2x2 pair an operation refers to.
enum class SubsystemId { A, B };

SubsystemId other_side(SubsystemId side);

/// Eigendecomposition of a Hermitian matrix. Eigenvalues sorted
/// non-increasing; eigenvector columns orthonormal and paired with them.
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Pauli matrices and the one-qubit identity.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();

/// Kronecker (tensor) product; the first factor is subsystem A.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced 2x2 operator of a 4x4 matrix. `traced_out` names the subsystem
/// traced OUT; the result lives on the kept subsystem. Tr(result) = Tr(m).
ComplexMatrix partial_trace(const ComplexMatrix& m, SubsystemId traced_out);

/// Full eigendecomposition by cyclic complex Jacobi rotations. Input must be
/// Hermitian within tol::kHermiticityCheck. Sweeps until the off-diagonal
/// Frobenius norm drops below tol::kJacobiOffDiagonal; failure to converge
/// within tol::kJacobiMaxSweeps sweeps throws numerical_error (a defect,
/// not a user error).
Spectrum eig_hermitian(const ComplexMatrix& m);

/// exp(i * sign * alpha * h) for Hermitian h, via eigendecomposition.
/// sign = -1 runs the process in reverse.
ComplexMatrix unitary_exp(const ComplexMatrix& h, double alpha, int sign = +1);

/// Hermitian PSD square root. Eigenvalues in [tol::kEigenvalueFloor, 0) are
/// treated as rounding noise and clamped to zero; anything below the floor
/// throws numerical_error.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

}  // namespace entdyn
