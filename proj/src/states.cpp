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

#include "entdyn/states.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "entdyn/errors.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {
using Complex = std::complex<double>;

// |01> <-> |10| exchange of basis indices.
constexpr int kSwapPermutation[4] = {0, 2, 1, 3};
}  // namespace

double PureState::norm() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return std::sqrt(s);
}

void DensityMatrix::validate(const std::string& context) const {
    const std::string prefix = context.empty() ? std::string() : context + ": ";
    const double herm = matrix_.max_abs_diff(matrix_.adjoint());
    if (herm > tol::kValidationHermitian)
        throw numerical_error(prefix + "density matrix is not Hermitian (residual " +
                              std::to_string(herm) + ")");
    const Complex tr = matrix_.trace();
    if (std::abs(tr - 1.0) > tol::kValidationTrace)
        throw numerical_error(prefix + "density matrix trace deviates from 1 by " +
                              std::to_string(std::abs(tr - 1.0)));
    // Symmetrize before the spectral check so the (looser) validation bound
    // on hermiticity cannot trip the eigensolver's own gate.
    ComplexMatrix sym = matrix_;
    const ComplexMatrix adj = matrix_.adjoint();
    sym += adj;
    sym *= 0.5;
    const Spectrum s = eig_hermitian(sym);
    const double lambda_min = s.eigenvalues.back();
    if (lambda_min < tol::kEigenvalueFloor)
        throw numerical_error(prefix + "density matrix has negative eigenvalue " +
                              std::to_string(lambda_min));
}

DensityMatrix pure_to_density(const PureState& psi) {
    if (std::abs(psi.norm() - 1.0) > tol::kNormCheck)
        throw std::invalid_argument("pure_to_density: state is not normalized");
    ComplexMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
    return DensityMatrix(std::move(m));
}

PureState bell_state() {
    PureState psi;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    psi.amplitudes = {inv_sqrt2, 0.0, 0.0, inv_sqrt2};
    return psi;
}

namespace detail {

ComplexMatrix rho1_matrix(double q, double a_sq) {
    const double a = std::sqrt(a_sq);
    const double b = std::sqrt(1.0 - a_sq);
    ComplexMatrix m(4);
    m(0, 0) = q * a_sq;
    m(0, 3) = q * a * b;
    m(3, 0) = q * a * b;
    m(3, 3) = q * (1.0 - a_sq);
    m(1, 1) = (1.0 - q) * (1.0 - a_sq);
    m(1, 2) = (1.0 - q) * a * b;
    m(2, 1) = (1.0 - q) * a * b;
    m(2, 2) = (1.0 - q) * a_sq;
    return m;
}

}  // namespace detail

DensityMatrix make_rho1(double q, double a_sq) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("make_rho1: q must lie in the open interval (0, 1)");
    if (!(a_sq > 0.0 && a_sq < 1.0))
        throw std::invalid_argument("make_rho1: a_sq must lie in the open interval (0, 1)");
    return DensityMatrix(detail::rho1_matrix(q, a_sq));
}

DensityMatrix make_rho2(double q, double a_sq) { return swap_sides(make_rho1(q, a_sq)); }

DensityMatrix swap_sides(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("swap_sides: expected a 4x4 state");
    ComplexMatrix out(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = rho.matrix()(kSwapPermutation[r], kSwapPermutation[c]);
    return DensityMatrix(std::move(out));
}

namespace {

ComplexMatrix pauli(int i) {
    switch (i) {
        case 0: return pauli_x();
        case 1: return pauli_y();
        default: return pauli_z();
    }
}

double real_coefficient(const ComplexMatrix& rho, const ComplexMatrix& op, const char* name) {
    const Complex v = (rho * op).trace();
    if (std::abs(v.imag()) > tol::kBlochImaginaryResidual)
        throw numerical_error(std::string("bloch_decompose: coefficient ") + name +
                              " has imaginary residue " + std::to_string(v.imag()));
    return v.real();
}

}  // namespace

BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("bloch_decompose: expected a 4x4 state");
    BlochDecomposition d;
    const ComplexMatrix id = identity2();
    for (int i = 0; i < 3; ++i) {
        d.a[i] = real_coefficient(rho.matrix(), kron(pauli(i), id), "a");
        d.b[i] = real_coefficient(rho.matrix(), kron(id, pauli(i)), "b");
        for (int j = 0; j < 3; ++j)
            d.t[i][j] = real_coefficient(rho.matrix(), kron(pauli(i), pauli(j)), "T");
    }
    return d;
}

DensityMatrix bloch_assemble(const BlochDecomposition& d) {
    const ComplexMatrix id = identity2();
    ComplexMatrix m = kron(id, id);
    for (int i = 0; i < 3; ++i) {
        m += Complex(d.a[i]) * kron(pauli(i), id);
        m += Complex(d.b[i]) * kron(id, pauli(i));
        for (int j = 0; j < 3; ++j) m += Complex(d.t[i][j]) * kron(pauli(i), pauli(j));
    }
    m *= 0.25;
    return DensityMatrix(std::move(m));
}

void write_matrix_dump(std::ostream& os, const ComplexMatrix& m) {
    char buf[64];
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            const Complex v = m(r, c);
            std::snprintf(buf, sizeof buf, "%.12g%+.12gj", v.real(), v.imag());
            os << (c == 0 ? "" : " ") << buf;
        }
        os << '\n';
    }
}

}  // namespace entdyn
