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

#include "entdyn/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "entdyn/errors.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {
using Complex = ComplexMatrix::Complex;
}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {
    if (dim <= 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(static_cast<int>(rows.size())) {
    int r = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != dim_)
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        int c = 0;
        for (const auto& v : row) (*this)(r, c++) = v;
        ++r;
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    return m;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tolerance) const {
    return max_abs_diff(other) <= tolerance;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : entries_) m = std::max(m, std::abs(v));
    return m;
}

bool ComplexMatrix::is_hermitian(double tolerance) const {
    for (int r = 0; r < dim_; ++r)
        for (int c = r; c < dim_; ++c)
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tolerance) return false;
    return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex factor) {
    for (auto& v : entries_) v *= factor;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const Complex arc = a(r, k);
            if (arc == Complex{}) continue;
            for (int c = 0; c < n; ++c) out(r, c) += arc * b(k, c);
        }
    }
    return out;
}

SubsystemId other_side(SubsystemId side) {
    return side == SubsystemId::A ? SubsystemId::B : SubsystemId::A;
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
    return {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    ComplexMatrix out(da * db);
    for (int ra = 0; ra < da; ++ra)
        for (int ca = 0; ca < da; ++ca) {
            const Complex f = a(ra, ca);
            for (int rb = 0; rb < db; ++rb)
                for (int cb = 0; cb < db; ++cb) out(ra * db + rb, ca * db + cb) = f * b(rb, cb);
        }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, SubsystemId traced_out) {
    if (m.dim() != 4) throw std::invalid_argument("partial_trace: expected a 4x4 matrix");
    ComplexMatrix out(2);
    if (traced_out == SubsystemId::B) {
        // keep A: contract the inner (B) index
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out(i, j) += m(2 * i + k, 2 * j + k);
    } else {
        // keep B: contract the outer (A) index
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) out(i, j) += m(2 * k + i, 2 * k + j);
    }
    return out;
}

namespace {

double off_diagonal_frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (r != c) sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

}  // namespace

Spectrum eig_hermitian(const ComplexMatrix& m) {
    if (!m.is_hermitian(tol::kHermiticityCheck))
        throw std::invalid_argument("eig_hermitian: input is not Hermitian");

    const int n = m.dim();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    bool converged = false;
    for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_frobenius(a) < tol::kJacobiOffDiagonal) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double t = std::abs(apq);
                if (t < tol::kJacobiPivotSkip) continue;
                const Complex phase = apq / t;  // e^{i beta}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * t, app - aqq);
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                // R: R(p,p)=c, R(p,q)=-s*phase, R(q,p)=s*conj(phase), R(q,q)=c
                const Complex sp = s * phase;
                const Complex spc = s * std::conj(phase);
                // columns: A <- A R, V <- V R
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp + spc * akq;
                    a(k, q) = -sp * akp + c * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp + spc * vkq;
                    v(k, q) = -sp * vkp + c * vkq;
                }
                // rows: A <- R† A
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
            }
        }
    }
    if (!converged && off_diagonal_frobenius(a) >= tol::kJacobiOffDiagonal)
        throw numerical_error("eig_hermitian: Jacobi sweep cap reached without convergence");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    Spectrum out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (int c = 0; c < n; ++c) {
        out.eigenvalues[c] = a(order[c], order[c]).real();
        for (int r = 0; r < n; ++r) out.eigenvectors(r, c) = v(r, order[c]);
    }
    return out;
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double alpha, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("unitary_exp: sign must be +1 or -1");
    const Spectrum s = eig_hermitian(h);
    const int n = h.dim();
    const ComplexMatrix& v = s.eigenvectors;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const Complex ph = std::polar(1.0, sign * alpha * s.eigenvalues[k]);
                acc += v(r, k) * ph * std::conj(v(c, k));
            }
            out(r, c) = acc;
        }
    return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m) {
    const Spectrum s = eig_hermitian(m);
    const int n = m.dim();
    std::vector<double> roots(n);
    for (int k = 0; k < n; ++k) {
        double lambda = s.eigenvalues[k];
        if (lambda < tol::kEigenvalueFloor)
            throw numerical_error("psd_sqrt: materially negative eigenvalue " +
                                  std::to_string(lambda));
        roots[k] = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
    }
    const ComplexMatrix& v = s.eigenvectors;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < n; ++k) acc += v(r, k) * roots[k] * std::conj(v(c, k));
            out(r, c) = acc;
        }
    return out;
}

}  // namespace entdyn
