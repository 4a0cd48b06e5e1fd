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

#include "entdyn/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "entdyn/errors.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
    double s = 0.0;
    if (x > 0.0) s -= x * std::log(x);
    if (x < 1.0) s -= (1.0 - x) * std::log(1.0 - x);
    return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const Spectrum spec = eig_hermitian(rho.matrix());
    double trace = 0.0;
    double s = 0.0;
    for (double lambda : spec.eigenvalues) {
        trace += lambda;
        if (lambda < tol::kEigenvalueFloor)
            throw numerical_error("von_neumann_entropy: negative eigenvalue " +
                                  std::to_string(lambda));
        if (lambda >= tol::kEntropyEigenvalueCutoff) s -= lambda * std::log(lambda);
    }
    if (std::abs(trace - 1.0) > tol::kValidationTrace)
        throw numerical_error("von_neumann_entropy: trace deviates from 1 by " +
                              std::to_string(std::abs(trace - 1.0)));
    return s;
}

EntropyReport entropy_report(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("entropy_report: expected a 4x4 state");
    EntropyReport r;
    r.s_total = von_neumann_entropy(rho);
    r.s_a = von_neumann_entropy(DensityMatrix(partial_trace(rho.matrix(), SubsystemId::B)));
    r.s_b = von_neumann_entropy(DensityMatrix(partial_trace(rho.matrix(), SubsystemId::A)));
    r.violates_a = r.s_total < r.s_a - tol::kViolationDeadBand;
    r.violates_b = r.s_total < r.s_b - tol::kViolationDeadBand;
    return r;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence: expected a 4x4 state");
    const ComplexMatrix syy = kron(pauli_y(), pauli_y());
    const ComplexMatrix rho_tilde = syy * rho.matrix().conjugate() * syy;
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    ComplexMatrix w = root * rho_tilde * root;
    // Kill the rounding skew before the Hermitian solve.
    ComplexMatrix wa = w.adjoint();
    w += wa;
    w *= 0.5;
    const Spectrum spec = eig_hermitian(w);
    double c = 0.0;
    for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
        double mu = spec.eigenvalues[i];
        if (mu < tol::kConcurrenceSpectrumFloor) mu = 0.0;  // rank-deficiency noise
        c += (i == 0 ? 1.0 : -1.0) * std::sqrt(mu);
    }
    return std::clamp(c, 0.0, 1.0);
}

EntanglementValue entanglement_of_formation(const DensityMatrix& rho) {
    EntanglementValue v;
    v.concurrence = concurrence(rho);
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - v.concurrence * v.concurrence)));
    v.eof_nats = binary_entropy(x);
    v.eof_rescaled = v.eof_nats / std::numbers::ln2;
    return v;
}

double entropy_increase_bound(const DensityMatrix& rho_in, SubsystemId untouched,
                              int attacked_dim) {
    if (attacked_dim < 1) throw std::invalid_argument("entropy_increase_bound: bad dimension");
    const DensityMatrix marginal(partial_trace(rho_in.matrix(), other_side(untouched)));
    return von_neumann_entropy(marginal) - von_neumann_entropy(rho_in) +
           std::log(static_cast<double>(attacked_dim));
}

}  // namespace entdyn
