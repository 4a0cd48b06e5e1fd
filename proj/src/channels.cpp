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

#include "entdyn/channels.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "entdyn/errors.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

KrausChannel make_random_external_field(const std::vector<double>& probs,
                                        const std::vector<ComplexMatrix>& unitaries,
                                        std::string label) {
    if (probs.size() != unitaries.size() || probs.empty())
        throw std::invalid_argument("random external field: need one probability per unitary");
    double sum = 0.0;
    for (double p : probs) {
        if (p < 0.0) throw std::invalid_argument("random external field: negative probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > tol::kProbabilityNormalization)
        throw std::invalid_argument("random external field: probabilities do not sum to 1");

    KrausChannel c;
    c.label = std::move(label);
    const int d = unitaries.front().dim();
    const ComplexMatrix id = ComplexMatrix::identity(d);
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const ComplexMatrix& a = unitaries[i];
        if (a.dim() != d)
            throw std::invalid_argument("random external field: mixed operator dimensions");
        if ((a * a.adjoint()).max_abs_diff(id) > tol::kUnitaryCheck)
            throw std::invalid_argument("random external field: generator is not unitary");
        c.operators.push_back(ComplexMatrix::Complex(std::sqrt(probs[i])) * a);
    }
    return c;
}

namespace {

KrausChannel pauli_field(double epsilon, const std::vector<double>& probs, std::string label) {
    if (epsilon < 0.0 || epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    return make_random_external_field(probs, {identity2(), pauli_x(), pauli_y(), pauli_z()},
                                      std::move(label));
}

}  // namespace

KrausChannel ref1(double epsilon) {
    return pauli_field(epsilon, {1.0 - epsilon, 0.0, 0.0, epsilon},
                       "ref1(epsilon=" + std::to_string(epsilon) + ")");
}

KrausChannel ref2(double epsilon) {
    return pauli_field(epsilon, {1.0 - epsilon, 0.0, epsilon / 2.0, epsilon / 2.0},
                       "ref2(epsilon=" + std::to_string(epsilon) + ")");
}

KrausChannel ref3(double epsilon) {
    return pauli_field(epsilon,
                       {1.0 - epsilon, epsilon / 3.0, epsilon / 3.0, epsilon / 3.0},
                       "ref3(epsilon=" + std::to_string(epsilon) + ")");
}

KrausChannel make_amplitude_damping(double p) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("amplitude damping: p must lie in [0, 1]");
    ComplexMatrix m1(2);
    m1(0, 0) = 1.0;
    m1(1, 1) = std::sqrt(p);
    ComplexMatrix m2(2);
    m2(0, 1) = std::sqrt(1.0 - p);
    KrausChannel c;
    c.operators = {std::move(m1), std::move(m2)};
    c.label = "damping(p=" + std::to_string(p) + ")";
    return c;
}

namespace {

ResidualCheck identity_residual(const KrausChannel& c, bool adjoint_on_left) {
    if (c.operators.empty()) return {false, 1.0};
    const int d = c.dim();
    ComplexMatrix acc(d);
    for (const auto& v : c.operators) acc += adjoint_on_left ? v.adjoint() * v : v * v.adjoint();
    const double residual = acc.max_abs_diff(ComplexMatrix::identity(d));
    return {residual < tol::kChannelResidual, residual};
}

}  // namespace

ResidualCheck is_trace_preserving(const KrausChannel& c) { return identity_residual(c, true); }

ResidualCheck is_bistochastic(const KrausChannel& c) { return identity_residual(c, false); }

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
    KrausChannel c;
    c.label = outer.label + " . " + inner.label;
    for (const auto& o : outer.operators)
        for (const auto& i : inner.operators) c.operators.push_back(o * i);
    return c;
}

ComplexMatrix lift(const ComplexMatrix& op, SubsystemId side) {
    return side == SubsystemId::B ? kron(identity2(), op) : kron(op, identity2());
}

DensityMatrix apply(const KrausChannel& c, const DensityMatrix& rho) {
    if (c.dim() != rho.dim())
        throw std::invalid_argument("apply: channel and state dimensions do not match");
    ComplexMatrix out(rho.dim());
    for (const auto& v : c.operators) out += v * rho.matrix() * v.adjoint();
    return DensityMatrix(std::move(out));
}

DensityMatrix apply(const LocalChannel& lc, const DensityMatrix& rho) {
    if (lc.channel.dim() != 2)
        throw std::invalid_argument("apply: local channel must act on one qubit");
    if (rho.dim() != 4) throw std::invalid_argument("apply: expected a 4x4 state");
    ComplexMatrix out(4);
    for (const auto& v : lc.channel.operators) {
        const ComplexMatrix lifted = lift(v, lc.side);
        out += lifted * rho.matrix() * lifted.adjoint();
    }
    return DensityMatrix(std::move(out));
}

}  // namespace entdyn
