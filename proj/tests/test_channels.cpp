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

#include <doctest.h>

#include <cmath>

#include "entdyn/channels.hpp"
#include "entdyn/errors.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/sampling.hpp"
#include "entdyn/states.hpp"
#include "oracles.hpp"

using namespace entdyn;
using Complex = std::complex<double>;

namespace {

DensityMatrix one_qubit(Complex a00, Complex a01, Complex a10, Complex a11) {
    ComplexMatrix m(2);
    m(0, 0) = a00;
    m(0, 1) = a01;
    m(1, 0) = a10;
    m(1, 1) = a11;
    return DensityMatrix(std::move(m));
}

}  // namespace

TEST_SUITE("channels") {

TEST_CASE("single-unitary field is the identity channel") {
    const KrausChannel c = make_random_external_field({1.0}, {identity2()}, "id");
    CHECK(c.operators.size() == 1);
    CHECK(is_trace_preserving(c).ok);
    CHECK(is_bistochastic(c).ok);
    RandomSource rng(31);
    const DensityMatrix rho{partial_trace(oracle::random_density(rng).matrix(), SubsystemId::B)};
    CHECK(apply(c, rho).matrix().max_abs_diff(rho.matrix()) < 1e-15);
}

TEST_CASE("the three Pauli mixtures carry the right weights") {
    const double eps = 0.12;
    const KrausChannel c1 = ref1(eps);
    const KrausChannel c2 = ref2(eps);
    const KrausChannel c3 = ref3(eps);
    for (const KrausChannel* c : {&c1, &c2, &c3}) {
        REQUIRE(c->operators.size() == 4);
        CHECK(is_trace_preserving(*c).ok);
        CHECK(is_bistochastic(*c).ok);
        CHECK(c->operators[0].max_abs_diff(Complex(std::sqrt(1.0 - eps)) * identity2()) <
              1e-15);
    }
    CHECK(c1.operators[1].max_abs() == 0.0);
    CHECK(c1.operators[2].max_abs() == 0.0);
    CHECK(c1.operators[3].max_abs_diff(Complex(std::sqrt(eps)) * pauli_z()) < 1e-15);
    CHECK(c2.operators[1].max_abs() == 0.0);
    CHECK(c2.operators[2].max_abs_diff(Complex(std::sqrt(eps / 2.0)) * pauli_y()) < 1e-15);
    CHECK(c3.operators[1].max_abs_diff(Complex(std::sqrt(eps / 3.0)) * pauli_x()) < 1e-15);
}

TEST_CASE("random external field rejects bad inputs") {
    CHECK_THROWS_AS(make_random_external_field({0.5, 0.4}, {identity2(), pauli_x()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_random_external_field({1.2, -0.2}, {identity2(), pauli_x()}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_random_external_field({1.0}, {Complex(2.0) * identity2()}),
        std::invalid_argument);
    CHECK_THROWS_AS(make_random_external_field({1.0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ref3(1.5), std::invalid_argument);
    CHECK_THROWS_AS(ref1(-0.1), std::invalid_argument);
}

TEST_CASE("amplitude damping Kraus pair") {
    const KrausChannel c = make_amplitude_damping(0.05);
    REQUIRE(c.operators.size() == 2);
    CHECK(c.operators[0](0, 0) == Complex(1.0));
    CHECK(c.operators[0](1, 1).real() == doctest::Approx(std::sqrt(0.05)).epsilon(1e-15));
    CHECK(c.operators[1](0, 1).real() == doctest::Approx(std::sqrt(0.95)).epsilon(1e-15));
    CHECK(c.operators[1](0, 0) == Complex(0.0));

    // sum M_i† M_i = diag(1, p + (1-p)) = I
    ComplexMatrix acc(2);
    for (const auto& v : c.operators) acc += v.adjoint() * v;
    CHECK(acc.max_abs_diff(identity2()) < 1e-15);

    CHECK_THROWS_AS(make_amplitude_damping(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(make_amplitude_damping(1.01), std::invalid_argument);
}

TEST_CASE("damping moves excited population and fixes the ground state") {
    const DensityMatrix excited = one_qubit(0.0, 0.0, 0.0, 1.0);
    const DensityMatrix after = apply(make_amplitude_damping(0.05), excited);
    CHECK(after.matrix()(0, 0).real() == doctest::Approx(0.95).epsilon(1e-15));
    CHECK(after.matrix()(1, 1).real() == doctest::Approx(0.05).epsilon(1e-15));

    const DensityMatrix ground = one_qubit(1.0, 0.0, 0.0, 0.0);
    for (double p : {0.0, 0.3, 1.0}) {
        const DensityMatrix out = apply(make_amplitude_damping(p), ground);
        CHECK(out.matrix().max_abs_diff(ground.matrix()) < 1e-15);
    }

    const DensityMatrix anything{Complex(0.5) * identity2()};
    CHECK(apply(make_amplitude_damping(1.0), anything).matrix().max_abs_diff(
              anything.matrix()) < 1e-15);
}

TEST_CASE("trace-preserving and bistochastic checks report residuals") {
    KrausChannel broken;
    broken.operators = {Complex(0.5) * identity2()};
    broken.label = "half-identity";
    const ResidualCheck tp = is_trace_preserving(broken);
    CHECK_FALSE(tp.ok);
    CHECK(tp.residual == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_FALSE(is_bistochastic(broken).ok);

    CHECK(is_bistochastic(ref2(0.05)).ok);
    for (double p : {0.0, 0.05, 0.7}) CHECK(is_trace_preserving(make_amplitude_damping(p)).ok);

    const ResidualCheck bi = is_bistochastic(make_amplitude_damping(0.05));
    CHECK_FALSE(bi.ok);
    CHECK(bi.residual == doctest::Approx(0.95).epsilon(1e-12));
    CHECK(is_bistochastic(make_amplitude_damping(1.0)).ok);
}

TEST_CASE("depolarizing a Bell state yields the Bell-diagonal mixture") {
    const double eps = 0.2;
    const DensityMatrix bell = pure_to_density(bell_state());
    const DensityMatrix out = apply({ref3(eps), SubsystemId::B}, bell);

    // expected: (1-eps) on |phi+>, eps/3 on the images under I x sigma_i
    ComplexMatrix expected(4);
    const ComplexMatrix base = bell.matrix();
    expected += Complex(1.0 - eps) * base;
    for (const ComplexMatrix& s : {pauli_x(), pauli_y(), pauli_z()}) {
        const ComplexMatrix lifted = kron(identity2(), s);
        expected += Complex(eps / 3.0) * (lifted * base * lifted.adjoint());
    }
    CHECK(out.matrix().max_abs_diff(expected) < 1e-12);
    CHECK(concurrence(out) == doctest::Approx(1.0 - 2.0 * eps).epsilon(1e-9));
}

TEST_CASE("a channel on side A is the swapped channel on side B") {
    RandomSource rng(32);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix rho = oracle::random_density(rng);
        const KrausChannel c = oracle::random_bistochastic(rng);
        const DensityMatrix direct = apply({c, SubsystemId::A}, rho);
        const DensityMatrix via_swap =
            swap_sides(apply({c, SubsystemId::B}, swap_sides(rho)));
        CHECK(direct.matrix().max_abs_diff(via_swap.matrix()) < 1e-12);
    }
}

TEST_CASE("apply rejects dimension mismatches") {
    const DensityMatrix rho4 = pure_to_density(bell_state());
    CHECK_THROWS_AS(apply(make_amplitude_damping(0.5), rho4), std::invalid_argument);
    const DensityMatrix rho2 = one_qubit(0.5, 0.0, 0.0, 0.5);
    CHECK_THROWS_AS(apply(LocalChannel{ref3(0.1), SubsystemId::B}, rho2),
                    std::invalid_argument);
}

TEST_CASE("bistochastic channels never decrease entropy; damping can") {
    RandomSource rng(33);
    for (int i = 0; i < 100; ++i) {
        const DensityMatrix rho = oracle::random_density(rng);
        const double s_in = von_neumann_entropy(rho);
        for (const KrausChannel& c : {ref1(0.07), ref2(0.07), ref3(0.07)}) {
            const double s_out = von_neumann_entropy(apply({c, SubsystemId::B}, rho));
            CHECK(s_out >= s_in - 1e-9);
        }
    }
    // witness for the decrease: the maximally mixed pair
    const DensityMatrix mixed{Complex(0.25) * ComplexMatrix::identity(4)};
    const double s_out =
        von_neumann_entropy(apply({make_amplitude_damping(0.3), SubsystemId::B}, mixed));
    CHECK(s_out < von_neumann_entropy(mixed) - 1e-3);
}

TEST_CASE("apply is linear over convex combinations") {
    RandomSource rng(34);
    for (int i = 0; i < 20; ++i) {
        const DensityMatrix r1 = oracle::random_density(rng);
        const DensityMatrix r2 = oracle::random_density(rng);
        const double w = rng.next_double();
        const LocalChannel lc{oracle::random_bistochastic(rng), SubsystemId::B};
        const DensityMatrix mix{Complex(w) * r1.matrix() +
                                Complex(1.0 - w) * r2.matrix()};
        const ComplexMatrix lhs = apply(lc, mix).matrix();
        const ComplexMatrix rhs = Complex(w) * apply(lc, r1).matrix() +
                                  Complex(1.0 - w) * apply(lc, r2).matrix();
        CHECK(lhs.max_abs_diff(rhs) < 1e-10);
    }
}

TEST_CASE("sequential local channels equal the lifted composition") {
    RandomSource rng(35);
    for (int i = 0; i < 20; ++i) {
        const KrausChannel first = oracle::random_bistochastic(rng);
        const KrausChannel second = oracle::random_bistochastic(rng);
        const KrausChannel composed = compose(second, first);
        CHECK(is_trace_preserving(composed).ok);
        const DensityMatrix rho = oracle::random_density(rng);
        const DensityMatrix sequential =
            apply({second, SubsystemId::B}, apply({first, SubsystemId::B}, rho));
        const DensityMatrix direct = apply({composed, SubsystemId::B}, rho);
        CHECK(sequential.matrix().max_abs_diff(direct.matrix()) < 1e-10);
    }
}

TEST_CASE("iterated damping drains the attacked marginal to the ground state") {
    RandomSource rng(36);
    DensityMatrix rho = pure_to_density(sample_pure(rng));
    const LocalChannel lc{make_amplitude_damping(0.05), SubsystemId::B};
    for (int t = 0; t < 400; ++t) rho = apply(lc, rho);
    ComplexMatrix ground(2);
    ground(0, 0) = 1.0;
    CHECK(partial_trace(rho.matrix(), SubsystemId::A).max_abs_diff(ground) < 1e-3);
}

}  // TEST_SUITE
