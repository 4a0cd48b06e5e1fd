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
#include <numbers>
#include <string>

#include "entdyn/dynamics.hpp"
#include "entdyn/errors.hpp"
#include "entdyn/measures.hpp"
#include "oracles.hpp"

using namespace entdyn;
using Complex = std::complex<double>;

namespace {

DynamicsConfig family_config(InitialKind initial, SubsystemId side, HamiltonianKind h,
                             double alpha, double eps, int steps) {
    DynamicsConfig cfg;
    cfg.initial.kind = initial;
    cfg.initial.q = 0.6;
    cfg.initial.a_sq = 0.75;
    cfg.channel.kind = ChannelKind::Ref3;
    cfg.channel.parameter = eps;
    cfg.channel.side = side;
    cfg.hamiltonian.kind = h;
    cfg.alpha = alpha;
    cfg.steps = steps;
    return cfg;
}

bool identical(const EnsembleSeries& a, const EnsembleSeries& b) {
    if (a.ensemble_size != b.ensemble_size || a.records.size() != b.records.size())
        return false;
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        const EnsembleRecord& x = a.records[i];
        const EnsembleRecord& y = b.records[i];
        if (x.step != y.step || x.mean_eof_nats != y.mean_eof_nats ||
            x.mean_eof_rescaled != y.mean_eof_rescaled ||
            x.mean_s_total != y.mean_s_total || x.mean_s_a != y.mean_s_a ||
            x.mean_s_b != y.mean_s_b || x.std_eof_nats != y.std_eof_nats ||
            x.std_s_total != y.std_s_total)
            return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("a frozen step leaves the state alone") {
    const DensityMatrix rho = make_rho1(0.6, 0.75);
    const LocalChannel identity_channel{ref3(0.0), SubsystemId::B};
    const DensityMatrix out = step(rho, identity_channel, ComplexMatrix::identity(4));
    CHECK(out.matrix().max_abs_diff(rho.matrix()) < 1e-15);
}

TEST_CASE("one depolarizing step on a Bell state") {
    const DensityMatrix bell = pure_to_density(bell_state());
    const LocalChannel lc{ref3(0.01), SubsystemId::B};
    const DensityMatrix out = step(bell, lc, ComplexMatrix::identity(4));
    const EntanglementValue ev = entanglement_of_formation(out);
    CHECK(ev.concurrence == doctest::Approx(0.98).epsilon(1e-9));
    CHECK(ev.eof_nats == doctest::Approx(oracle::eof_from_concurrence(0.98)).epsilon(1e-9));
}

TEST_CASE("attacking side A equals swapping around an attack on side B") {
    const DensityMatrix rho = make_rho1(0.6, 0.75);
    const ComplexMatrix u = unitary_exp(kron(pauli_x(), pauli_y()), 0.06);
    const ComplexMatrix swapped_u = unitary_exp(kron(pauli_y(), pauli_x()), 0.06);
    const LocalChannel on_a{ref3(0.01), SubsystemId::A};
    const LocalChannel on_b{ref3(0.01), SubsystemId::B};
    const DensityMatrix direct = step(rho, on_a, u);
    const DensityMatrix mirrored =
        swap_sides(step(swap_sides(rho), on_b, swapped_u));
    CHECK(direct.matrix().max_abs_diff(mirrored.matrix()) < 1e-12);
}

TEST_CASE("make_hamiltonian fixed couplings") {
    CHECK(make_hamiltonian({HamiltonianKind::H, {}}) == kron(pauli_x(), pauli_y()));
    CHECK(make_hamiltonian({HamiltonianKind::Hprime, {}}) == kron(pauli_y(), pauli_x()));
    CHECK(make_hamiltonian({HamiltonianKind::None, {}}).max_abs() == 0.0);

    // Hprime is H with the tensor factors exchanged
    ComplexMatrix swap(4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    const ComplexMatrix conjugated = swap * kron(pauli_x(), pauli_y()) * swap;
    CHECK(conjugated.max_abs_diff(kron(pauli_y(), pauli_x())) < 1e-15);
}

TEST_CASE("random product Hamiltonians square to the identity") {
    RandomSource rng(61);
    for (int i = 0; i < 20; ++i) {
        const ComplexMatrix h = make_hamiltonian({HamiltonianKind::RandomProduct, {}}, &rng);
        const Spectrum s = eig_hermitian(h);
        CHECK(s.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(s.eigenvalues[2] == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(s.eigenvalues[3] == doctest::Approx(-1.0).epsilon(1e-10));
    }
    CHECK_THROWS_AS(make_hamiltonian({HamiltonianKind::RandomProduct, {}}),
                    std::invalid_argument);
    ComplexMatrix skew(4);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(make_hamiltonian({HamiltonianKind::Explicit, skew}),
                    std::invalid_argument);
}

TEST_CASE("trajectory records match a hand-iterated oracle") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::Bell;
    cfg.channel.kind = ChannelKind::Ref2;
    cfg.channel.parameter = 0.01;
    cfg.alpha = 0.0;
    cfg.steps = 3;
    RandomSource rng(62);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    const TrajectorySeries series = run_trajectory(rho0, cfg);
    REQUIRE(series.records.size() == 4);

    DensityMatrix rho = rho0;
    const LocalChannel lc{ref2(0.01), SubsystemId::B};
    for (int t = 0; t <= 3; ++t) {
        const ObservableRecord expected = observe(t, rho);
        const ObservableRecord& got = series.records[t];
        CHECK(got.step == t);
        CHECK(got.eof_nats == expected.eof_nats);
        CHECK(got.s_total == expected.s_total);
        if (t < 3) rho = apply(lc, rho);
    }
    // E strictly decreasing over the three steps
    for (int t = 1; t <= 3; ++t)
        CHECK(series.records[t].eof_nats < series.records[t - 1].eof_nats);
}

TEST_CASE("unitary coupling makes the entanglement oscillate") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::MaxEntangledRandom;
    cfg.channel.kind = ChannelKind::Ref2;
    cfg.channel.parameter = 0.01;
    cfg.hamiltonian.kind = HamiltonianKind::H;
    cfg.alpha = 0.1;
    cfg.steps = 200;
    RandomSource rng(7);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    const TrajectorySeries series = run_trajectory(rho0, cfg);
    for (const auto& r : series.records) {
        CHECK(r.eof_nats >= 0.0);
        CHECK(r.eof_nats <= std::numbers::ln2 + 1e-9);
        CHECK(r.s_total >= 0.0);
        CHECK(r.s_total <= std::log(4.0) + 1e-9);
    }
    bool local_min_then_rise = false;
    for (std::size_t t = 1; t + 1 < series.records.size(); ++t) {
        const double prev = series.records[t - 1].eof_nats;
        const double here = series.records[t].eof_nats;
        const double next = series.records[t + 1].eof_nats;
        if (here < prev - 1e-12 && next > here + 1e-12) local_min_then_rise = true;
    }
    CHECK(local_min_then_rise);
}

TEST_CASE("damping runs raise the entropy to an interior peak, then drain it") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::PureRandom;
    cfg.channel.kind = ChannelKind::Damping;
    cfg.channel.parameter = 0.95;
    cfg.alpha = 0.0;
    cfg.steps = 400;
    cfg.ensemble_size = 40;
    const EnsembleSeries series = run_ensemble(cfg, 2);
    double peak = -1.0;
    int peak_step = -1;
    for (const auto& r : series.records)
        if (r.mean_s_total > peak) {
            peak = r.mean_s_total;
            peak_step = r.step;
        }
    CHECK(peak_step > 0);
    CHECK(peak_step < 400);
    CHECK(series.records.back().mean_s_total < peak - 0.01);
}

TEST_CASE("record cadence and the step-0 row") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::Rho1;
    cfg.initial.q = 0.6;
    cfg.initial.a_sq = 0.75;
    cfg.channel.kind = ChannelKind::Ref3;
    cfg.channel.parameter = 0.01;
    cfg.steps = 100;
    cfg.record_every = 7;
    RandomSource rng(63);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    const TrajectorySeries series = run_trajectory(rho0, cfg);
    CHECK(series.records.size() == 100 / 7 + 1);
    CHECK(series.records.front().step == 0);
    CHECK(series.records.back().step == 98);

    const ObservableRecord first = observe(0, rho0);
    CHECK(series.records.front().eof_nats == first.eof_nats);
    CHECK(series.records.front().s_total == first.s_total);
    CHECK(series.records.front().s_a == first.s_a);
    CHECK(series.records.front().s_b == first.s_b);
}

TEST_CASE("the untouched marginal entropy is constant without coupling") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::PureRandom;
    cfg.channel.kind = ChannelKind::Ref3;
    cfg.channel.parameter = 0.05;
    cfg.channel.side = SubsystemId::B;
    cfg.alpha = 0.0;
    cfg.steps = 100;
    RandomSource rng(64);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    const TrajectorySeries series = run_trajectory(rho0, cfg);
    const double s_a0 = series.records.front().s_a;
    for (const auto& r : series.records) CHECK(std::abs(r.s_a - s_a0) < 1e-9);
}

TEST_CASE("bistochastic runs never lower the total entropy") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::MaxEntangledRandom;
    cfg.channel.kind = ChannelKind::Ref2;
    cfg.channel.parameter = 0.05;
    cfg.hamiltonian.kind = HamiltonianKind::H;
    cfg.alpha = 0.1;
    cfg.steps = 100;
    RandomSource rng(65);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    const TrajectorySeries series = run_trajectory(rho0, cfg);
    for (std::size_t t = 1; t < series.records.size(); ++t)
        CHECK(series.records[t].s_total >= series.records[t - 1].s_total - 1e-9);
}

TEST_CASE("asymmetric decay: the classical-side attack hurts more") {
    const TrajectorySeries classical = [&] {
        DynamicsConfig cfg = family_config(InitialKind::Rho1, SubsystemId::B,
                                           HamiltonianKind::None, 0.0, 0.01, 20);
        RandomSource rng(1);
        return run_trajectory(make_initial(cfg.initial, rng), cfg);
    }();
    const TrajectorySeries quantum = [&] {
        DynamicsConfig cfg = family_config(InitialKind::Rho1, SubsystemId::A,
                                           HamiltonianKind::None, 0.0, 0.01, 20);
        RandomSource rng(1);
        return run_trajectory(make_initial(cfg.initial, rng), cfg);
    }();
    for (int t = 1; t <= 20; ++t)
        CHECK(classical.records[t].eof_nats < quantum.records[t].eof_nats);
}

TEST_CASE("weak noise with coupling produces plateaus and revivals") {
    DynamicsConfig cfg =
        family_config(InitialKind::Rho1, SubsystemId::B, HamiltonianKind::H, 0.06, 0.002, 200);
    RandomSource rng(1);
    const TrajectorySeries series = run_trajectory(make_initial(cfg.initial, rng), cfg);
    bool in_plateau = false;
    int plateau_len = 0;
    bool revived = false;
    for (const auto& r : series.records) {
        if (r.eof_nats <= 1e-9) {
            ++plateau_len;
            if (plateau_len >= 2) in_plateau = true;
        } else {
            if (in_plateau && r.eof_nats > 0.01) revived = true;
            plateau_len = 0;
        }
    }
    CHECK(revived);
}

TEST_CASE("reversing the coupling initially amplifies the entanglement") {
    DynamicsConfig fwd =
        family_config(InitialKind::Rho1, SubsystemId::B, HamiltonianKind::H, 0.06, 0.002, 5);
    DynamicsConfig rev = fwd;
    rev.alpha = -0.06;
    RandomSource rng(1);
    const DensityMatrix rho0 = make_initial(fwd.initial, rng);
    const TrajectorySeries f = run_trajectory(rho0, fwd);
    const TrajectorySeries r = run_trajectory(rho0, rev);
    CHECK(f.records[1].eof_nats < f.records[0].eof_nats);
    CHECK(r.records[1].eof_nats > r.records[0].eof_nats);
}

TEST_CASE("ensemble statistics at step zero") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::MaxEntangledRandom;
    cfg.channel.kind = ChannelKind::Ref2;
    cfg.channel.parameter = 0.01;
    cfg.steps = 1;
    cfg.ensemble_size = 50;
    const EnsembleSeries series = run_ensemble(cfg);
    CHECK(std::abs(series.records.front().mean_eof_nats - std::numbers::ln2) < 1e-9);
    CHECK(series.records.front().std_eof_nats < 1e-9);

    DynamicsConfig pure = cfg;
    pure.initial.kind = InitialKind::PureRandom;
    pure.ensemble_size = 1000;
    const EnsembleSeries pure_series = run_ensemble(pure, 4);
    CHECK(std::abs(pure_series.records.front().mean_eof_nats - 1.0 / 3.0) < 0.03);
}

TEST_CASE("separable runs obey the entropy ceiling") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::SeparableRandom;
    cfg.channel.kind = ChannelKind::Ref2;
    cfg.channel.parameter = 0.05;
    cfg.alpha = 0.0;
    cfg.steps = 100;
    cfg.ensemble_size = 50;
    const EnsembleSeries series = run_ensemble(cfg, 2);
    for (const auto& r : series.records)
        CHECK(r.mean_s_total <= std::numbers::ln2 + 1e-9);
}

TEST_CASE("ensembles are deterministic and parallelism-invariant") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::PureRandom;
    cfg.channel.kind = ChannelKind::Ref3;
    cfg.channel.parameter = 0.02;
    cfg.hamiltonian.kind = HamiltonianKind::RandomProduct;
    cfg.alpha = 0.1;
    cfg.steps = 50;
    cfg.ensemble_size = 16;
    cfg.seed = 77;
    const EnsembleSeries a = run_ensemble(cfg, 1);
    const EnsembleSeries b = run_ensemble(cfg, 1);
    const EnsembleSeries c = run_ensemble(cfg, 4);
    const EnsembleSeries d = run_ensemble(cfg, 16);
    CHECK(identical(a, b));
    CHECK(identical(a, c));
    CHECK(identical(a, d));
}

TEST_CASE("mid-run validation failures name the step") {
    DynamicsConfig cfg;
    cfg.initial.kind = InitialKind::Bell;
    cfg.channel.kind = ChannelKind::Explicit;
    KrausChannel broken;
    broken.operators = {Complex(0.5) * identity2()};  // trace-shrinking
    broken.label = "broken";
    cfg.channel.explicit_channel = broken;
    cfg.steps = 60;
    cfg.record_every = 60;  // keep the observable check out of the way
    RandomSource rng(66);
    const DensityMatrix rho0 = make_initial(cfg.initial, rng);
    CHECK_THROWS_WITH_AS(run_trajectory(rho0, cfg),
                         doctest::Contains("step 50"), numerical_error);
}

}  // TEST_SUITE
