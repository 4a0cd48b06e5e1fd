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

#include "entdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "entdyn/errors.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/tolerances.hpp"

namespace entdyn {

namespace {

// State checkpoint cadence along a trajectory.
constexpr int kRevalidateEvery = 50;

ComplexMatrix axis_dot_sigma(double nx, double ny, double nz) {
    ComplexMatrix m(2);
    m(0, 0) = nz;
    m(0, 1) = std::complex<double>(nx, -ny);
    m(1, 0) = std::complex<double>(nx, ny);
    m(1, 1) = -nz;
    return m;
}

ComplexMatrix random_axis_operator(RandomSource& rng) {
    const double z = 1.0 - 2.0 * rng.next_double();
    const double phi = rng.next_angle();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return axis_dot_sigma(r * std::cos(phi), r * std::sin(phi), z);
}

}  // namespace

LocalChannel ChannelSpec::make_local() const {
    switch (kind) {
        case ChannelKind::Ref1: return {ref1(parameter), side};
        case ChannelKind::Ref2: return {ref2(parameter), side};
        case ChannelKind::Ref3: return {ref3(parameter), side};
        case ChannelKind::Damping: return {make_amplitude_damping(parameter), side};
        case ChannelKind::Explicit: return {explicit_channel, side};
    }
    throw std::invalid_argument("ChannelSpec: unknown channel kind");
}

DensityMatrix step(const DensityMatrix& rho, const LocalChannel& lc, const ComplexMatrix& u) {
    const DensityMatrix after_channel = apply(lc, rho);
    return DensityMatrix(u * after_channel.matrix() * u.adjoint());
}

ComplexMatrix make_hamiltonian(const HamiltonianSpec& spec, RandomSource* rng) {
    switch (spec.kind) {
        case HamiltonianKind::H: return kron(pauli_x(), pauli_y());
        case HamiltonianKind::Hprime: return kron(pauli_y(), pauli_x());
        case HamiltonianKind::None: return ComplexMatrix(4);
        case HamiltonianKind::RandomProduct: {
            if (rng == nullptr)
                throw std::invalid_argument("make_hamiltonian: RandomProduct needs an rng");
            const ComplexMatrix first = random_axis_operator(*rng);
            const ComplexMatrix second = random_axis_operator(*rng);
            return kron(first, second);
        }
        case HamiltonianKind::Explicit:
            if (!spec.explicit_matrix.is_hermitian(tol::kHermiticityCheck))
                throw std::invalid_argument("make_hamiltonian: explicit matrix is not Hermitian");
            return spec.explicit_matrix;
    }
    throw std::invalid_argument("make_hamiltonian: unknown kind");
}

DensityMatrix make_initial(const InitialSpec& spec, RandomSource& rng) {
    switch (spec.kind) {
        case InitialKind::PureRandom: return pure_to_density(sample_pure(rng));
        case InitialKind::SeparableRandom: return pure_to_density(sample_separable(rng));
        case InitialKind::MaxEntangledRandom: return pure_to_density(sample_max_entangled(rng));
        case InitialKind::Rho1: return make_rho1(spec.q, spec.a_sq);
        case InitialKind::Rho2: return make_rho2(spec.q, spec.a_sq);
        case InitialKind::Bell: return pure_to_density(bell_state());
        case InitialKind::Explicit: {
            DensityMatrix rho(spec.explicit_matrix);
            rho.validate("initial state");
            return rho;
        }
    }
    throw std::invalid_argument("make_initial: unknown kind");
}

ObservableRecord observe(int step_index, const DensityMatrix& rho) {
    const EntropyReport er = entropy_report(rho);
    const EntanglementValue ev = entanglement_of_formation(rho);
    return {step_index, ev.eof_nats, ev.eof_rescaled, er.s_total, er.s_a, er.s_b};
}

namespace {

TrajectorySeries run_trajectory_impl(const DensityMatrix& rho0, const DynamicsConfig& cfg,
                                     RandomSource& rng) {
    if (cfg.steps < 1) throw std::invalid_argument("run_trajectory: steps must be positive");
    if (cfg.record_every < 1)
        throw std::invalid_argument("run_trajectory: record_every must be positive");

    const LocalChannel lc = cfg.channel.make_local();
    const bool unitary_active =
        cfg.alpha != 0.0 && cfg.hamiltonian.kind != HamiltonianKind::None;
    const bool redraw_per_step =
        unitary_active && cfg.hamiltonian.kind == HamiltonianKind::RandomProduct;

    ComplexMatrix u = ComplexMatrix::identity(4);
    if (unitary_active && !redraw_per_step)
        u = unitary_exp(make_hamiltonian(cfg.hamiltonian), cfg.alpha);

    TrajectorySeries series;
    series.records.reserve(static_cast<std::size_t>(cfg.steps / cfg.record_every) + 1);
    series.records.push_back(observe(0, rho0));

    DensityMatrix rho = rho0;
    for (int t = 1; t <= cfg.steps; ++t) {
        if (redraw_per_step) u = unitary_exp(make_hamiltonian(cfg.hamiltonian, &rng), cfg.alpha);
        rho = step(rho, lc, u);
        if (t % kRevalidateEvery == 0) rho.validate("step " + std::to_string(t));
        if (t % cfg.record_every == 0) series.records.push_back(observe(t, rho));
    }
    return series;
}

}  // namespace

TrajectorySeries run_trajectory(const DensityMatrix& rho0, const DynamicsConfig& cfg) {
    RandomSource rng = RandomSource(cfg.seed).derive(0);
    return run_trajectory_impl(rho0, cfg, rng);
}

EnsembleSeries run_ensemble(const DynamicsConfig& cfg, int threads) {
    if (cfg.ensemble_size < 1)
        throw std::invalid_argument("run_ensemble: ensemble_size must be positive");
    if (threads < 1) threads = 1;

    const int n = cfg.ensemble_size;
    const RandomSource base(cfg.seed);
    std::vector<TrajectorySeries> results(n);
    std::vector<std::exception_ptr> failures(n);

    auto worker = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) {
            try {
                RandomSource sub = base.derive(static_cast<std::uint64_t>(i));
                const DensityMatrix rho0 = make_initial(cfg.initial, sub);
                results[i] = run_trajectory_impl(rho0, cfg, sub);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };

    if (threads == 1 || n == 1) {
        worker(0, n);
    } else {
        const int used = std::min(threads, n);
        std::vector<std::thread> pool;
        pool.reserve(used);
        for (int t = 0; t < used; ++t) {
            const int lo = n * t / used;
            const int hi = n * (t + 1) / used;
            pool.emplace_back(worker, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    for (int i = 0; i < n; ++i) {
        if (failures[i]) {
            try {
                std::rethrow_exception(failures[i]);
            } catch (const std::exception& e) {
                throw numerical_error("trajectory " + std::to_string(i) + ": " + e.what());
            }
        }
    }

    const std::size_t rows = results.front().records.size();
    EnsembleSeries series;
    series.ensemble_size = n;
    series.records.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        EnsembleRecord& rec = series.records[r];
        rec.step = results.front().records[r].step;
        for (int i = 0; i < n; ++i) {
            const ObservableRecord& o = results[i].records[r];
            rec.mean_eof_nats += o.eof_nats;
            rec.mean_eof_rescaled += o.eof_rescaled;
            rec.mean_s_total += o.s_total;
            rec.mean_s_a += o.s_a;
            rec.mean_s_b += o.s_b;
        }
        rec.mean_eof_nats /= n;
        rec.mean_eof_rescaled /= n;
        rec.mean_s_total /= n;
        rec.mean_s_a /= n;
        rec.mean_s_b /= n;
        if (n > 1) {
            double var_e = 0.0;
            double var_s = 0.0;
            for (int i = 0; i < n; ++i) {
                const ObservableRecord& o = results[i].records[r];
                var_e += (o.eof_nats - rec.mean_eof_nats) * (o.eof_nats - rec.mean_eof_nats);
                var_s += (o.s_total - rec.mean_s_total) * (o.s_total - rec.mean_s_total);
            }
            rec.std_eof_nats = std::sqrt(var_e / (n - 1));
            rec.std_s_total = std::sqrt(var_s / (n - 1));
        }
    }
    return series;
}

}  // namespace entdyn
