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

#include <cstdint>
#include <string>
#include <vector>

#include "entdyn/channels.hpp"
#include "entdyn/matcore.hpp"
#include "entdyn/sampling.hpp"
#include "entdyn/states.hpp"

// The iterated map: one step applies the local channel, then conjugates by
// the global unitary U = exp(i alpha H). Observables are recorded on the
// post-unitary states, plus the untouched initial state as step 0.

namespace entdyn {

enum class InitialKind {
    PureRandom,
    SeparableRandom,
    MaxEntangledRandom,
    Rho1,
    Rho2,
    Bell,
    Explicit,
};

struct InitialSpec {
    InitialKind kind = InitialKind::Bell;
    double q = 0.0;     // Rho1 / Rho2
    double a_sq = 0.0;  // Rho1 / Rho2
    ComplexMatrix explicit_matrix;
};

enum class HamiltonianKind {
    H,              // sigma_x x sigma_y
    Hprime,         // sigma_y x sigma_x, H with the subsystems exchanged
    None,           // no coupling: the unitary factor is the identity
    RandomProduct,  // (n1.sigma) x (n2.sigma), axes redrawn every step
    Explicit,
};

struct HamiltonianSpec {
    HamiltonianKind kind = HamiltonianKind::None;
    ComplexMatrix explicit_matrix;
};

enum class ChannelKind { Ref1, Ref2, Ref3, Damping, Explicit };

struct ChannelSpec {
    ChannelKind kind = ChannelKind::Ref3;
    double parameter = 0.0;  // epsilon for ref presets, retention p for damping
    SubsystemId side = SubsystemId::B;
    KrausChannel explicit_channel;

    LocalChannel make_local() const;
};

/// Full experiment description. A negative alpha runs the unitary part of
/// the process in reverse.
struct DynamicsConfig {
    InitialSpec initial;
    ChannelSpec channel;
    HamiltonianSpec hamiltonian;
    double alpha = 0.0;
    int steps = 500;
    std::uint64_t seed = 42;
    int ensemble_size = 1;
    int record_every = 1;
};

/// One measurement row along a trajectory.
struct ObservableRecord {
    int step = 0;
    double eof_nats = 0.0;
    double eof_rescaled = 0.0;
    double s_total = 0.0;
    double s_a = 0.0;
    double s_b = 0.0;
};

struct TrajectorySeries {
    std::vector<ObservableRecord> records;
};

/// Per-step ensemble statistics. Standard deviations use the unbiased (N-1)
/// estimator and are zero for a single trajectory.
struct EnsembleRecord {
    int step = 0;
    double mean_eof_nats = 0.0;
    double mean_eof_rescaled = 0.0;
    double mean_s_total = 0.0;
    double mean_s_a = 0.0;
    double mean_s_b = 0.0;
    double std_eof_nats = 0.0;
    double std_s_total = 0.0;
};

struct EnsembleSeries {
    std::vector<EnsembleRecord> records;
    int ensemble_size = 0;
};

/// The map itself: U apply(lc, rho) U†. Channel first, then unitary.
DensityMatrix step(const DensityMatrix& rho, const LocalChannel& lc, const ComplexMatrix& u);

/// Build the coupling Hamiltonian. RandomProduct draws two independent axes
/// uniformly on the unit sphere and needs an rng; every non-None output is
/// Hermitian with square identity. None yields the zero matrix (identity
/// unitary).
ComplexMatrix make_hamiltonian(const HamiltonianSpec& spec, RandomSource* rng = nullptr);

/// Realize an initial-state spec, consuming randomness only for the random
/// kinds. Explicit matrices are validated here.
DensityMatrix make_initial(const InitialSpec& spec, RandomSource& rng);

ObservableRecord observe(int step_index, const DensityMatrix& rho);

/// Iterate the map from an explicit initial state. Records step 0 and every
/// record_every-th step thereafter; revalidates the state every 50 steps and
/// throws numerical_error naming the step on failure. Randomness (only used
/// by the RandomProduct Hamiltonian) comes from the trajectory sub-stream
/// derive(cfg.seed, 0).
TrajectorySeries run_trajectory(const DensityMatrix& rho0, const DynamicsConfig& cfg);

/// Run cfg.ensemble_size trajectories on derived sub-seeds and reduce to
/// per-step mean and standard deviation. The result depends only on the
/// config (including seed), not on `threads`; trajectories are reduced in
/// index order after all complete.
EnsembleSeries run_ensemble(const DynamicsConfig& cfg, int threads = 1);

}  // namespace entdyn
