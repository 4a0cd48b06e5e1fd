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

#include "entdyn/commands.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "entdyn/config.hpp"
#include "entdyn/csv.hpp"
#include "entdyn/errors.hpp"
#include "entdyn/measures.hpp"
#include "entdyn/presets.hpp"

namespace entdyn {

namespace {

struct SimulateOptions {
    std::string config_path;
    ExperimentConfig overrides;
    int threads = 1;
};

void run_simulate(const SimulateOptions& opt, std::ostream& out) {
    ExperimentConfig cfg;
    if (!opt.config_path.empty()) cfg = parse_config_file(opt.config_path);
    const std::uint64_t seed = resolve_seed(opt.overrides.seed, cfg.seed);
    cfg = merge_overrides(cfg, opt.overrides);
    cfg.seed = seed;

    ResolvedExperiment experiment = resolve_experiment(cfg);
    const EnsembleSeries series = run_ensemble(experiment.dynamics, opt.threads);
    if (experiment.output.empty()) {
        write_series_csv(out, series);
    } else {
        std::ofstream file(experiment.output, std::ios::binary);
        if (!file) throw config_error("cannot write output file '" + experiment.output + "'");
        write_series_csv(file, series);
    }
}

struct StateOptions {
    std::string initial;
    double q = 0.6;
    double a_sq = 0.75;
    std::uint64_t seed = 42;
    bool seed_given = false;
};

DensityMatrix realize_state(const StateOptions& opt) {
    InitialSpec spec;
    if (opt.initial == "rho1") spec.kind = InitialKind::Rho1;
    else if (opt.initial == "rho2") spec.kind = InitialKind::Rho2;
    else if (opt.initial == "bell") spec.kind = InitialKind::Bell;
    else if (opt.initial == "pure-random") spec.kind = InitialKind::PureRandom;
    else if (opt.initial == "separable-random") spec.kind = InitialKind::SeparableRandom;
    else if (opt.initial == "max-entangled-random") spec.kind = InitialKind::MaxEntangledRandom;
    else throw config_error("state: no initial state selected");
    spec.q = opt.q;
    spec.a_sq = opt.a_sq;
    const std::uint64_t seed = resolve_seed(
        opt.seed_given ? std::optional<std::uint64_t>(opt.seed) : std::nullopt, std::nullopt);
    RandomSource rng = RandomSource(seed).derive(0);
    return make_initial(spec, rng);
}

void run_state(const StateOptions& opt, std::ostream& out) {
    const DensityMatrix rho = realize_state(opt);
    rho.validate("state");

    out << "state 4x4 (basis |00>,|01>,|10>,|11>):\n";
    write_matrix_dump(out, rho.matrix());

    const EntanglementValue ev = entanglement_of_formation(rho);
    const EntropyReport er = entropy_report(rho);
    out << "concurrence = " << g12(ev.concurrence) << "\n";
    out << "E_nats = " << g12(ev.eof_nats) << " (E/ln2 = " << g12(ev.eof_rescaled) << ")\n";
    out << "S = " << g12(er.s_total) << ", S_A = " << g12(er.s_a)
        << ", S_B = " << g12(er.s_b) << "\n";
    out << "violates_A = " << (er.violates_a ? "true" : "false")
        << ", violates_B = " << (er.violates_b ? "true" : "false") << "\n";

    const BlochDecomposition d = bloch_decompose(rho);
    out << "bloch a = (" << g12(d.a[0]) << ", " << g12(d.a[1]) << ", " << g12(d.a[2]) << ")\n";
    out << "bloch b = (" << g12(d.b[0]) << ", " << g12(d.b[1]) << ", " << g12(d.b[2]) << ")\n";
    for (int i = 0; i < 3; ++i)
        out << "T row " << i << " = (" << g12(d.t[i][0]) << ", " << g12(d.t[i][1]) << ", "
            << g12(d.t[i][2]) << ")\n";
}

struct ChannelOptions {
    std::string kind;
    double epsilon = -1.0;
    double p = -1.0;
};

void run_check_channel(const ChannelOptions& opt, std::ostream& out) {
    KrausChannel c;
    if (opt.kind == "ref1" || opt.kind == "ref2" || opt.kind == "ref3") {
        if (opt.epsilon < 0.0)
            throw config_error("check-channel: --epsilon is required with --" + opt.kind);
        if (opt.p >= 0.0)
            throw config_error("check-channel: --p is only valid with --damping");
        c = opt.kind == "ref1" ? ref1(opt.epsilon)
            : opt.kind == "ref2" ? ref2(opt.epsilon)
                                 : ref3(opt.epsilon);
    } else if (opt.kind == "damping") {
        if (opt.p < 0.0) throw config_error("check-channel: --p is required with --damping");
        if (opt.epsilon >= 0.0)
            throw config_error("check-channel: --epsilon is only valid with --ref1|--ref2|--ref3");
        c = make_amplitude_damping(opt.p);
    } else {
        throw config_error("check-channel: no channel selected");
    }

    const ResidualCheck tp = is_trace_preserving(c);
    const ResidualCheck bi = is_bistochastic(c);
    out << "channel = " << c.label << "\n";
    out << "trace_preserving = " << (tp.ok ? "true" : "false")
        << " (residual " << g12(tp.residual) << ")\n";
    out << "bistochastic = " << (bi.ok ? "true" : "false")
        << " (residual " << g12(bi.residual) << ")\n";
}

struct SampleOptions {
    std::string ensemble;
    int count = 100;
    std::uint64_t seed = 42;
    bool seed_given = false;
    std::string output;
};

void run_sample(const SampleOptions& opt, std::ostream& fallback_out) {
    PureState (*draw)(RandomSource&) = nullptr;
    if (opt.ensemble == "pure") draw = sample_pure;
    else if (opt.ensemble == "separable") draw = sample_separable;
    else if (opt.ensemble == "max-entangled") draw = sample_max_entangled;
    else
        throw config_error("sample: unknown ensemble '" + opt.ensemble +
                           "' (expected pure, separable or max-entangled)");
    if (opt.count < 1) throw config_error("sample: count must be positive");

    std::ofstream file;
    std::ostream* os = &fallback_out;
    if (!opt.output.empty()) {
        file.open(opt.output, std::ios::binary);
        if (!file) throw config_error("cannot write output file '" + opt.output + "'");
        os = &file;
    }

    RandomSource rng(resolve_seed(
        opt.seed_given ? std::optional<std::uint64_t>(opt.seed) : std::nullopt, std::nullopt));
    double sum_e = 0.0;
    double sum_sa = 0.0;
    double sum_r = 0.0;
    *os << "index,E_nats,S_marginal_A,r\n";
    for (int i = 0; i < opt.count; ++i) {
        const DensityMatrix rho = pure_to_density(draw(rng));
        const double e = entanglement_of_formation(rho).eof_nats;
        const DensityMatrix marginal(partial_trace(rho.matrix(), SubsystemId::B));
        const double s_a = von_neumann_entropy(marginal);
        const double r = eig_hermitian(marginal.matrix()).eigenvalues.front() - 0.5;
        sum_e += e;
        sum_sa += s_a;
        sum_r += r;
        *os << i << ',' << g12(e) << ',' << g12(s_a) << ',' << g12(r) << '\n';
    }
    *os << "# mean," << g12(sum_e / opt.count) << ',' << g12(sum_sa / opt.count) << ','
        << g12(sum_r / opt.count) << '\n';
}

struct ReproduceOptions {
    std::string figure;
    std::string out_dir;
    std::uint64_t seed = 42;
    bool seed_given = false;
    int threads = 1;
};

void run_reproduce_cmd(const ReproduceOptions& opt, std::ostream& out) {
    std::uint64_t seed = resolve_seed(
        opt.seed_given ? std::optional<std::uint64_t>(opt.seed) : std::nullopt, std::nullopt);
    const FigurePreset preset = figure_preset(opt.figure, seed);
    const std::filesystem::path dir =
        opt.out_dir.empty() ? std::filesystem::path(opt.figure) : std::filesystem::path(opt.out_dir);
    run_reproduce(preset, dir, opt.threads);
    out << "wrote " << preset.curves.size() << " curve files and manifest.csv to "
        << dir.string() << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete-time two-qubit entanglement dynamics simulator"};
    app.require_subcommand(1);

    // simulate
    SimulateOptions sim;
    auto set_string = [](std::optional<std::string>& slot) {
        return [&slot](const CLI::results_t& r) {
            slot = r[0];
            return true;
        };
    };
    auto set_double = [](std::optional<double>& slot) {
        return [&slot](const CLI::results_t& r) {
            double v = 0.0;
            if (!CLI::detail::lexical_cast(r[0], v)) return false;
            slot = v;
            return true;
        };
    };
    auto set_int = [](std::optional<int>& slot) {
        return [&slot](const CLI::results_t& r) {
            int v = 0;
            if (!CLI::detail::lexical_cast(r[0], v)) return false;
            slot = v;
            return true;
        };
    };
    auto set_u64 = [](std::optional<std::uint64_t>& slot) {
        return [&slot](const CLI::results_t& r) {
            std::uint64_t v = 0;
            if (!CLI::detail::lexical_cast(r[0], v)) return false;
            slot = v;
            return true;
        };
    };
    CLI::App* simulate = app.add_subcommand("simulate", "run an experiment config, emit CSV");
    simulate->add_option("config", sim.config_path, "key=value config file");
    {
        ExperimentConfig& o = sim.overrides;
        simulate->add_option("--initial", set_string(o.initial),
                             "initial state (pure_random|separable_random|"
                             "max_entangled_random|rho1|rho2|bell)");
        simulate->add_option("--q", set_double(o.q), "mixing weight for rho1/rho2");
        simulate->add_option("--a-sq", set_double(o.a_sq), "a^2 parameter for rho1/rho2");
        simulate->add_option("--channel", set_string(o.channel),
                             "channel preset (ref1|ref2|ref3|damping)");
        simulate->add_option("--epsilon", set_double(o.epsilon),
                             "environment coupling for ref presets");
        simulate->add_option("--p", set_double(o.p),
                             "retention probability for the damping channel");
        simulate->add_option("--side", set_string(o.side), "attacked subsystem (A|B)");
        simulate->add_option("--hamiltonian", set_string(o.hamiltonian),
                             "coupling Hamiltonian (H|Hprime|none|random_product)");
        simulate->add_option("--alpha", set_double(o.alpha),
                             "unitary coupling strength (negative reverses the process)");
        simulate->add_option("--steps", set_int(o.steps), "number of map iterations");
        simulate->add_option("--seed", set_u64(o.seed),
                             "base seed (overrides ENTDYN_SEED and the config file)");
        simulate->add_option("--ensemble-size", set_int(o.ensemble_size),
                             "number of trajectories to average");
        simulate->add_option("--record-every", set_int(o.record_every),
                             "record cadence in steps");
        simulate->add_option("--output", set_string(o.output),
                             "CSV output path (default stdout)");
    }
    simulate->add_option("--threads", sim.threads, "ensemble worker threads (output-invariant)");

    // reproduce
    ReproduceOptions rep;
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "run a canned figure preset (fig2..fig10b)");
    reproduce->add_option("figure", rep.figure, "figure id")->required();
    reproduce->add_option("--output-dir", rep.out_dir, "directory for curve CSVs + manifest");
    reproduce->add_option(
        "--seed",
        [&rep](const CLI::results_t& r) {
            if (!CLI::detail::lexical_cast(r[0], rep.seed)) return false;
            rep.seed_given = true;
            return true;
        },
        "base seed (overrides ENTDYN_SEED)");
    reproduce->add_option("--threads", rep.threads, "ensemble worker threads (output-invariant)");

    // state
    StateOptions st;
    CLI::App* state = app.add_subcommand("state", "print a state report");
    auto pick = [&st](const std::string& name) {
        return [&st, name](std::int64_t) { st.initial = name; };
    };
    state->add_flag_function("--rho1", pick("rho1"), "the asymmetric family state");
    state->add_flag_function("--rho2", pick("rho2"), "the family state with subsystems exchanged");
    state->add_flag_function("--bell", pick("bell"), "(|00>+|11>)/sqrt(2)");
    state->add_flag_function("--pure-random", pick("pure-random"), "one Haar-uniform pure state");
    state->add_flag_function("--separable-random", pick("separable-random"),
                             "one random product state");
    state->add_flag_function("--max-entangled-random", pick("max-entangled-random"),
                             "one random maximally entangled state");
    state->add_option("--q", st.q, "mixing weight (default 0.6)");
    state->add_option("--a-sq", st.a_sq, "a^2 parameter (default 0.75)");
    state->add_option(
        "--seed",
        [&st](const CLI::results_t& r) {
            if (!CLI::detail::lexical_cast(r[0], st.seed)) return false;
            st.seed_given = true;
            return true;
        },
        "seed for the random kinds (overrides ENTDYN_SEED)");

    // check-channel
    ChannelOptions ch;
    CLI::App* check = app.add_subcommand("check-channel", "verify a channel preset");
    auto pick_channel = [&ch](const std::string& name) {
        return [&ch, name](std::int64_t) { ch.kind = name; };
    };
    check->add_flag_function("--ref1", pick_channel("ref1"), "probabilities [1-e,0,0,e]");
    check->add_flag_function("--ref2", pick_channel("ref2"), "probabilities [1-e,0,e/2,e/2]");
    check->add_flag_function("--ref3", pick_channel("ref3"), "probabilities [1-e,e/3,e/3,e/3]");
    check->add_flag_function("--damping", pick_channel("damping"), "amplitude damping");
    check->add_option("--epsilon", ch.epsilon, "coupling for the ref presets");
    check->add_option("--p", ch.p, "retention probability for damping");

    // sample
    SampleOptions sa;
    CLI::App* sample = app.add_subcommand("sample", "draw an ensemble, emit per-draw CSV");
    sample->add_option("--ensemble", sa.ensemble, "pure|separable|max-entangled")->required();
    sample->add_option("-n,--count", sa.count, "number of draws (default 100)");
    sample->add_option(
        "--seed",
        [&sa](const CLI::results_t& r) {
            if (!CLI::detail::lexical_cast(r[0], sa.seed)) return false;
            sa.seed_given = true;
            return true;
        },
        "base seed (overrides ENTDYN_SEED)");
    sample->add_option("--output", sa.output, "CSV output path (default stdout)");

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        if (simulate->parsed()) run_simulate(sim, out);
        else if (reproduce->parsed()) run_reproduce_cmd(rep, out);
        else if (state->parsed()) run_state(st, out);
        else if (check->parsed()) run_check_channel(ch, out);
        else if (sample->parsed()) run_sample(sa, out);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace entdyn
