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

#include "entdyn/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "entdyn/errors.hpp"

namespace entdyn {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': not a number: '" + value + "'");
    }
}

int parse_positive_int(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size() || v < 1) throw std::invalid_argument(value);
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': not a positive integer: '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw config_error("key '" + key + "': not an unsigned integer: '" + value + "'");
    }
}

template <typename T>
void set_once(std::optional<T>& slot, const std::string& key, T value) {
    if (slot.has_value()) throw config_error("duplicate key '" + key + "'");
    slot = std::move(value);
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");

        if (key == "initial") set_once(cfg.initial, key, value);
        else if (key == "q") set_once(cfg.q, key, parse_double(key, value));
        else if (key == "a_sq") set_once(cfg.a_sq, key, parse_double(key, value));
        else if (key == "channel") set_once(cfg.channel, key, value);
        else if (key == "epsilon") set_once(cfg.epsilon, key, parse_double(key, value));
        else if (key == "p") set_once(cfg.p, key, parse_double(key, value));
        else if (key == "side") set_once(cfg.side, key, value);
        else if (key == "hamiltonian") set_once(cfg.hamiltonian, key, value);
        else if (key == "alpha") set_once(cfg.alpha, key, parse_double(key, value));
        else if (key == "steps") set_once(cfg.steps, key, parse_positive_int(key, value));
        else if (key == "seed") set_once(cfg.seed, key, parse_u64(key, value));
        else if (key == "ensemble_size")
            set_once(cfg.ensemble_size, key, parse_positive_int(key, value));
        else if (key == "record_every")
            set_once(cfg.record_every, key, parse_positive_int(key, value));
        else if (key == "output") set_once(cfg.output, key, value);
        else throw config_error("unknown key '" + key + "'");
    }
    return cfg;
}

ExperimentConfig parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot read config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

ExperimentConfig merge_overrides(ExperimentConfig base, const ExperimentConfig& overrides) {
    auto take = [](auto& dst, const auto& src) {
        if (src.has_value()) dst = src;
    };
    take(base.initial, overrides.initial);
    take(base.q, overrides.q);
    take(base.a_sq, overrides.a_sq);
    take(base.channel, overrides.channel);
    take(base.epsilon, overrides.epsilon);
    take(base.p, overrides.p);
    take(base.side, overrides.side);
    take(base.hamiltonian, overrides.hamiltonian);
    take(base.alpha, overrides.alpha);
    take(base.steps, overrides.steps);
    take(base.seed, overrides.seed);
    take(base.ensemble_size, overrides.ensemble_size);
    take(base.record_every, overrides.record_every);
    take(base.output, overrides.output);
    return base;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed,
                           std::optional<std::uint64_t> file_seed) {
    if (flag_seed.has_value()) return *flag_seed;
    if (const char* env = std::getenv("ENTDYN_SEED")) return parse_u64("ENTDYN_SEED", env);
    if (file_seed.has_value()) return *file_seed;
    return 42;
}

namespace {

void reject_if_present(bool present, const std::string& key, const std::string& reason) {
    if (present) throw config_error("key '" + key + "' " + reason);
}

}  // namespace

ResolvedExperiment resolve_experiment(const ExperimentConfig& cfg) {
    ResolvedExperiment out;
    DynamicsConfig& d = out.dynamics;

    if (!cfg.initial) throw config_error("missing required key 'initial'");
    const std::string& initial = *cfg.initial;
    const bool wants_family = initial == "rho1" || initial == "rho2";
    if (initial == "pure_random") d.initial.kind = InitialKind::PureRandom;
    else if (initial == "separable_random") d.initial.kind = InitialKind::SeparableRandom;
    else if (initial == "max_entangled_random") d.initial.kind = InitialKind::MaxEntangledRandom;
    else if (initial == "rho1") d.initial.kind = InitialKind::Rho1;
    else if (initial == "rho2") d.initial.kind = InitialKind::Rho2;
    else if (initial == "bell") d.initial.kind = InitialKind::Bell;
    else
        throw config_error("key 'initial': unknown value '" + initial +
                           "' (expected pure_random, separable_random, max_entangled_random, "
                           "rho1, rho2 or bell)");
    if (wants_family) {
        if (!cfg.q) throw config_error("missing key 'q' (required with initial=" + initial + ")");
        if (!cfg.a_sq)
            throw config_error("missing key 'a_sq' (required with initial=" + initial + ")");
        d.initial.q = *cfg.q;
        d.initial.a_sq = *cfg.a_sq;
        if (!(d.initial.q > 0.0 && d.initial.q < 1.0))
            throw config_error("key 'q': must lie in the open interval (0, 1)");
        if (!(d.initial.a_sq > 0.0 && d.initial.a_sq < 1.0))
            throw config_error("key 'a_sq': must lie in the open interval (0, 1)");
    } else {
        reject_if_present(cfg.q.has_value(), "q", "is only valid with initial=rho1|rho2");
        reject_if_present(cfg.a_sq.has_value(), "a_sq", "is only valid with initial=rho1|rho2");
    }

    if (!cfg.channel) throw config_error("missing required key 'channel'");
    const std::string& channel = *cfg.channel;
    const bool is_ref = channel == "ref1" || channel == "ref2" || channel == "ref3";
    if (channel == "ref1") d.channel.kind = ChannelKind::Ref1;
    else if (channel == "ref2") d.channel.kind = ChannelKind::Ref2;
    else if (channel == "ref3") d.channel.kind = ChannelKind::Ref3;
    else if (channel == "damping") d.channel.kind = ChannelKind::Damping;
    else
        throw config_error("key 'channel': unknown value '" + channel +
                           "' (expected ref1, ref2, ref3 or damping)");
    if (is_ref) {
        if (!cfg.epsilon)
            throw config_error("missing key 'epsilon' (required with channel=" + channel + ")");
        reject_if_present(cfg.p.has_value(), "p", "is only valid with channel=damping");
        if (!(*cfg.epsilon >= 0.0 && *cfg.epsilon <= 1.0))
            throw config_error("key 'epsilon': must lie in [0, 1]");
        d.channel.parameter = *cfg.epsilon;
    } else {
        if (!cfg.p) throw config_error("missing key 'p' (required with channel=damping)");
        reject_if_present(cfg.epsilon.has_value(), "epsilon",
                          "is only valid with channel=ref1|ref2|ref3");
        if (!(*cfg.p >= 0.0 && *cfg.p <= 1.0))
            throw config_error("key 'p': must lie in [0, 1]");
        d.channel.parameter = *cfg.p;
    }

    const std::string side = cfg.side.value_or("B");
    if (side == "A") d.channel.side = SubsystemId::A;
    else if (side == "B") d.channel.side = SubsystemId::B;
    else throw config_error("key 'side': expected A or B, got '" + side + "'");

    const std::string hamiltonian = cfg.hamiltonian.value_or("none");
    if (hamiltonian == "H") d.hamiltonian.kind = HamiltonianKind::H;
    else if (hamiltonian == "Hprime") d.hamiltonian.kind = HamiltonianKind::Hprime;
    else if (hamiltonian == "none") d.hamiltonian.kind = HamiltonianKind::None;
    else if (hamiltonian == "random_product") d.hamiltonian.kind = HamiltonianKind::RandomProduct;
    else
        throw config_error("key 'hamiltonian': unknown value '" + hamiltonian +
                           "' (expected H, Hprime, none or random_product)");

    if (!cfg.alpha) throw config_error("missing required key 'alpha'");
    d.alpha = *cfg.alpha;

    d.steps = cfg.steps.value_or(500);
    d.seed = cfg.seed.value_or(42);
    d.ensemble_size = cfg.ensemble_size.value_or(1);
    d.record_every = cfg.record_every.value_or(1);
    out.output = cfg.output.value_or("");
    return out;
}

}  // namespace entdyn
