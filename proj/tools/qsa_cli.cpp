// Copyright 2026 The QSA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// qsa: command-line driver for compilation, evaluation, attacks, sweeps,
// cost tables and the verifier/prover exchange.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "qsa/adversary/attacks.hpp"
#include "qsa/adversary/cost.hpp"
#include "qsa/compile/bundle.hpp"
#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/crypto.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/ldqpe.hpp"
#include "qsa/extract/regimes.hpp"
#include "qsa/extract/schedule.hpp"
#include "qsa/protocol/session.hpp"
#include "qsa/qsim/dense.hpp"

using namespace qsa;
using nlohmann::json;

namespace {

struct Common {
    std::uint64_t seed = 0;
    std::string s0_hex;
    int n = 4;
    int m = 4;
    int k = 1;
    int plant_depth = 2;
};

// S0 is taken from --s0 when given, otherwise derived from --seed.
Bytes master_seed(const Common &c) {
    if (!c.s0_hex.empty()) {
        Bytes s0 = from_hex(c.s0_hex);
        if (s0.size() < 32) throw ValidationError("--s0 must be at least 32 bytes");
        return s0;
    }
    Stream rng(c.seed, "cli.s0");
    return rng.bytes(32);
}

struct CompileOpts {
    double delta = 0.1;
    int layers = 4;
    int steps = compile::compiler_spsa_defaults().steps;
    int restarts = compile::compiler_spsa_defaults().restarts;
    double gain = compile::compiler_spsa_defaults().a;
    int blocksize = 4;
    std::uint32_t index = 0;
    std::string out;
};

compile::CompilerConfig compiler_config(const CompileOpts &o, const Bytes &s0, std::uint32_t index) {
    compile::CompilerConfig cfg;
    cfg.delta_target = o.delta;
    cfg.layers = o.layers;
    cfg.spsa.steps = o.steps;
    cfg.spsa.restarts = o.restarts;
    cfg.spsa.a = o.gain;
    cfg.seed = crypto::hkdf(s0, {}, to_bytes("QSA-compile" + std::to_string(index)), 32);
    return cfg;
}

qsim::Circuit plant_for(const Common &c, const Bytes &s0, std::uint32_t index) {
    return compile::seed_to_plant_circuit(compile::derive_plant_seed(s0, index), c.n, c.plant_depth);
}

void emit(const json &j, const std::string &path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << "\n";
}

json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    return json::parse(in);
}

std::vector<double> parse_grid(const std::string &s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    if (out.empty()) throw ValidationError("empty --p2-grid");
    return out;
}

int run_compile(const std::string &family, const Common &c, const CompileOpts &o) {
    const Bytes s0 = master_seed(c);
    const auto plant = plant_for(c, s0, o.index);
    json out;
    if (family == "symmetric") {
        const auto ch = compile::compile_symmetric(plant, compiler_config(o, s0, o.index));
        out = {{"bundle", compile::bundle_json(ch.public_challenge(), c.m, o.index)}, {"witness", compile::witness_json(ch)}};
    } else if (family == "asymmetric") {
        const auto ch = compile::compile_asymmetric(plant, compiler_config(o, s0, o.index));
        out = {{"bundle", compile::bundle_json(ch.public_challenge(), c.m, o.index)}, {"witness", compile::witness_json(ch)}};
    } else if (family == "multiparty") {
        std::vector<std::pair<qsim::Circuit, std::uint64_t>> parties;
        for (int p = 0; p < std::max(2, c.k); ++p) {
            const auto idx = o.index + static_cast<std::uint32_t>(p);
            parties.emplace_back(plant_for(c, s0, idx), static_cast<std::uint64_t>(p));
        }
        const auto ch = compile::compile_multiparty(parties, compiler_config(o, s0, o.index));
        out = {{"bundle", compile::bundle_json(ch.public_challenge(), c.m, o.index)}, {"witness", compile::witness_json(ch)}};
    } else if (family == "blockwise") {
        compile::BlockwiseConfig cfg;
        cfg.blocksize = o.blocksize;
        cfg.delta_block = o.delta;
        cfg.block_spsa = compile::compiler_spsa_defaults();
        cfg.block_spsa.steps = o.steps;
        cfg.block_spsa.restarts = o.restarts;
        cfg.seed = compiler_config(o, s0, o.index).seed;
        // Blockwise compilation needs a product plant: one plant per block.
        qsim::Circuit prod(c.n);
        if (c.n % o.blocksize != 0) throw ValidationError("--n must be a multiple of --blocksize");
        for (int b = 0; b < c.n / o.blocksize; ++b) {
            const auto part = compile::seed_to_plant_circuit(
                compile::derive_plant_seed(s0, o.index + static_cast<std::uint32_t>(b)), o.blocksize, c.plant_depth);
            std::vector<int> map;
            for (int q = 0; q < o.blocksize; ++q) map.push_back(b * o.blocksize + q);
            prod.append(part.remap(map, c.n));
        }
        const auto ch = compile::compile_blockwise(prod, cfg);
        out = {{"bundle", compile::bundle_json(ch.public_challenge(), c.m, o.index)},
               {"report",
                {{"block_overlaps", ch.block_overlaps},
                 {"global_overlap", ch.global_overlap},
                 {"moment_loss", ch.moment_loss},
                 {"below_target", ch.below_target()}}}};
    } else {
        throw ValidationError("unknown family: " + family);
    }
    emit(out, o.out);
    std::cerr << "digest " << out["bundle"]["meta"]["digest"].get<std::string>() << "\n";
    return 0;
}

int run_eval(const Common &c, const std::string &bundle_path, const std::string &regime, std::uint64_t shots,
             double p2) {
    const json j = read_json(bundle_path);
    const json &b = j.contains("bundle") ? j.at("bundle") : j;
    const auto pub = compile::bundle_from_json(b);
    const auto index = b.at("meta").at("index").get<std::uint32_t>();
    const int m = b.at("meta").at("m").get<int>();
    Common cc = c;
    cc.n = pub.circuit.n;
    const auto plant = plant_for(cc, master_seed(c), index);
    extract::EvalConfig cfg;
    cfg.hadamard.shots = shots;
    cfg.hadamard.exact = p2 == 0.0;
    if (p2 > 0.0) cfg.hadamard.noise = qsim::NoiseModel::coupled(p2);
    Stream rng(c.seed, "cli.eval");
    const std::vector<qsim::Circuit> plants{plant};
    const auto fv = extract::evaluate_schedule({pub}, {compile::plant_state(plant)}, extract::parse_regime(regime), m,
                                               cfg, rng, &plants);
    const auto &f = fv.features.front();
    std::cout << json{{"regime", regime}, {"m", m}, {"theta", f.theta}, {"bucket", f.bucket}, {"low_signal", f.low_signal}}
                     .dump()
              << "\n";
    return 0;
}

compile::CompilerConfig quick_config(const Common &c, std::uint32_t i, int layers) {
    compile::CompilerConfig cfg;
    cfg.delta_target = 0.01;
    cfg.layers = layers;
    Stream s(c.seed, "cli.compile");
    cfg.seed = s.child("instance", i).bytes(32);
    return cfg;
}

void write_csv_file(const std::string &path, const std::function<void(std::ostream &)> &emit) {
    if (path.empty()) return;
    std::ofstream os(path);
    if (!os) throw ValidationError("cannot open " + path);
    emit(os);
}

int run_attack(const std::string &which, const Common &c, std::uint64_t trials, const std::string &csv) {
    Stream rng(c.seed, "cli.attack." + which);
    const Bytes s0 = master_seed(c);
    if (which == "chained") {
        std::vector<adversary::SpectralInstance> inst;
        for (int i = 0; i < c.k; ++i) {
            const auto u = qsim::haar_unitary_dim(std::size_t{1} << c.n, rng);
            inst.push_back(adversary::make_instance(
                u, compile::plant_state(plant_for(c, s0, static_cast<std::uint32_t>(i))), c.m));
        }
        std::cout << adversary::chained_qpe_attack(inst, c.m, trials, rng).to_json().dump(2) << "\n";
        write_csv_file(csv, [&](std::ostream &os) { adversary::write_overlaps_csv(os, adversary::successive_overlaps(inst)); });
    } else if (which == "guess") {
        const auto curve = adversary::p_u_curve(c.n, c.m, adversary::default_fidelity_grid(), trials, rng);
        write_csv_file(csv, [&](std::ostream &os) { adversary::write_pu_csv(os, curve); });
        const auto g = adversary::state_guess_success(c.n, c.k, curve);
        std::cout << json{{"n", c.n},
                          {"m", c.m},
                          {"k", c.k},
                          {"log2_p_succ", g.log2_p_succ},
                          {"min_entropy_bits", g.min_entropy_bits},
                          {"min_k_256", adversary::min_k_for_entropy(c.n, curve, 256.0)}}
                         .dump(2)
                  << "\n";
    } else if (which == "binmass") {
        const auto plant = plant_for(c, s0, 0);
        const auto ch = compile::compile_symmetric(plant, quick_config(c, 0, 4));
        const auto u = qsim::circuit_to_matrix(ch.public_challenge().circuit);
        const auto h = adversary::bin_mass_histogram(u, compile::plant_state(plant), 1 << c.m);
        std::cout << "bin,mass\n";
        for (std::size_t b = 0; b < h.size(); ++b) std::cout << b << ',' << h[b] << '\n';
    } else {
        throw ValidationError("unknown attack: " + which);
    }
    return 0;
}

int run_sweep(const Common &c, int reps, std::uint64_t shots, const std::string &grid, int layers,
              const std::string &family) {
    const Bytes s0 = master_seed(c);
    std::vector<extract::SweepInstance> inst;
    for (int i = 0; i < reps; ++i) {
        const auto idx = static_cast<std::uint32_t>(i);
        const auto plant = plant_for(c, s0, idx);
        const auto cfg = quick_config(c, idx, layers);
        compile::PublicChallenge pub;
        std::uint64_t expected = 0;
        if (family == "symmetric") {
            const auto ch = compile::compile_symmetric(plant, cfg);
            pub = ch.public_challenge();
            expected = extract::quantize_phase(ch.phase(), c.m);
        } else if (family == "asymmetric") {
            const auto ch = compile::compile_asymmetric(plant, cfg);
            pub = ch.public_challenge();
            expected = extract::extract_m(qsim::circuit_to_matrix(pub.circuit), compile::plant_state(plant), c.m).bucket;
        } else {
            throw ValidationError("sweep supports symmetric and asymmetric families");
        }
        inst.push_back({pub, plant, expected});
    }
    Stream rng(c.seed, "cli.sweep");
    extract::write_sweep_csv(std::cout, extract::noise_sweep(inst, parse_grid(grid), c.m, shots, rng));
    return 0;
}

int run_cost(const std::string &which, const Common &c, double ram, double gates, std::uint64_t ns) {
    adversary::CostModelParams p;
    auto years = [](double s) { return s / adversary::kSecondsPerYear; };
    if (which == "quantum-eve") {
        const double s = adversary::quantum_eve_cost(c.n, p);
        std::cout << json{{"n", c.n}, {"seconds", s}, {"years", years(s)}}.dump() << "\n";
    } else if (which == "classical-eve") {
        const double s = adversary::classical_eve_cost(c.n, p);
        std::cout << json{{"n", c.n}, {"seconds", s}, {"years", years(s)}}.dump() << "\n";
    } else if (which == "honest") {
        std::cout << json{{"n", c.n}, {"seconds", adversary::honest_classical_cost(c.n, p)}}.dump() << "\n";
    } else if (which == "table") {
        adversary::write_cost_csv(std::cout, adversary::cost_table(8, c.n, p));
    } else if (which == "memory") {
        const auto [dense, vec] = adversary::memory_cutoffs(ram, c.m);
        std::cout << json{{"ram_bytes", ram}, {"m", c.m}, {"dense_evd_n", dense}, {"state_vector_n", vec}}.dump() << "\n";
    } else if (which == "bell") {
        std::cout << json{{"bell_pairs", adversary::bell_budget(ns, static_cast<std::uint64_t>(c.n),
                                                                 static_cast<std::uint64_t>(c.m),
                                                                 static_cast<std::uint64_t>(c.k))}}
                         .dump()
                  << "\n";
    } else if (which == "survival") {
        std::cout << json{{"two_qubit_gates", gates}, {"p2_max", adversary::survival_budget(gates)}}.dump() << "\n";
    } else {
        throw ValidationError("unknown cost model: " + which);
    }
    return 0;
}

std::vector<protocol::Witness> verifier_witnesses(const Common &c, const CompileOpts &o) {
    const Bytes s0 = master_seed(c);
    std::vector<protocol::Witness> w;
    for (int i = 0; i < c.k; ++i) {
        const auto idx = o.index + static_cast<std::uint32_t>(i);
        w.push_back({idx, compile::compile_symmetric(plant_for(c, s0, idx), compiler_config(o, s0, idx))});
        std::cerr << "compiled challenge " << idx << " fidelity " << w.back().challenge.fidelity << "\n";
    }
    return w;
}

int run_serve(const Common &c, const CompileOpts &o, const std::string &host, std::uint16_t port, int sessions) {
    protocol::VerifierConfig vc;
    vc.m = c.m;
    vc.schedule_id = c.seed;
    vc.witnesses = verifier_witnesses(c, o);
    protocol::TcpListener listener(host, port);
    std::cerr << "listening on " << host << ":" << listener.port() << "\n";
    Stream rng(crypto::os_random(32), "cli.serve");
    int accepted = 0;
    for (int s = 0; sessions <= 0 || s < sessions; ++s) {
        auto conn = listener.accept();
        Stream sess = rng.child("session", static_cast<std::uint64_t>(s));
        const auto out = protocol::verifier_session(*conn, vc, sess);
        std::cout << out.log_lines() << std::flush;
        accepted += out.accept ? 1 : 0;
    }
    return accepted == sessions ? 0 : 1;
}

int run_connect(const Common &c, const std::string &host, std::uint16_t port, const std::string &regime, double p2) {
    protocol::ProverConfig pc;
    pc.s0 = master_seed(c);
    pc.plant_depth = c.plant_depth;
    pc.regime = extract::parse_regime(regime);
    if (p2 > 0.0) {
        pc.eval.hadamard.exact = false;
        pc.eval.hadamard.noise = qsim::NoiseModel::coupled(p2);
    }
    auto conn = protocol::TcpTransport::connect(host, port);
    Stream rng(crypto::os_random(32), "cli.connect");
    const auto out = protocol::prover_session(*conn, pc, rng);
    std::cout << out.log_lines() << std::flush;
    return out.accept ? 0 : 1;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum spectral authentication toolkit"};
    app.require_subcommand(1);
    Common c;
    auto common = [&](CLI::App *sub) {
        sub->add_option("--seed", c.seed, "Deterministic seed");
        sub->add_option("--s0", c.s0_hex, "Master provisioning secret (hex, >= 32 bytes)");
        sub->add_option("-n,--n", c.n, "Qubits");
        sub->add_option("-m,--m", c.m, "Phase bits");
        sub->add_option("-k,--k", c.k, "Challenges per session");
        sub->add_option("--plant-depth", c.plant_depth, "Plant circuit layers");
    };
    CompileOpts co;
    auto compile_opts = [&](CLI::App *sub) {
        sub->add_option("--delta", co.delta, "Target infidelity");
        sub->add_option("--layers", co.layers, "Ansatz layers");
        sub->add_option("--steps", co.steps, "SPSA steps");
        sub->add_option("--restarts", co.restarts, "SPSA restarts");
        sub->add_option("--gain", co.gain, "SPSA gain a");
        sub->add_option("--index", co.index, "First plant index");
    };

    std::string family = "symmetric";
    auto *compile_cmd = app.add_subcommand("compile", "Compile a public challenge");
    compile_cmd->add_option("family", family, "symmetric|asymmetric|multiparty|blockwise")
        ->check(CLI::IsMember({"symmetric", "asymmetric", "multiparty", "blockwise"}));
    common(compile_cmd);
    compile_opts(compile_cmd);
    compile_cmd->add_option("-b,--blocksize", co.blocksize, "Block size for blockwise");
    compile_cmd->add_option("-o,--out", co.out, "Output file");

    std::string bundle, regime = "Q";
    std::uint64_t shots = 4000;
    double p2 = 0.0;
    auto *eval_cmd = app.add_subcommand("eval", "Extract a phase feature from a bundle");
    common(eval_cmd);
    eval_cmd->add_option("--bundle", bundle, "Bundle JSON from compile")->required();
    eval_cmd->add_option("--regime", regime)->check(CLI::IsMember({"M", "C", "Q"}));
    eval_cmd->add_option("--shots", shots);
    eval_cmd->add_option("--p2", p2, "Two-qubit depolarizing rate (Q only)");

    std::string attack = "chained", attack_csv;
    std::uint64_t trials = 1000;
    auto *attack_cmd = app.add_subcommand("attack", "Run an attack simulation");
    attack_cmd->add_option("kind", attack)->check(CLI::IsMember({"chained", "guess", "binmass"}));
    common(attack_cmd);
    attack_cmd->add_option("--trials", trials);
    attack_cmd->add_option("--csv", attack_csv, "Write overlaps (chained) or the p_U curve (guess) as CSV");

    int reps = 20, layers = 3;
    std::string grid = "1e-4,1e-3,5e-3,1e-2,2e-2";
    auto *sweep_cmd = app.add_subcommand("sweep", "LDQPE accuracy versus two-qubit noise (CSV)");
    common(sweep_cmd);
    sweep_cmd->add_option("--reps", reps);
    sweep_cmd->add_option("--shots", shots);
    sweep_cmd->add_option("--p2-grid", grid);
    sweep_cmd->add_option("--layers", layers);
    sweep_cmd->add_option("--family", family)->check(CLI::IsMember({"symmetric", "asymmetric"}));

    std::string model = "classical-eve";
    double ram = 4.85 * 1125899906842624.0, gates = 555;
    std::uint64_t ns = 110;
    auto *cost_cmd = app.add_subcommand("cost", "Evaluate cost models");
    cost_cmd->add_option("model", model)
        ->check(CLI::IsMember({"quantum-eve", "classical-eve", "honest", "table", "memory", "bell", "survival"}));
    common(cost_cmd);
    cost_cmd->add_option("--ram", ram, "RAM in bytes");
    cost_cmd->add_option("--gates", gates, "Two-qubit gate count");
    cost_cmd->add_option("--ns", ns, "Shots per moment");

    std::size_t key_bytes = 32;
    auto *keygen_cmd = app.add_subcommand("keygen", "Generate a master provisioning secret");
    keygen_cmd->add_option("--bytes", key_bytes);
    bool deterministic = false;
    keygen_cmd->add_option("--seed", c.seed);
    keygen_cmd->add_flag("--deterministic", deterministic, "Derive from --seed instead of OS entropy");

    std::string host = "127.0.0.1";
    std::uint16_t port = 7700;
    int sessions = 1;
    auto *serve_cmd = app.add_subcommand("serve", "Run the verifier");
    common(serve_cmd);
    compile_opts(serve_cmd);
    serve_cmd->add_option("--host", host);
    serve_cmd->add_option("--port", port);
    serve_cmd->add_option("--sessions", sessions, "Sessions to serve (<= 0 means forever)");

    auto *connect_cmd = app.add_subcommand("connect", "Run the prover");
    common(connect_cmd);
    connect_cmd->add_option("--host", host);
    connect_cmd->add_option("--port", port);
    connect_cmd->add_option("--regime", regime)->check(CLI::IsMember({"M", "C", "Q"}));
    connect_cmd->add_option("--p2", p2);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compile_cmd) return run_compile(family, c, co);
        if (*eval_cmd) return run_eval(c, bundle, regime, shots, p2);
        if (*attack_cmd) return run_attack(attack, c, trials, attack_csv);
        if (*sweep_cmd) return run_sweep(c, reps, shots, grid, layers, family);
        if (*cost_cmd) return run_cost(model, c, ram, gates, ns);
        if (*keygen_cmd) {
            Stream rng(c.seed, "cli.keygen");
            std::cout << to_hex(deterministic ? rng.bytes(key_bytes) : crypto::os_random(key_bytes)) << "\n";
            return 0;
        }
        if (*serve_cmd) return run_serve(c, co, host, port, sessions);
        if (*connect_cmd) return run_connect(c, host, port, regime, p2);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
