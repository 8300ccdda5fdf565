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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsa/adversary/cost.hpp"
#include "qsa/compile/challenge.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/extract/ldqpe.hpp"
#include "qsa/keyring/keys.hpp"
#include "qsa/protocol/message.hpp"
#include "qsa/qsim/noise.hpp"

namespace py = pybind11;
using namespace qsa;

namespace {

Bytes to_cpp(const py::bytes &b) {
    const std::string s = b;
    return Bytes(s.begin(), s.end());
}

py::bytes to_py(ByteView b) { return py::bytes(reinterpret_cast<const char *>(b.data()), b.size()); }

struct PyChallenge {
    qsim::Circuit plant;
    compile::SymmetricChallenge ch;
};

PyChallenge compile_challenge(const py::bytes &s0, std::uint32_t index, int n, int plant_depth, double delta,
                              int layers) {
    const Bytes master = to_cpp(s0);
    PyChallenge out;
    out.plant = compile::seed_to_plant_circuit(compile::derive_plant_seed(master, index), n, plant_depth);
    compile::CompilerConfig cfg;
    cfg.delta_target = delta;
    cfg.layers = layers;
    cfg.seed = compile::derive_plant_seed(master, 100000 + index);
    py::gil_scoped_release release;
    out.ch = compile::compile_symmetric(out.plant, cfg);
    return out;
}

py::dict ldqpe_bucket(const PyChallenge &c, int m, std::uint64_t shots, bool exact, double p2, std::uint64_t seed) {
    extract::HadamardConfig hc;
    hc.shots = shots;
    hc.exact = exact;
    if (p2 > 0.0) {
        hc.noise = qsim::NoiseModel::coupled(p2);
        hc.prep = c.plant;
    }
    Stream rng(seed, "python.ldqpe");
    extract::LdqpeResult r;
    {
        py::gil_scoped_release release;
        r = extract::ldqpe(c.ch.public_challenge(), compile::plant_state(c.plant), m, hc, rng);
    }
    py::dict d;
    d["bucket"] = r.feature.bucket;
    d["theta"] = r.feature.theta;
    d["low_signal"] = r.feature.low_signal;
    return d;
}

keyring::Transcript make_transcript(const py::bytes &v_nonce, const py::bytes &p_nonce, std::uint64_t schedule_id,
                                    const std::vector<py::bytes> &digests, std::uint32_t m, std::uint32_t k) {
    keyring::Transcript t;
    t.v_nonce = to_cpp(v_nonce);
    t.p_nonce = to_cpp(p_nonce);
    t.schedule_id = schedule_id;
    for (const auto &d : digests) {
        const Bytes b = to_cpp(d);
        if (b.size() != 32) throw ValidationError("digests must be 32 bytes");
        Digest x{};
        std::copy(b.begin(), b.end(), x.begin());
        t.digests.push_back(x);
    }
    t.m = m;
    t.k = k;
    return t;
}

}  // namespace

PYBIND11_MODULE(_qsa, mod) {
    mod.doc() = "Bindings for the QSA C++ core";

    py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
    py::register_exception<ProtocolError>(mod, "ProtocolError", PyExc_ValueError);
    py::register_exception<CapacityError>(mod, "CapacityError", PyExc_RuntimeError);

    mod.def("quantize_phase", &extract::quantize_phase, py::arg("theta"), py::arg("m"));
    mod.def("bucket_center", &extract::bucket_center, py::arg("bucket"), py::arg("m"));

    py::class_<PyChallenge>(mod, "Challenge")
        .def_property_readonly("n", [](const PyChallenge &c) { return c.ch.n(); })
        .def_property_readonly("b", [](const PyChallenge &c) { return c.ch.b; })
        .def_property_readonly("betas", [](const PyChallenge &c) { return c.ch.betas; })
        .def_property_readonly("fidelity", [](const PyChallenge &c) { return c.ch.fidelity; })
        .def_property_readonly("phase", [](const PyChallenge &c) { return c.ch.phase(); })
        .def_property_readonly("digest", [](const PyChallenge &c) { return to_py(c.ch.public_challenge().digest()); })
        .def("bucket", [](const PyChallenge &c, int m) { return extract::quantize_phase(c.ch.phase(), m); },
             py::arg("m"))
        .def("ldqpe", &ldqpe_bucket, py::arg("m"), py::arg("shots") = 4000, py::arg("exact") = true,
             py::arg("p2") = 0.0, py::arg("seed") = 0);

    mod.def("compile_symmetric", &compile_challenge, py::arg("s0"), py::arg("index"), py::arg("n"),
            py::arg("plant_depth") = 2, py::arg("delta") = 0.1, py::arg("layers") = 4);

    mod.def(
        "encode_transcript",
        [](const py::bytes &vn, const py::bytes &pn, std::uint64_t sid, const std::vector<py::bytes> &digests,
           std::uint32_t m, std::uint32_t k) {
            return to_py(keyring::encode_transcript(make_transcript(vn, pn, sid, digests, m, k)));
        },
        py::arg("v_nonce"), py::arg("p_nonce"), py::arg("schedule_id"), py::arg("digests"), py::arg("m"),
        py::arg("k"));
    mod.def(
        "derive_key",
        [](const std::vector<std::uint64_t> &buckets, int m, const py::bytes &vn, const py::bytes &pn,
           std::uint64_t sid, const std::vector<py::bytes> &digests, int bits) {
            const auto t = make_transcript(vn, pn, sid, digests, static_cast<std::uint32_t>(m),
                                           static_cast<std::uint32_t>(buckets.size()));
            return to_py(keyring::derive_key(buckets, m, t, bits).key);
        },
        py::arg("buckets"), py::arg("m"), py::arg("v_nonce"), py::arg("p_nonce"), py::arg("schedule_id"),
        py::arg("digests"), py::arg("bits") = 256);
    mod.def(
        "confirm_tag",
        [](const py::bytes &key, const std::string &role, const py::bytes &nonce) {
            if (role != "V" && role != "P") throw ValidationError("role must be 'V' or 'P'");
            keyring::SessionKey k;
            k.key = to_cpp(key);
            return to_py(keyring::confirm_tag(k, role == "V" ? keyring::Role::Verifier : keyring::Role::Prover,
                                              to_cpp(nonce)));
        },
        py::arg("key"), py::arg("role"), py::arg("nonce"));

    mod.def(
        "result_frame", [](bool accept) { return to_py(protocol::frame(protocol::encode_message(protocol::Result{accept}))); },
        py::arg("accept"));

    adversary::CostModelParams defaults;
    mod.def("classical_eve_years",
            [defaults](int n) { return adversary::classical_eve_cost(n, defaults) / adversary::kSecondsPerYear; },
            py::arg("n"));
    mod.def("quantum_eve_years",
            [defaults](int n) { return adversary::quantum_eve_cost(n, defaults) / adversary::kSecondsPerYear; },
            py::arg("n"));
    mod.def("honest_classical_seconds", [defaults](int n) { return adversary::honest_classical_cost(n, defaults); },
            py::arg("n"));
    mod.def("memory_cutoffs", &adversary::memory_cutoffs, py::arg("ram_bytes"), py::arg("m"));
    mod.def("bell_budget", &adversary::bell_budget, py::arg("n_s"), py::arg("n"), py::arg("m"), py::arg("k"));
    mod.def("survival_budget", &adversary::survival_budget, py::arg("n_two_qubit"), py::arg("target") = 0.95);
}
