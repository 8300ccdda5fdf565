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


#include "qsa/compile/bundle.hpp"

#include "qsa/core/errors.hpp"

namespace qsa::compile {

nlohmann::json bundle_json(const PublicChallenge &ch, int m, std::uint32_t index) {
    return {{"public", qsim::to_json(ch.circuit)},
            {"meta",
             {{"n", ch.circuit.n},
              {"m", m},
              {"index", index},
              {"digest", to_hex(ch.digest())},
              {"family", family_name(ch.family)},
              {"v_len", ch.v_len}}}};
}

PublicChallenge bundle_from_json(const nlohmann::json &j) {
    try {
        PublicChallenge ch;
        ch.circuit = qsim::circuit_from_json(j.at("public"));
        const auto &meta = j.at("meta");
        ch.family = parse_family(meta.at("family").get<std::string>());
        ch.v_len = meta.value("v_len", std::size_t{0});
        if (meta.contains("digest") && meta.at("digest").get<std::string>() != to_hex(ch.digest())) {
            throw ValidationError("bundle digest does not match its circuit");
        }
        return ch;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed bundle: ") + e.what());
    }
}

nlohmann::json witness_json(const SymmetricChallenge &ch) {
    return {{"family", "symmetric"},
            {"n", ch.n()},
            {"layers", ch.ansatz.layers},
            {"V_params", ch.v_params},
            {"betas", ch.betas},
            {"b", ch.b},
            {"delta_hat", ch.delta_hat()},
            {"delta_target", ch.delta_target}};
}

nlohmann::json witness_json(const AsymmetricChallenge &ch) {
    return {{"family", "asymmetric"},
            {"n", ch.n()},
            {"layers", ch.ansatz.layers},
            {"V_L_params", ch.vl_params},
            {"V_R_params", ch.vr_params},
            {"b_L", ch.b_l},
            {"b_R", ch.b_r},
            {"delta_hat_L", 1.0 - ch.fidelity_l},
            {"delta_hat_R", 1.0 - ch.fidelity_r},
            {"delta_target", ch.delta_target}};
}

nlohmann::json witness_json(const MultipartyChallenge &ch) {
    nlohmann::json j = witness_json(ch.base);
    j["family"] = "multiparty";
    j["labels"] = ch.labels;
    std::vector<double> deltas;
    for (double f : ch.fidelities) deltas.push_back(1.0 - f);
    j["delta_hat_parties"] = deltas;
    return j;
}

SymmetricChallenge symmetric_from_witness(const nlohmann::json &j) {
    try {
        SymmetricChallenge ch;
        ch.ansatz = Ansatz{j.at("n").get<int>(), j.at("layers").get<int>()};
        ch.v_params = j.at("V_params").get<std::vector<double>>();
        ch.betas = j.at("betas").get<std::vector<double>>();
        ch.b = j.at("b").get<std::uint64_t>();
        ch.fidelity = 1.0 - j.at("delta_hat").get<double>();
        ch.delta_target = j.value("delta_target", 0.1);
        if (ch.v_params.size() != ch.ansatz.param_count() || ch.betas.size() != static_cast<std::size_t>(ch.n())) {
            throw ValidationError("witness sizes are inconsistent");
        }
        return ch;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed witness: ") + e.what());
    }
}

}  // namespace qsa::compile
