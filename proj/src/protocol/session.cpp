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


#include "qsa/protocol/session.hpp"

#include <exception>

#include "qsa/compile/bundle.hpp"
#include "qsa/compile/plant.hpp"
#include "qsa/core/errors.hpp"
#include "qsa/extract/features.hpp"
#include "qsa/keyring/transcript.hpp"

namespace qsa::protocol {

namespace {

constexpr std::uint32_t kVersion = 1;

/// A session failure that should be reported to the peer before closing.
struct Abort {
    ErrorCode code;
    std::string reason;
};

class Session {
  public:
    Session(Transport &conn, const char *role) : conn_(conn), role_(role) {}

    void log(const std::string &event, nlohmann::json extra = nlohmann::json::object()) {
        extra["seq"] = out.log.size();
        extra["role"] = role_;
        extra["event"] = event;
        extra["phase"] = phase_name(out.phase);
        out.log.push_back(std::move(extra));
    }

    void send(const Message &msg) {
        send_message(conn_, msg);
        log("send", {{"type", msg_type_name(type_of(msg))}});
    }

    template <class T>
    T expect() {
        Message msg = recv_message(conn_);
        log("recv", {{"type", msg_type_name(type_of(msg))}});
        if (auto *e = std::get_if<Error>(&msg)) {
            throw std::runtime_error("peer error " + std::to_string(static_cast<std::uint32_t>(e->code)) + ": " +
                                     e->reason);
        }
        if (auto *t = std::get_if<T>(&msg)) return std::move(*t);
        throw Abort{ErrorCode::UnexpectedMessage, std::string("unexpected ") + msg_type_name(type_of(msg))};
    }

    void reject(const std::string &reason) {
        out.accept = false;
        out.phase = Phase::Rejected;
        out.reason = reason;
        log("reject", {{"reason", reason}});
    }

    /// Runs body; every failure path ends in Rejected.
    template <class F>
    SessionOutcome run(F &&body) {
        try {
            body();
        } catch (const Abort &a) {
            try {
                send(Error{a.code, a.reason});
            } catch (const std::exception &) {
            }
            reject(a.reason);
        } catch (const ProtocolError &e) {
            try {
                send(Error{ErrorCode::Malformed, e.what()});
            } catch (const std::exception &) {
            }
            reject(std::string("malformed: ") + e.what());
        } catch (const std::exception &e) {
            reject(e.what());
        }
        conn_.close();
        return std::move(out);
    }

    SessionOutcome out;

  private:
    Transport &conn_;
    const char *role_;
};

Bytes confirm_nonce(const Bytes &v, const Bytes &p) {
    Bytes n = v;
    append(n, p);
    return n;
}

}  // namespace

const char *phase_name(Phase p) {
    switch (p) {
    case Phase::Init: return "init";
    case Phase::Challenged: return "challenged";
    case Phase::Confirmed: return "confirmed";
    case Phase::Accepted: return "accepted";
    case Phase::Rejected: return "rejected";
    }
    return "?";
}

std::string SessionOutcome::log_lines() const {
    std::string s;
    for (const auto &j : log) s += j.dump() + "\n";
    return s;
}

std::vector<std::uint64_t> verifier_buckets(const std::vector<Witness> &witnesses, int m) {
    std::vector<std::uint64_t> out;
    out.reserve(witnesses.size());
    for (const auto &w : witnesses) out.push_back(extract::quantize_phase(w.challenge.phase(), m));
    return out;
}

SessionOutcome verifier_session(Transport &conn, const VerifierConfig &config, Stream &rng) {
    Session s(conn, "verifier");
    return s.run([&] {
        if (config.witnesses.empty()) throw Abort{ErrorCode::Internal, "verifier has no challenges"};
        const auto k = static_cast<std::uint32_t>(config.witnesses.size());
        const auto m = static_cast<std::uint32_t>(config.m);
        Hello hv{kVersion, 'V', rng.bytes(keyring::kNonceBytes), config.schedule_id, m, k};
        s.send(hv);

        const Hello hp = s.expect<Hello>();
        if (hp.role != 'P' || hp.version != kVersion || hp.schedule_id != hv.schedule_id || hp.m != m || hp.k != k) {
            throw Abort{ErrorCode::BadParameters, "prover HELLO does not match"};
        }

        keyring::Transcript t{kVersion, hv.nonce, hp.nonce, config.schedule_id, {}, m, k};
        ChallengeSet set;
        for (const auto &w : config.witnesses) {
            const auto pub = w.challenge.public_challenge();
            t.digests.push_back(pub.digest());
            set.bundles.push_back(compile::bundle_json(pub, config.m, w.index).dump());
        }
        s.send(set);
        s.out.phase = Phase::Challenged;

        const auto key = keyring::derive_key(verifier_buckets(config.witnesses, config.m), config.m, t, config.key_bits);
        const Bytes nonce = confirm_nonce(hv.nonce, hp.nonce);
        s.send(ConfirmReq{keyring::confirm_tag(key, keyring::Role::Verifier, nonce)});

        keyring::ConfirmationGate gate(config.max_attempts);
        const ConfirmResp resp = s.expect<ConfirmResp>();
        const auto verdict = gate.check(key, keyring::Role::Prover, nonce, resp.tag);
        s.out.attempts = verdict.attempts;
        if (!verdict.accept) {
            s.send(Result{false});
            s.reject(verdict.locked_out ? "attempt limit reached" : "prover confirmation tag mismatch");
            return;
        }
        s.out.phase = Phase::Confirmed;
        s.log("confirmed");
        s.send(Result{true});
        s.out.accept = true;
        s.out.phase = Phase::Accepted;
        s.out.key = key;
        s.log("accept");
    });
}

SessionOutcome prover_session(Transport &conn, const ProverConfig &config, Stream &rng) {
    Session s(conn, "prover");
    return s.run([&] {
        const Hello hv = s.expect<Hello>();
        if (hv.role != 'V' || hv.version != kVersion || hv.m == 0 || hv.m > config.max_m || hv.k == 0 ||
            hv.k > config.max_k) {
            throw Abort{ErrorCode::BadParameters, "unsupported session parameters"};
        }
        Hello hp{kVersion, 'P', rng.bytes(keyring::kNonceBytes), hv.schedule_id, hv.m, hv.k};
        s.send(hp);

        const ChallengeSet set = s.expect<ChallengeSet>();
        if (set.bundles.size() != hv.k) throw Abort{ErrorCode::BadParameters, "challenge count does not match k"};
        const int m = static_cast<int>(hv.m);
        keyring::Transcript t{kVersion, hv.nonce, hp.nonce, hv.schedule_id, {}, hv.m, hv.k};
        std::vector<compile::PublicChallenge> challenges;
        std::vector<qsim::Circuit> plant_circuits;
        std::vector<qsim::StateVector> plants;
        for (const auto &text : set.bundles) {
            const auto j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded()) throw Abort{ErrorCode::Malformed, "challenge bundle is not JSON"};
            compile::PublicChallenge pub;
            std::uint32_t index = 0;
            try {
                pub = compile::bundle_from_json(j);
                index = j.at("meta").at("index").get<std::uint32_t>();
                if (j.at("meta").at("m").get<int>() != m) throw ValidationError("bundle m differs from HELLO");
            } catch (const std::exception &e) {
                throw Abort{ErrorCode::Malformed, e.what()};
            }
            const auto sigma = compile::derive_plant_seed(config.s0, index);
            plant_circuits.push_back(compile::seed_to_plant_circuit(sigma, pub.circuit.n, config.plant_depth));
            plants.push_back(qsim::apply_circuit(qsim::StateVector(pub.circuit.n), plant_circuits.back()));
            t.digests.push_back(pub.digest());
            challenges.push_back(std::move(pub));
        }
        s.out.phase = Phase::Challenged;
        Stream eval_rng = rng.child("eval");
        const auto theta =
            extract::evaluate_schedule(challenges, plants, config.regime, m, config.eval, eval_rng, &plant_circuits);
        s.log("evaluated", {{"regime", extract::regime_name(config.regime)}, {"low_signal", theta.any_low_signal()}});
        const auto key = keyring::derive_key(theta, t, config.key_bits);
        const Bytes nonce = confirm_nonce(hv.nonce, hp.nonce);

        const ConfirmReq req = s.expect<ConfirmReq>();
        keyring::ConfirmationGate gate(config.max_attempts);
        const auto verdict = gate.check(key, keyring::Role::Verifier, nonce, req.tag);
        s.out.attempts = verdict.attempts;
        if (!verdict.accept && config.check_verifier) {
            throw Abort{ErrorCode::ConfirmationFailed, "verifier confirmation tag mismatch"};
        }
        s.send(ConfirmResp{keyring::confirm_tag(key, keyring::Role::Prover, nonce)});

        const Result result = s.expect<Result>();
        if (!result.accept) {
            s.reject("verifier rejected");
            return;
        }
        if (!verdict.accept) {
            s.reject("verifier confirmation tag mismatch");
            return;
        }
        s.out.phase = Phase::Accepted;
        s.out.accept = true;
        s.out.key = key;
        s.log("accept");
    });
}

}  // namespace qsa::protocol
