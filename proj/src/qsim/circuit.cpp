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


#include "qsa/qsim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qsa/core/errors.hpp"

namespace qsa::qsim {

namespace {

constexpr std::array<std::pair<GateKind, const char *>, 12> kNames{{
    {GateKind::H, "H"},
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "Sdg"},
    {GateKind::Rx, "Rx"},
    {GateKind::Ry, "Ry"},
    {GateKind::Rz, "Rz"},
    {GateKind::Rxx, "Rxx"},
    {GateKind::CX, "CX"},
    {GateKind::CZ, "CZ"},
}};

}  // namespace

int base_arity(GateKind kind) {
    switch (kind) {
        case GateKind::Rxx:
        case GateKind::CX:
        case GateKind::CZ:
            return 2;
        default:
            return 1;
    }
}

int param_count(GateKind kind) {
    switch (kind) {
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Rxx:
            return 1;
        default:
            return 0;
    }
}

std::string kind_name(GateKind kind) {
    for (auto [k, name] : kNames) {
        if (k == kind) return name;
    }
    return "?";
}

GateKind parse_kind(const std::string &name) {
    for (auto [k, n] : kNames) {
        if (name == n) return k;
    }
    throw ValidationError("unknown gate kind: " + name);
}

std::array<cplx, 16> Gate::base_matrix() const {
    using namespace std::complex_literals;
    std::array<cplx, 16> m{};
    const double c = std::cos(param / 2.0);
    const double s = std::sin(param / 2.0);
    const double r = 1.0 / std::sqrt(2.0);
    // 2x2 kinds are stored row-major in m[0], m[1], m[2], m[3].
    switch (kind) {
        case GateKind::H:
            m = {r, r, r, -r};
            break;
        case GateKind::X:
            m = {0.0, 1.0, 1.0, 0.0};
            break;
        case GateKind::Y:
            m = {0.0, -1i, 1i, 0.0};
            break;
        case GateKind::Z:
            m = {1.0, 0.0, 0.0, -1.0};
            break;
        case GateKind::S:
            m = {1.0, 0.0, 0.0, 1i};
            break;
        case GateKind::Sdg:
            m = {1.0, 0.0, 0.0, -1i};
            break;
        case GateKind::Rx:
            m = {c, -1i * s, -1i * s, c};
            break;
        case GateKind::Ry:
            m = {c, -s, s, c};
            break;
        case GateKind::Rz:
            m = {std::polar(1.0, -param / 2.0), 0.0, 0.0, std::polar(1.0, param / 2.0)};
            break;
        case GateKind::Rxx:
            // 4x4 row-major over |b a>, a = first operand (low bit).
            for (int i = 0; i < 4; ++i) {
                m[i * 4 + i] = c;
                m[i * 4 + (3 - i)] = -1i * s;
            }
            break;
        case GateKind::CX:
            m = {1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
            break;
        case GateKind::CZ:
            m = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1};
            break;
    }
    return m;
}

bool Gate::is_diagonal() const {
    switch (kind) {
        case GateKind::Z:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::Rz:
        case GateKind::CZ:
            return true;
        default:
            return false;
    }
}

Gate Gate::inverse() const {
    Gate g = *this;
    switch (kind) {
        case GateKind::S:
            g.kind = GateKind::Sdg;
            break;
        case GateKind::Sdg:
            g.kind = GateKind::S;
            break;
        case GateKind::Rx:
        case GateKind::Ry:
        case GateKind::Rz:
        case GateKind::Rxx:
            g.param = -param;
            break;
        default:
            break;
    }
    return g;
}

Circuit &Circuit::add(Gate g) {
    gates.push_back(std::move(g));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n != n) throw DimensionError("append: qubit counts differ");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(n);
    out.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.gates.push_back(it->inverse());
    }
    return out;
}

Circuit Circuit::remap(const std::vector<int> &map, int new_n) const {
    if (static_cast<int>(map.size()) != n) throw DimensionError("remap: map size differs from n");
    Circuit out(new_n);
    out.gates = gates;
    for (auto &g : out.gates) {
        for (int &t : g.targets) t = map[static_cast<std::size_t>(t)];
    }
    return out;
}

void Circuit::validate() const {
    if (n < 0) throw ValidationError("negative qubit count");
    for (const auto &g : gates) {
        if (g.width() != g.controls + base_arity(g.kind)) {
            throw ValidationError("gate " + kind_name(g.kind) + " has wrong operand count");
        }
        std::set<int> seen;
        for (int t : g.targets) {
            if (t < 0 || t >= n) throw ValidationError("gate target out of range");
            if (!seen.insert(t).second) throw ValidationError("gate targets repeat a qubit");
        }
    }
}

std::size_t Circuit::multi_qubit_count() const {
    return static_cast<std::size_t>(std::count_if(gates.begin(), gates.end(), [](const Gate &g) { return g.width() > 1; }));
}

Circuit controlled(const Circuit &c) {
    Circuit out(c.n + 1);
    out.gates.reserve(c.gates.size());
    for (const auto &g : c.gates) {
        Gate h = g;
        h.controls = static_cast<std::uint8_t>(g.controls + 1);
        h.targets.clear();
        h.targets.push_back(0);
        for (int t : g.targets) h.targets.push_back(t + 1);
        out.gates.push_back(std::move(h));
    }
    return out;
}

nlohmann::json to_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const auto &g : c.gates) {
        std::string kind;
        for (int i = 0; i < g.controls; ++i) kind += "C-";
        kind += kind_name(g.kind);
        nlohmann::json params = nlohmann::json::array();
        if (param_count(g.kind) == 1) params.push_back(g.param);
        gates.push_back({{"kind", kind}, {"targets", g.targets}, {"params", params}});
    }
    return {{"n", c.n}, {"gates", gates}};
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(j.at("n").get<int>());
        for (const auto &jg : j.at("gates")) {
            std::string kind = jg.at("kind").get<std::string>();
            Gate g;
            while (kind.starts_with("C-")) {
                ++g.controls;
                kind.erase(0, 2);
            }
            g.kind = parse_kind(kind);
            g.targets = jg.at("targets").get<std::vector<int>>();
            auto params = jg.value("params", std::vector<double>{});
            if (static_cast<int>(params.size()) != param_count(g.kind)) {
                throw ValidationError("gate " + kind + " has wrong parameter count");
            }
            if (!params.empty()) g.param = params[0];
            c.gates.push_back(std::move(g));
        }
        c.validate();
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed circuit JSON: ") + e.what());
    }
}

std::string canonical_bytes(const Circuit &c) { return to_json(c).dump(); }

}  // namespace qsa::qsim
