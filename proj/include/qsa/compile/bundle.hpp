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


#ifndef QSA_COMPILE_BUNDLE_HPP
#define QSA_COMPILE_BUNDLE_HPP

#include <cstdint>

#include <json.hpp>

#include "qsa/compile/challenge.hpp"

namespace qsa::compile {

/// {"public": circuit, "meta": {"n", "m", "index", "digest", "family", "v_len"}}
nlohmann::json bundle_json(const PublicChallenge &ch, int m, std::uint32_t index);
PublicChallenge bundle_from_json(const nlohmann::json &j);

/// Secret side kept apart from the bundle.
nlohmann::json witness_json(const SymmetricChallenge &ch);
nlohmann::json witness_json(const AsymmetricChallenge &ch);
nlohmann::json witness_json(const MultipartyChallenge &ch);
SymmetricChallenge symmetric_from_witness(const nlohmann::json &j);

}  // namespace qsa::compile

#endif
