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


#ifndef QSA_PROTOCOL_MESSAGE_HPP
#define QSA_PROTOCOL_MESSAGE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qsa/core/bytes.hpp"

namespace qsa::protocol {

enum class MsgType : std::uint8_t {
    Hello = 0x01,
    ChallengeSet = 0x02,
    ConfirmReq = 0x03,
    ConfirmResp = 0x04,
    Result = 0x05,
    Error = 0x7F,
};

const char *msg_type_name(MsgType t);

// Field tags inside a message body. Each field is tag(1) || len(4, BE) || value.
namespace field {
inline constexpr std::uint8_t kVersion = 0x01;
inline constexpr std::uint8_t kRole = 0x02;
inline constexpr std::uint8_t kNonce = 0x03;
inline constexpr std::uint8_t kScheduleId = 0x04;
inline constexpr std::uint8_t kM = 0x05;
inline constexpr std::uint8_t kK = 0x06;
inline constexpr std::uint8_t kChallenge = 0x10;
inline constexpr std::uint8_t kTag = 0x20;
inline constexpr std::uint8_t kStatus = 0x30;
inline constexpr std::uint8_t kCode = 0x31;
inline constexpr std::uint8_t kReason = 0x32;
}  // namespace field

struct Hello {
    std::uint32_t version = 1;
    std::uint8_t role = 'V';  // 'V' or 'P'
    Bytes nonce;              // 16 bytes
    std::uint64_t schedule_id = 0;
    std::uint32_t m = 0;
    std::uint32_t k = 0;
    bool operator==(const Hello &) const = default;
};

/// Each entry is a UTF-8 JSON challenge bundle.
struct ChallengeSet {
    std::vector<std::string> bundles;
    bool operator==(const ChallengeSet &) const = default;
};

struct ConfirmReq {
    Bytes tag;
    bool operator==(const ConfirmReq &) const = default;
};

struct ConfirmResp {
    Bytes tag;
    bool operator==(const ConfirmResp &) const = default;
};

struct Result {
    bool accept = false;
    bool operator==(const Result &) const = default;
};

enum class ErrorCode : std::uint32_t {
    Malformed = 1,
    UnexpectedMessage = 2,
    BadParameters = 3,
    ConfirmationFailed = 4,
    Internal = 5,
};

struct Error {
    ErrorCode code = ErrorCode::Internal;
    std::string reason;
    bool operator==(const Error &) const = default;
};

using Message = std::variant<Hello, ChallengeSet, ConfirmReq, ConfirmResp, Result, Error>;

MsgType type_of(const Message &msg);

/// type(1) || body. Throws ValidationError when a fixed-size field has the
/// wrong length.
Bytes encode_message(const Message &msg);

/// Strict inverse of encode_message. Unknown type tags, missing, extra or
/// reordered fields all raise ProtocolError.
Message decode_message(ByteView data);

inline constexpr std::uint32_t kMaxFrame = 16u << 20;

/// len(4, BE) || payload.
Bytes frame(ByteView payload);

}  // namespace qsa::protocol

#endif
