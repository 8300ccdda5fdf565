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


#include "qsa/protocol/message.hpp"

#include <utility>

#include "qsa/core/errors.hpp"

namespace qsa::protocol {

namespace {

void put(Bytes &out, std::uint8_t tag, ByteView value) {
    out.push_back(tag);
    append_u32_be(out, static_cast<std::uint32_t>(value.size()));
    append(out, value);
}

void put_u32(Bytes &out, std::uint8_t tag, std::uint32_t v) {
    Bytes b;
    append_u32_be(b, v);
    put(out, tag, b);
}

void put_u64(Bytes &out, std::uint8_t tag, std::uint64_t v) {
    Bytes b;
    append_u64_be(b, v);
    put(out, tag, b);
}

void need_tag(const Bytes &tag) {
    if (tag.size() != 16) throw ValidationError("confirmation tag must be 16 bytes");
}

class Reader {
  public:
    explicit Reader(ByteView data) : data_(data) {}

    bool done() const { return pos_ == data_.size(); }

    bool peek(std::uint8_t tag) const { return !done() && data_[pos_] == tag; }

    ByteView take(std::uint8_t tag) {
        if (data_.size() - pos_ < 5) throw ProtocolError("truncated field header");
        if (data_[pos_] != tag) throw ProtocolError("unexpected field tag");
        const std::uint32_t len = read_u32_be(data_.subspan(pos_ + 1, 4));
        pos_ += 5;
        if (data_.size() - pos_ < len) throw ProtocolError("field length exceeds body");
        ByteView v = data_.subspan(pos_, len);
        pos_ += len;
        return v;
    }

    std::uint32_t take_u32(std::uint8_t tag) {
        auto v = take(tag);
        if (v.size() != 4) throw ProtocolError("integer field must be 4 bytes");
        return read_u32_be(v);
    }

    std::uint64_t take_u64(std::uint8_t tag) {
        auto v = take(tag);
        if (v.size() != 8) throw ProtocolError("integer field must be 8 bytes");
        return read_u64_be(v);
    }

    Bytes take_fixed(std::uint8_t tag, std::size_t size) {
        auto v = take(tag);
        if (v.size() != size) throw ProtocolError("fixed-size field has wrong length");
        return Bytes(v.begin(), v.end());
    }

    void finish() const {
        if (!done()) throw ProtocolError("trailing bytes after last field");
    }

  private:
    ByteView data_;
    std::size_t pos_ = 0;
};

struct Encoder {
    Bytes &out;
    void operator()(const Hello &h) const {
        if (h.nonce.size() != 16) throw ValidationError("HELLO nonce must be 16 bytes");
        if (h.role != 'V' && h.role != 'P') throw ValidationError("HELLO role must be 'V' or 'P'");
        put_u32(out, field::kVersion, h.version);
        put(out, field::kRole, ByteView(&h.role, 1));
        put(out, field::kNonce, h.nonce);
        put_u64(out, field::kScheduleId, h.schedule_id);
        put_u32(out, field::kM, h.m);
        put_u32(out, field::kK, h.k);
    }
    void operator()(const ChallengeSet &c) const {
        for (const auto &b : c.bundles) {
            put(out, field::kChallenge, ByteView(reinterpret_cast<const std::uint8_t *>(b.data()), b.size()));
        }
    }
    void operator()(const ConfirmReq &c) const {
        need_tag(c.tag);
        put(out, field::kTag, c.tag);
    }
    void operator()(const ConfirmResp &c) const {
        need_tag(c.tag);
        put(out, field::kTag, c.tag);
    }
    void operator()(const Result &r) const {
        const std::uint8_t s = r.accept ? 1 : 0;
        put(out, field::kStatus, ByteView(&s, 1));
    }
    void operator()(const Error &e) const {
        put_u32(out, field::kCode, static_cast<std::uint32_t>(e.code));
        put(out, field::kReason, ByteView(reinterpret_cast<const std::uint8_t *>(e.reason.data()), e.reason.size()));
    }
};

}  // namespace

const char *msg_type_name(MsgType t) {
    switch (t) {
    case MsgType::Hello: return "HELLO";
    case MsgType::ChallengeSet: return "CHALLENGE_SET";
    case MsgType::ConfirmReq: return "CONFIRM_REQ";
    case MsgType::ConfirmResp: return "CONFIRM_RESP";
    case MsgType::Result: return "RESULT";
    case MsgType::Error: return "ERROR";
    }
    return "?";
}

MsgType type_of(const Message &msg) {
    static constexpr MsgType kTypes[] = {MsgType::Hello,       MsgType::ChallengeSet, MsgType::ConfirmReq,
                                         MsgType::ConfirmResp, MsgType::Result,       MsgType::Error};
    return kTypes[msg.index()];
}

Bytes encode_message(const Message &msg) {
    Bytes out{static_cast<std::uint8_t>(type_of(msg))};
    std::visit(Encoder{out}, msg);
    return out;
}

Message decode_message(ByteView data) {
    if (data.empty()) throw ProtocolError("empty message");
    Reader r(data.subspan(1));
    switch (data[0]) {
    case static_cast<std::uint8_t>(MsgType::Hello): {
        Hello h;
        h.version = r.take_u32(field::kVersion);
        h.role = r.take_fixed(field::kRole, 1)[0];
        if (h.role != 'V' && h.role != 'P') throw ProtocolError("unknown role");
        h.nonce = r.take_fixed(field::kNonce, 16);
        h.schedule_id = r.take_u64(field::kScheduleId);
        h.m = r.take_u32(field::kM);
        h.k = r.take_u32(field::kK);
        r.finish();
        return h;
    }
    case static_cast<std::uint8_t>(MsgType::ChallengeSet): {
        ChallengeSet c;
        while (r.peek(field::kChallenge)) {
            auto v = r.take(field::kChallenge);
            c.bundles.emplace_back(v.begin(), v.end());
        }
        r.finish();
        return c;
    }
    case static_cast<std::uint8_t>(MsgType::ConfirmReq): {
        ConfirmReq c{r.take_fixed(field::kTag, 16)};
        r.finish();
        return c;
    }
    case static_cast<std::uint8_t>(MsgType::ConfirmResp): {
        ConfirmResp c{r.take_fixed(field::kTag, 16)};
        r.finish();
        return c;
    }
    case static_cast<std::uint8_t>(MsgType::Result): {
        const std::uint8_t s = r.take_fixed(field::kStatus, 1)[0];
        if (s > 1) throw ProtocolError("result status must be 0 or 1");
        r.finish();
        return Result{s == 1};
    }
    case static_cast<std::uint8_t>(MsgType::Error): {
        Error e;
        e.code = static_cast<ErrorCode>(r.take_u32(field::kCode));
        auto v = r.take(field::kReason);
        e.reason.assign(v.begin(), v.end());
        r.finish();
        return e;
    }
    default:
        throw ProtocolError("unknown message type");
    }
}

Bytes frame(ByteView payload) {
    if (payload.size() > kMaxFrame) throw ValidationError("message exceeds maximum frame size");
    Bytes out;
    out.reserve(payload.size() + 4);
    append_u32_be(out, static_cast<std::uint32_t>(payload.size()));
    append(out, payload);
    return out;
}

}  // namespace qsa::protocol
