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


#ifndef QSA_PROTOCOL_TRANSPORT_HPP
#define QSA_PROTOCOL_TRANSPORT_HPP

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsa/core/bytes.hpp"
#include "qsa/protocol/message.hpp"

namespace qsa::protocol {

/// Reliable ordered byte stream. Failures raise TransportError.
class Transport {
  public:
    virtual ~Transport() = default;
    virtual void write_all(ByteView data) = 0;
    virtual Bytes read_exact(std::size_t count) = 0;
    virtual void close() = 0;
};

struct TransportError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void send_message(Transport &t, const Message &msg);
Message recv_message(Transport &t);

/// In-process pipe. Reads block until data arrives, the peer closes, or the
/// timeout elapses.
class MemoryTransport : public Transport {
  public:
    static std::pair<std::unique_ptr<MemoryTransport>, std::unique_ptr<MemoryTransport>> pair(
        std::chrono::milliseconds timeout = std::chrono::seconds(30));

    void write_all(ByteView data) override;
    Bytes read_exact(std::size_t count) override;
    void close() override;

  private:
    struct Channel {
        std::mutex mu;
        std::condition_variable cv;
        std::deque<std::uint8_t> buf;
        bool closed = false;
    };
    MemoryTransport(std::shared_ptr<Channel> in, std::shared_ptr<Channel> out, std::chrono::milliseconds timeout)
        : in_(std::move(in)), out_(std::move(out)), timeout_(timeout) {}

    std::shared_ptr<Channel> in_;
    std::shared_ptr<Channel> out_;
    std::chrono::milliseconds timeout_;
};

class TcpTransport : public Transport {
  public:
    explicit TcpTransport(int fd) : fd_(fd) {}
    ~TcpTransport() override;
    TcpTransport(const TcpTransport &) = delete;
    TcpTransport &operator=(const TcpTransport &) = delete;

    static std::unique_ptr<TcpTransport> connect(const std::string &host, std::uint16_t port);

    void write_all(ByteView data) override;
    Bytes read_exact(std::size_t count) override;
    void close() override;

  private:
    int fd_;
};

class TcpListener {
  public:
    /// Port 0 picks an ephemeral port; see port().
    TcpListener(const std::string &host, std::uint16_t port);
    ~TcpListener();
    TcpListener(const TcpListener &) = delete;
    TcpListener &operator=(const TcpListener &) = delete;

    std::uint16_t port() const { return port_; }
    std::unique_ptr<TcpTransport> accept();

  private:
    int fd_ = -1;
    std::uint16_t port_ = 0;
};

}  // namespace qsa::protocol

#endif
