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


#include "qsa/protocol/transport.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "qsa/core/errors.hpp"

namespace qsa::protocol {

void send_message(Transport &t, const Message &msg) { t.write_all(frame(encode_message(msg))); }

Message recv_message(Transport &t) {
    const Bytes header = t.read_exact(4);
    const std::uint32_t len = read_u32_be(header);
    if (len > kMaxFrame) throw ProtocolError("frame length exceeds limit");
    return decode_message(t.read_exact(len));
}

// ---- in-memory ----

std::pair<std::unique_ptr<MemoryTransport>, std::unique_ptr<MemoryTransport>> MemoryTransport::pair(
    std::chrono::milliseconds timeout) {
    auto ab = std::make_shared<Channel>();
    auto ba = std::make_shared<Channel>();
    return {std::unique_ptr<MemoryTransport>(new MemoryTransport(ba, ab, timeout)),
            std::unique_ptr<MemoryTransport>(new MemoryTransport(ab, ba, timeout))};
}

void MemoryTransport::write_all(ByteView data) {
    std::lock_guard lock(out_->mu);
    if (out_->closed) throw TransportError("write on closed pipe");
    out_->buf.insert(out_->buf.end(), data.begin(), data.end());
    out_->cv.notify_all();
}

Bytes MemoryTransport::read_exact(std::size_t count) {
    std::unique_lock lock(in_->mu);
    const bool ready = in_->cv.wait_for(lock, timeout_, [&] { return in_->buf.size() >= count || in_->closed; });
    if (!ready) throw TransportError("read timed out");
    if (in_->buf.size() < count) throw TransportError("peer closed");
    Bytes out(in_->buf.begin(), in_->buf.begin() + static_cast<std::ptrdiff_t>(count));
    in_->buf.erase(in_->buf.begin(), in_->buf.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
}

void MemoryTransport::close() {
    for (auto *ch : {in_.get(), out_.get()}) {
        std::lock_guard lock(ch->mu);
        ch->closed = true;
        ch->cv.notify_all();
    }
}

// ---- TCP ----

namespace {

[[noreturn]] void sys_fail(const char *what) { throw TransportError(std::string(what) + ": " + std::strerror(errno)); }

}  // namespace

TcpTransport::~TcpTransport() { close(); }

std::unique_ptr<TcpTransport> TcpTransport::connect(const std::string &host, std::uint16_t port) {
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo *res = nullptr;
    const std::string service = std::to_string(port);
    if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res); rc != 0) {
        throw TransportError(std::string("resolve: ") + ::gai_strerror(rc));
    }
    int fd = -1;
    for (addrinfo *ai = res; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(res);
    if (fd < 0) sys_fail("connect");
    const int one = 1;
    ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
    return std::make_unique<TcpTransport>(fd);
}

void TcpTransport::write_all(ByteView data) {
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = ::send(fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
        if (n < 0) {
            if (errno == EINTR) continue;
            sys_fail("send");
        }
        sent += static_cast<std::size_t>(n);
    }
}

Bytes TcpTransport::read_exact(std::size_t count) {
    Bytes out(count);
    std::size_t got = 0;
    while (got < count) {
        const ssize_t n = ::recv(fd_, out.data() + got, count - got, 0);
        if (n == 0) throw TransportError("peer closed");
        if (n < 0) {
            if (errno == EINTR) continue;
            sys_fail("recv");
        }
        got += static_cast<std::size_t>(n);
    }
    return out;
}

void TcpTransport::close() {
    if (fd_ >= 0) {
        ::shutdown(fd_, SHUT_RDWR);
        ::close(fd_);
        fd_ = -1;
    }
}

TcpListener::TcpListener(const std::string &host, std::uint16_t port) {
    fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd_ < 0) sys_fail("socket");
    const int one = 1;
    ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof one);
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(port);
    if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
        ::close(fd_);
        throw ValidationError("listener host must be an IPv4 address");
    }
    if (::bind(fd_, reinterpret_cast<sockaddr *>(&addr), sizeof addr) != 0 || ::listen(fd_, 16) != 0) {
        const int saved = errno;
        ::close(fd_);
        errno = saved;
        sys_fail("bind/listen");
    }
    socklen_t len = sizeof addr;
    ::getsockname(fd_, reinterpret_cast<sockaddr *>(&addr), &len);
    port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
    if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<TcpTransport> TcpListener::accept() {
    for (;;) {
        const int fd = ::accept(fd_, nullptr, nullptr);
        if (fd >= 0) {
            const int one = 1;
            ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof one);
            return std::make_unique<TcpTransport>(fd);
        }
        if (errno != EINTR) sys_fail("accept");
    }
}

}  // namespace qsa::protocol
