// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/bootstrap/ports.hpp>

#include <chainlens/common/errors.hpp>

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cerrno>
#include <cstring>
#include <thread>
#include <vector>

namespace chainlens::bootstrap {

std::string_view probe_outcome_name(ProbeOutcome o) noexcept
{
    switch (o) {
    case ProbeOutcome::Open: return "open";
    case ProbeOutcome::Filtered: return "filtered";
    case ProbeOutcome::Closed: return "closed";
    }
    return "?";
}

ConnectResult ScriptedProber::connect(const IpAddress& ip, std::uint16_t)
{
    const auto it = script_.find(ip);
    return it == script_.end() ? ConnectResult::TimedOut : it->second;
}

ConnectResult SimulatedProber::connect(const IpAddress& ip, std::uint16_t port)
{
    std::uint64_t x = config_.seed ^ (std::uint64_t{port} << 48);
    for (const std::uint8_t b : ip.bytes()) x = (x ^ b) * 0x100000001b3ULL;
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    x ^= x >> 31;
    const double roll = static_cast<double>(x >> 11) * 0x1.0p-53;
    if (roll < config_.open_rate) return ConnectResult::Accepted;
    if (roll < config_.open_rate + config_.refused_rate) return ConnectResult::Refused;
    return ConnectResult::TimedOut;
}

ConnectResult LiveProber::connect(const IpAddress& ip, std::uint16_t port)
{
    sockaddr_storage addr{};
    socklen_t len = 0;
    if (ip.is_v6()) {
        auto* sin6 = reinterpret_cast<sockaddr_in6*>(&addr);
        sin6->sin6_family = AF_INET6;
        sin6->sin6_port = htons(port);
        std::memcpy(&sin6->sin6_addr, ip.bytes().data(), 16);
        len = sizeof(sockaddr_in6);
    } else {
        auto* sin = reinterpret_cast<sockaddr_in*>(&addr);
        sin->sin_family = AF_INET;
        sin->sin_port = htons(port);
        sin->sin_addr.s_addr = htonl(ip.v4_value());
        len = sizeof(sockaddr_in);
    }
    const int fd = ::socket(addr.ss_family, SOCK_STREAM | SOCK_NONBLOCK | SOCK_CLOEXEC, 0);
    if (fd < 0) throw IoError(std::string("socket: ") + std::strerror(errno));
    ConnectResult result = ConnectResult::TimedOut;
    int rc = ::connect(fd, reinterpret_cast<const sockaddr*>(&addr), len);
    int err = rc == 0 ? 0 : errno;
    if (err == EINPROGRESS) {
        pollfd pfd{fd, POLLOUT, 0};
        rc = ::poll(&pfd, 1, static_cast<int>(timeout_.count()));
        if (rc > 0) {
            socklen_t elen = sizeof(err);
            ::getsockopt(fd, SOL_SOCKET, SO_ERROR, &err, &elen);
        } else {
            err = ETIMEDOUT;
        }
    }
    if (err == 0) {
        result = ConnectResult::Accepted;
    } else if (err == ECONNREFUSED) {
        result = ConnectResult::Refused;
    }
    ::close(fd);
    return result;
}

double PortSummary::percent(std::size_t part) const noexcept
{
    const std::size_t t = total();
    return t == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(t);
}

PortScan probe_ports(Prober& prober, const std::set<IpAddress>& ips, std::uint16_t port, std::size_t concurrency)
{
    if (port == 0) throw Error("port must be in 1-65535");
    if (concurrency == 0) throw Error("probe concurrency must be positive");
    const std::vector<IpAddress> targets(ips.begin(), ips.end());
    std::vector<ConnectResult> results(targets.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < targets.size(); i = next++) results[i] = prober.connect(targets[i], port);
    };
    const std::size_t workers = std::min(concurrency, targets.size());
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    PortScan scan;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        ProbeOutcome o = ProbeOutcome::Filtered;
        switch (results[i]) {
        case ConnectResult::Accepted: o = ProbeOutcome::Open; ++scan.summary.open; break;
        case ConnectResult::Refused: o = ProbeOutcome::Closed; ++scan.summary.closed; break;
        case ConnectResult::TimedOut: ++scan.summary.filtered; break;
        }
        scan.outcomes.emplace(targets[i], o);
    }
    return scan;
}

} // namespace chainlens::bootstrap
