// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/live_transport.hpp>

#include <chainlens/common/errors.hpp>

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <array>
#include <cerrno>
#include <cstring>

namespace chainlens::crawler {

namespace {

constexpr std::uint64_t kExpirySeconds = 20;

} // namespace

LiveUdpTransport::LiveUdpTransport(LiveTransportConfig config)
    : config_(config), key_(config.key ? *config.key : secp256k1::generate_private_key()), self_(discv4::node_id_of(key_))
{
    fd_ = ::socket(AF_INET, SOCK_DGRAM | SOCK_CLOEXEC, 0);
    if (fd_ < 0) throw IoError(std::string("udp socket: ") + std::strerror(errno));
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(config_.bind_port);
    addr.sin_addr.s_addr = htonl(INADDR_ANY);
    if (::bind(fd_, reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
        const int err = errno;
        ::close(fd_);
        throw IoError(std::string("udp bind: ") + std::strerror(err));
    }
    socklen_t len = sizeof(addr);
    ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
    local_port_ = ntohs(addr.sin_port);
    receiver_ = std::jthread([this](std::stop_token stop) { receive_loop(stop); });
}

LiveUdpTransport::~LiveUdpTransport()
{
    receiver_.request_stop();
    if (receiver_.joinable()) receiver_.join();
    ::close(fd_);
}

std::uint64_t LiveUdpTransport::expiration()
{
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::seconds>(now).count()) + kExpirySeconds;
}

bool LiveUdpTransport::send(const PeerInfo& to, discv4::PacketType type, const Bytes& payload, crypto::Hash256* hash)
{
    if (to.ip.is_v6()) return false;
    const discv4::Encoded enc = discv4::encode_packet(key_, type, payload);
    if (hash) *hash = enc.hash;
    sockaddr_in addr{};
    addr.sin_family = AF_INET;
    addr.sin_port = htons(to.port);
    addr.sin_addr.s_addr = htonl(to.ip.v4_value());
    const auto n = ::sendto(fd_, enc.packet.data(), enc.packet.size(), 0, reinterpret_cast<const sockaddr*>(&addr),
                            sizeof(addr));
    return n == static_cast<ssize_t>(enc.packet.size());
}

std::shared_ptr<std::mutex> LiveUdpTransport::peer_lock(const NodeId& id)
{
    const std::lock_guard lock(mutex_);
    auto& slot = peer_locks_[id];
    if (!slot) slot = std::make_shared<std::mutex>();
    return slot;
}

PingOutcome LiveUdpTransport::ping_pong(const PeerInfo& peer)
{
    if (peer.ip.is_v6()) return PingOutcome{false, "ipv6 unsupported"};
    discv4::Ping ping;
    ping.to = discv4::Endpoint{peer.ip, peer.port, peer.port};
    ping.from = discv4::Endpoint{IpAddress{}, local_port_, 0};
    ping.expiration = expiration();

    crypto::Hash256 hash{};
    std::unique_lock lock(mutex_);
    if (!send(peer, discv4::PacketType::Ping, discv4::encode_payload(ping), &hash)) {
        return PingOutcome{false, "send failed"};
    }
    awaiting_pong_[hash] = peer.node_id;
    const bool ok = cv_.wait_for(lock, config_.ping_timeout, [&] { return ponged_.contains(hash); });
    awaiting_pong_.erase(hash);
    ponged_.erase(hash);
    if (!ok) return PingOutcome{false, "timeout"};
    cv_.wait_for(lock, config_.bond_wait, [&] { return pinged_us_.contains(peer.node_id); });
    return PingOutcome{true, {}};
}

FindNodeOutcome LiveUdpTransport::find_node(const PeerInfo& peer, const NodeId& target)
{
    if (peer.ip.is_v6()) return FindNodeOutcome{false, "ipv6 unsupported", {}};
    // NEIGHBORS does not echo the target, so one query per peer at a time.
    const auto serial = peer_lock(peer.node_id);
    const std::lock_guard peer_guard(*serial);

    discv4::FindNode query{target, expiration()};
    std::unique_lock lock(mutex_);
    collectors_[peer.node_id] = NeighborsCollector{};
    if (!send(peer, discv4::PacketType::FindNode, discv4::encode_payload(query))) {
        collectors_.erase(peer.node_id);
        return FindNodeOutcome{false, "send failed", {}};
    }
    const auto deadline = std::chrono::steady_clock::now() + config_.query_timeout;
    for (;;) {
        const NeighborsCollector& c = collectors_[peer.node_id];
        if (c.peers.size() >= config_.neighbor_k) break;
        auto until = deadline;
        if (c.packets > 0) until = std::min(until, c.last_packet + config_.neighbors_grace);
        if (std::chrono::steady_clock::now() >= until) break;
        cv_.wait_until(lock, until);
    }
    NeighborsCollector done = std::move(collectors_[peer.node_id]);
    collectors_.erase(peer.node_id);
    if (done.packets == 0) return FindNodeOutcome{false, "timeout", {}};
    if (done.peers.size() > config_.neighbor_k) done.peers.resize(config_.neighbor_k);
    return FindNodeOutcome{true, {}, std::move(done.peers)};
}

void LiveUdpTransport::receive_loop(std::stop_token stop)
{
    std::array<std::uint8_t, 2048> buf{};
    while (!stop.stop_requested()) {
        pollfd pfd{fd_, POLLIN, 0};
        if (::poll(&pfd, 1, 100) <= 0) continue;
        sockaddr_in from{};
        socklen_t len = sizeof(from);
        const auto n = ::recvfrom(fd_, buf.data(), buf.size(), 0, reinterpret_cast<sockaddr*>(&from), &len);
        if (n <= 0 || static_cast<std::size_t>(n) > discv4::kMaxPacketSize) continue;
        const auto packet = discv4::decode_packet(std::span<const std::uint8_t>(buf.data(), static_cast<std::size_t>(n)));
        if (!packet) continue;
        try {
            handle(*packet, IpAddress::v4(ntohl(from.sin_addr.s_addr)), ntohs(from.sin_port));
        } catch (const rlp::DecodeError&) {
            // Malformed payloads from the open network are dropped.
        }
    }
}

void LiveUdpTransport::handle(const discv4::Decoded& packet, const IpAddress& from_ip, std::uint16_t from_port)
{
    const auto now = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count());
    switch (static_cast<discv4::PacketType>(packet.type)) {
    case discv4::PacketType::Ping: {
        const discv4::Ping ping = discv4::parse_ping(packet.payload);
        if (ping.expiration < now) return;
        discv4::Pong pong{discv4::Endpoint{from_ip, from_port, ping.from.tcp}, packet.hash, expiration()};
        send(PeerInfo{packet.sender, from_ip, from_port}, discv4::PacketType::Pong, discv4::encode_payload(pong));
        const std::lock_guard lock(mutex_);
        pinged_us_.insert(packet.sender);
        cv_.notify_all();
        return;
    }
    case discv4::PacketType::Pong: {
        const discv4::Pong pong = discv4::parse_pong(packet.payload);
        if (pong.expiration < now) return;
        const std::lock_guard lock(mutex_);
        const auto it = awaiting_pong_.find(pong.ping_hash);
        if (it == awaiting_pong_.end() || it->second != packet.sender) return;
        ponged_.insert(pong.ping_hash);
        cv_.notify_all();
        return;
    }
    case discv4::PacketType::Neighbors: {
        const discv4::Neighbors nb = discv4::parse_neighbors(packet.payload);
        if (nb.expiration < now) return;
        const std::lock_guard lock(mutex_);
        const auto it = collectors_.find(packet.sender);
        if (it == collectors_.end()) return;
        for (const PeerInfo& p : nb.nodes) {
            if (p.port != 0) it->second.peers.push_back(p);
        }
        ++it->second.packets;
        it->second.last_packet = std::chrono::steady_clock::now();
        cv_.notify_all();
        return;
    }
    case discv4::PacketType::FindNode:
        // We keep no routing table to share.
        return;
    }
}

} // namespace chainlens::crawler
