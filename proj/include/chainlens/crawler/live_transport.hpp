// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_LIVE_TRANSPORT_HPP
#define CHAINLENS_CRAWLER_LIVE_TRANSPORT_HPP

#include <chainlens/crawler/discv4.hpp>
#include <chainlens/crawler/transport.hpp>

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

namespace chainlens::crawler {

struct LiveTransportConfig {
    /// 0 binds an ephemeral port.
    std::uint16_t bind_port{0};
    /// Fresh random key when absent.
    std::optional<secp256k1::PrivateKey> key;
    std::chrono::milliseconds ping_timeout{2000};
    std::chrono::milliseconds query_timeout{2000};
    /// How long to wait for the peer's own PING after its PONG; remote
    /// nodes answer FIND_NODE only once they have bonded with us.
    std::chrono::milliseconds bond_wait{500};
    /// Quiet period after the first NEIGHBORS packet before a partial
    /// answer is accepted.
    std::chrono::milliseconds neighbors_grace{300};
    std::size_t neighbor_k{16};
};

/// Node discovery v4 over UDP/IPv4. Answers incoming PINGs so remote nodes
/// accept our FIND_NODE queries. IPv6 peers fail with a recorded reason.
class LiveUdpTransport : public DiscoveryTransport
{
public:
    explicit LiveUdpTransport(LiveTransportConfig config = {});
    ~LiveUdpTransport() override;
    LiveUdpTransport(const LiveUdpTransport&) = delete;
    LiveUdpTransport& operator=(const LiveUdpTransport&) = delete;

    PingOutcome ping_pong(const PeerInfo& peer) override;
    FindNodeOutcome find_node(const PeerInfo& peer, const NodeId& target) override;

    const NodeId& self() const noexcept { return self_; }
    std::uint16_t local_port() const noexcept { return local_port_; }

private:
    struct NeighborsCollector {
        std::vector<PeerInfo> peers;
        std::size_t packets{0};
        std::chrono::steady_clock::time_point last_packet;
    };

    bool send(const PeerInfo& to, discv4::PacketType type, const Bytes& payload, crypto::Hash256* hash = nullptr);
    void receive_loop(std::stop_token stop);
    void handle(const discv4::Decoded& packet, const IpAddress& from_ip, std::uint16_t from_port);
    std::shared_ptr<std::mutex> peer_lock(const NodeId& id);
    static std::uint64_t expiration();

    LiveTransportConfig config_;
    secp256k1::PrivateKey key_;
    NodeId self_;
    int fd_{-1};
    std::uint16_t local_port_{0};

    std::mutex mutex_;
    std::condition_variable cv_;
    std::map<crypto::Hash256, NodeId> awaiting_pong_;
    std::set<crypto::Hash256> ponged_;
    std::set<NodeId> pinged_us_;
    std::map<NodeId, NeighborsCollector> collectors_;
    std::map<NodeId, std::shared_ptr<std::mutex>> peer_locks_;

    std::jthread receiver_;
};

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_LIVE_TRANSPORT_HPP
