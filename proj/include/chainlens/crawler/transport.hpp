// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_TRANSPORT_HPP
#define CHAINLENS_CRAWLER_TRANSPORT_HPP

#include <chainlens/crawler/node.hpp>

#include <atomic>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace chainlens::crawler {

struct PingOutcome {
    bool ok{false};
    std::string failure;
};

struct FindNodeOutcome {
    bool ok{false};
    std::string failure;
    std::vector<PeerInfo> peers;
};

/// The two discovery messages the crawler needs. Implementations must be
/// callable from several threads at once.
class DiscoveryTransport
{
public:
    virtual ~DiscoveryTransport() = default;

    /// PING/PONG exchange; a peer must answer before it counts as known.
    virtual PingOutcome ping_pong(const PeerInfo& peer) = 0;
    /// FIND_NODE for `target`; the peer answers with its closest entries.
    virtual FindNodeOutcome find_node(const PeerInfo& peer, const NodeId& target) = 0;
};

/// Decorator recording how many calls are outstanding at once and which
/// peers answered a ping.
class CountingTransport : public DiscoveryTransport
{
public:
    explicit CountingTransport(DiscoveryTransport& inner) : inner_(inner) {}

    PingOutcome ping_pong(const PeerInfo& peer) override;
    FindNodeOutcome find_node(const PeerInfo& peer, const NodeId& target) override;

    std::size_t max_in_flight() const noexcept { return max_in_flight_.load(); }
    std::size_t pings() const noexcept { return pings_.load(); }
    std::size_t queries() const noexcept { return queries_.load(); }
    /// Node ids whose ping succeeded.
    std::vector<NodeId> ponged() const;

private:
    void enter() noexcept;
    void leave() noexcept;

    DiscoveryTransport& inner_;
    std::atomic<std::size_t> in_flight_{0};
    std::atomic<std::size_t> max_in_flight_{0};
    std::atomic<std::size_t> pings_{0};
    std::atomic<std::size_t> queries_{0};
    mutable std::mutex mutex_;
    std::vector<NodeId> ponged_;
};

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_TRANSPORT_HPP
