// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_SIM_OVERLAY_HPP
#define CHAINLENS_CRAWLER_SIM_OVERLAY_HPP

#include <chainlens/crawler/neighbors.hpp>
#include <chainlens/crawler/transport.hpp>

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace chainlens::crawler {

struct SimOverlayConfig {
    std::size_t n_peers{1000};
    /// Routing-table size per peer, capped at n_peers - 1.
    std::size_t degree{20};
    /// Share of peers that never answer anything.
    double unreachable_fraction{0.0};
    /// Probability that any single ping or query times out.
    double churn_failure_rate{0.0};
    std::uint64_t rng_seed{1};
    /// Peers returned per FIND_NODE answer.
    std::size_t neighbor_k{16};

    /// Throws chainlens::Error when a field is out of range.
    void validate() const;
};

/// What the simulator knows and the crawler must rediscover.
struct GroundTruth {
    std::vector<PeerInfo> roster;
    std::vector<bool> reachable;
    /// Indices into roster.
    std::vector<std::vector<std::size_t>> routing_tables;

    /// Peers a crawl starting at `seed` could possibly learn about: the
    /// closure over routing tables, through reachable peers only.
    std::vector<PeerInfo> reachable_from(std::size_t seed) const;
};

/**
 * In-process overlay answering discovery messages from generated routing
 * tables. Every answer is a pure function of (rng_seed, peer, message), so
 * concurrent callers and any call order see the same responses.
 */
class SimulatedTransport : public DiscoveryTransport
{
public:
    SimulatedTransport(const GroundTruth& truth, const SimOverlayConfig& config);

    PingOutcome ping_pong(const PeerInfo& peer) override;
    FindNodeOutcome find_node(const PeerInfo& peer, const NodeId& target) override;

private:
    const std::size_t* lookup(const PeerInfo& peer) const;
    bool churned(std::size_t peer, std::uint64_t salt) const noexcept;

    SimOverlayConfig config_;
    std::vector<bool> reachable_;
    std::vector<PeerInfo> roster_;
    std::vector<std::vector<HashedPeer>> tables_;
    std::unordered_map<NodeId, std::size_t, NodeIdHasher> index_;
};

struct SimOverlay {
    GroundTruth truth;
    std::unique_ptr<SimulatedTransport> transport;
};

SimOverlay build_sim_overlay(const SimOverlayConfig& config);

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_SIM_OVERLAY_HPP
