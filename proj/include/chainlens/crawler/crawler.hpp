// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_CRAWLER_HPP
#define CHAINLENS_CRAWLER_CRAWLER_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/crawler/node.hpp>
#include <chainlens/crawler/stats.hpp>
#include <chainlens/crawler/transport.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chainlens::crawler {

struct CrawlConfig {
    unsigned prefix_bits{13};
    std::size_t neighbor_k{16};
    std::size_t max_in_flight{500};
    /// Used by transports that talk to real sockets.
    std::chrono::milliseconds ping_timeout{2000};
    std::chrono::milliseconds query_timeout{2000};
    std::optional<std::uint64_t> rng_seed;
    /// Worker threads issuing queries; 0 picks min(max_in_flight, hardware threads).
    /// Never more than max_in_flight.
    std::size_t worker_threads{0};

    /// Throws chainlens::Error when a field is out of range.
    void validate() const;
};

struct FailedEndpoint {
    IpAddress ip;
    std::uint16_t port{0};
    std::string reason;

    auto operator<=>(const FailedEndpoint&) const = default;
};

struct CrawlReport {
    /// Sorted by node id; one entry per node id.
    std::vector<PeerInfo> known_peers;
    /// Sorted, without duplicates.
    std::vector<FailedEndpoint> failed_endpoints;
    EndpointStats stats;
    std::uint64_t find_node_queries{0};
    std::uint64_t ping_attempts{0};

    bool operator==(const CrawlReport&) const = default;
};

class NoSeedsReachable : public Error
{
public:
    NoSeedsReachable() : Error("NoSeedsReachable: every seed failed ping-pong") {}
};

/**
 * Kademlia-style discovery crawl.
 *
 * Seeds that answer a ping become the initial known peers. Every known
 * peer is sent FIND_NODE for every precomputed target; each returned peer
 * that has not been seen before is pinged once and, on success, joins the
 * known set and gets its own round of queries. Work is a FIFO of
 * (peer, target) pairs drained by up to max_in_flight concurrent workers.
 * The loop ends when no pairs are left and no query is outstanding.
 *
 * Against a transport whose answers depend only on the query, the report
 * is identical for any thread interleaving.
 */
CrawlReport crawl(DiscoveryTransport& transport, std::span<const PeerInfo> seeds, const CrawlConfig& config);

/// As above, with targets supplied by the caller instead of precomputed
/// from config.prefix_bits and config.rng_seed.
CrawlReport crawl(DiscoveryTransport& transport, std::span<const PeerInfo> seeds, const CrawlConfig& config,
                  std::span<const NodeId> targets);

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_CRAWLER_HPP
