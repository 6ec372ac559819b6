// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_STATS_HPP
#define CHAINLENS_CRAWLER_STATS_HPP

#include <chainlens/crawler/node.hpp>

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace chainlens::crawler {

struct EndpointStats {
    std::int64_t unique_node_ids{0};
    std::int64_t unique_ips{0};
    std::int64_t unique_ports{0};
    std::int64_t ip_port_combos{0};
    /// Distinct IPv4 addresses in 10/8, 172.16/12 and 192.168/16.
    std::int64_t private_range_ips{0};
    /// Distinct node ids per IP, by count descending then IP ascending.
    std::vector<std::pair<IpAddress, std::int64_t>> node_ids_per_ip;
    unsigned prefix_bits{0};
    /// Hash prefix → number of distinct node ids in it. Empty prefixes omitted.
    std::map<std::uint32_t, std::int64_t> prefix_histogram;

    bool operator==(const EndpointStats&) const = default;
};

EndpointStats endpoint_stats(std::span<const PeerInfo> peers, unsigned prefix_bits);

/// Number of prefixes holding exactly n peers, for every n observed.
/// Prefixes with no peers are counted under n = 0.
std::map<std::int64_t, std::int64_t> prefix_occupancy(const EndpointStats& stats);

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_STATS_HPP
