// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/stats.hpp>

#include <algorithm>
#include <set>

namespace chainlens::crawler {

EndpointStats endpoint_stats(std::span<const PeerInfo> peers, unsigned prefix_bits)
{
    std::set<NodeId> ids;
    std::set<IpAddress> ips;
    std::set<std::uint16_t> ports;
    std::set<std::pair<IpAddress, std::uint16_t>> combos;
    std::map<IpAddress, std::set<NodeId>> per_ip;
    for (const PeerInfo& p : peers) {
        ids.insert(p.node_id);
        ips.insert(p.ip);
        ports.insert(p.port);
        combos.emplace(p.ip, p.port);
        per_ip[p.ip].insert(p.node_id);
    }

    EndpointStats s;
    s.unique_node_ids = static_cast<std::int64_t>(ids.size());
    s.unique_ips = static_cast<std::int64_t>(ips.size());
    s.unique_ports = static_cast<std::int64_t>(ports.size());
    s.ip_port_combos = static_cast<std::int64_t>(combos.size());
    s.private_range_ips = std::count_if(ips.begin(), ips.end(), [](const IpAddress& ip) { return ip.is_private_v4(); });
    for (const auto& [ip, set] : per_ip) s.node_ids_per_ip.emplace_back(ip, static_cast<std::int64_t>(set.size()));
    std::stable_sort(s.node_ids_per_ip.begin(), s.node_ids_per_ip.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    s.prefix_bits = prefix_bits;
    for (const NodeId& id : ids) ++s.prefix_histogram[node_hash(id).prefix(prefix_bits)];
    return s;
}

std::map<std::int64_t, std::int64_t> prefix_occupancy(const EndpointStats& stats)
{
    std::map<std::int64_t, std::int64_t> out;
    for (const auto& [prefix, count] : stats.prefix_histogram) ++out[count];
    const std::int64_t total = std::int64_t{1} << std::min(stats.prefix_bits, 62u);
    const auto empty = total - static_cast<std::int64_t>(stats.prefix_histogram.size());
    if (empty > 0) out[0] = empty;
    return out;
}

} // namespace chainlens::crawler
