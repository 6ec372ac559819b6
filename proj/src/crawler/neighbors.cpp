// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/neighbors.hpp>

#include <algorithm>

namespace chainlens::crawler {

namespace {

struct Ranked {
    Distance distance;
    const PeerInfo* peer;

    bool operator<(const Ranked& o) const noexcept
    {
        if (distance != o.distance) return distance < o.distance;
        return *peer < *o.peer;
    }
};

std::vector<PeerInfo> take_closest(std::vector<Ranked>& ranked, std::size_t k)
{
    const std::size_t n = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end());
    std::vector<PeerInfo> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(*ranked[i].peer);
    return out;
}

} // namespace

std::vector<PeerInfo> select_neighbors(std::span<const PeerInfo> candidates, const NodeHash& target, std::size_t k)
{
    std::vector<Ranked> ranked;
    ranked.reserve(candidates.size());
    for (const PeerInfo& p : candidates) ranked.push_back(Ranked{xor_distance(node_hash(p.node_id), target), &p});
    return take_closest(ranked, k);
}

std::vector<PeerInfo> select_neighbors(std::span<const HashedPeer> candidates, const NodeHash& target, std::size_t k)
{
    std::vector<Ranked> ranked;
    ranked.reserve(candidates.size());
    for (const HashedPeer& p : candidates) ranked.push_back(Ranked{xor_distance(p.hash, target), &p.peer});
    return take_closest(ranked, k);
}

} // namespace chainlens::crawler
