// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_NEIGHBORS_HPP
#define CHAINLENS_CRAWLER_NEIGHBORS_HPP

#include <chainlens/crawler/node.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace chainlens::crawler {

/// A peer together with its cached node hash.
struct HashedPeer {
    PeerInfo peer;
    NodeHash hash;

    static HashedPeer of(const PeerInfo& p) { return HashedPeer{p, node_hash(p.node_id)}; }
};

/// The k candidates closest to `target` under the hashed XOR metric,
/// ascending by distance; equal distances order by node id, then endpoint.
std::vector<PeerInfo> select_neighbors(std::span<const PeerInfo> candidates, const NodeHash& target, std::size_t k);

/// Same selection over candidates whose hashes are already known.
std::vector<PeerInfo> select_neighbors(std::span<const HashedPeer> candidates, const NodeHash& target, std::size_t k);

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_NEIGHBORS_HPP
