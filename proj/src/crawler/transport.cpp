// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/transport.hpp>

namespace chainlens::crawler {

void CountingTransport::enter() noexcept
{
    const std::size_t now = ++in_flight_;
    std::size_t seen = max_in_flight_.load();
    while (now > seen && !max_in_flight_.compare_exchange_weak(seen, now)) {
    }
}

void CountingTransport::leave() noexcept
{
    --in_flight_;
}

PingOutcome CountingTransport::ping_pong(const PeerInfo& peer)
{
    enter();
    ++pings_;
    PingOutcome out = inner_.ping_pong(peer);
    if (out.ok) {
        std::lock_guard lock(mutex_);
        ponged_.push_back(peer.node_id);
    }
    leave();
    return out;
}

FindNodeOutcome CountingTransport::find_node(const PeerInfo& peer, const NodeId& target)
{
    enter();
    ++queries_;
    FindNodeOutcome out = inner_.find_node(peer, target);
    leave();
    return out;
}

std::vector<NodeId> CountingTransport::ponged() const
{
    std::lock_guard lock(mutex_);
    return ponged_;
}

} // namespace chainlens::crawler
