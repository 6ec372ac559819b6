// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/sim_overlay.hpp>

#include <chainlens/common/errors.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <numeric>
#include <random>

namespace chainlens::crawler {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_interval(std::uint64_t x) noexcept
{
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

IpAddress synthetic_public_ip(std::mt19937_64& rng)
{
    while (true) {
        const auto v = static_cast<std::uint32_t>(rng());
        const IpAddress ip = IpAddress::v4(v);
        const unsigned first = v >> 24;
        if (first == 0 || first == 127 || first >= 224 || ip.is_private_v4()) continue;
        return ip;
    }
}

constexpr std::uint64_t kPingSalt = 0x70696e67ULL;

} // namespace

void SimOverlayConfig::validate() const
{
    if (!(unreachable_fraction >= 0.0 && unreachable_fraction <= 1.0)) {
        throw Error("unreachable_fraction must be within [0, 1]");
    }
    if (!(churn_failure_rate >= 0.0 && churn_failure_rate < 1.0)) {
        throw Error("churn_failure_rate must be within [0, 1)");
    }
    if (neighbor_k < 1) throw Error("neighbor_k must be at least 1");
}

std::vector<PeerInfo> GroundTruth::reachable_from(std::size_t seed) const
{
    std::vector<PeerInfo> out;
    if (seed >= roster.size() || !reachable[seed]) return out;
    std::vector<bool> seen(roster.size(), false);
    std::deque<std::size_t> frontier{seed};
    seen[seed] = true;
    while (!frontier.empty()) {
        const std::size_t at = frontier.front();
        frontier.pop_front();
        out.push_back(roster[at]);
        for (const std::size_t next : routing_tables[at]) {
            if (!seen[next] && reachable[next]) {
                seen[next] = true;
                frontier.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SimulatedTransport::SimulatedTransport(const GroundTruth& truth, const SimOverlayConfig& config)
    : config_(config), reachable_(truth.reachable), roster_(truth.roster)
{
    tables_.resize(roster_.size());
    for (std::size_t i = 0; i < roster_.size(); ++i) {
        index_.emplace(roster_[i].node_id, i);
        for (const std::size_t j : truth.routing_tables[i]) tables_[i].push_back(HashedPeer::of(roster_[j]));
    }
}

const std::size_t* SimulatedTransport::lookup(const PeerInfo& peer) const
{
    const auto it = index_.find(peer.node_id);
    if (it == index_.end()) return nullptr;
    const PeerInfo& known = roster_[it->second];
    if (known.ip != peer.ip || known.port != peer.port) return nullptr;
    return &it->second;
}

bool SimulatedTransport::churned(std::size_t peer, std::uint64_t salt) const noexcept
{
    if (config_.churn_failure_rate <= 0.0) return false;
    const std::uint64_t h = splitmix64(splitmix64(config_.rng_seed ^ salt) ^ peer);
    return unit_interval(h) < config_.churn_failure_rate;
}

PingOutcome SimulatedTransport::ping_pong(const PeerInfo& peer)
{
    const std::size_t* idx = lookup(peer);
    if (!idx) return {false, "no such endpoint"};
    if (!reachable_[*idx]) return {false, "timeout (unreachable)"};
    if (churned(*idx, kPingSalt)) return {false, "timeout (churn)"};
    return {true, {}};
}

FindNodeOutcome SimulatedTransport::find_node(const PeerInfo& peer, const NodeId& target)
{
    const std::size_t* idx = lookup(peer);
    if (!idx) return {false, "no such endpoint", {}};
    if (!reachable_[*idx]) return {false, "timeout (unreachable)", {}};
    std::uint64_t salt = 0;
    std::memcpy(&salt, target.bytes.data(), sizeof salt);
    if (churned(*idx, salt)) return {false, "timeout (churn)", {}};
    return {true, {}, select_neighbors(std::span<const HashedPeer>(tables_[*idx]), node_hash(target), config_.neighbor_k)};
}

SimOverlay build_sim_overlay(const SimOverlayConfig& config)
{
    config.validate();
    std::mt19937_64 rng(config.rng_seed);
    GroundTruth truth;
    truth.roster.resize(config.n_peers);
    for (PeerInfo& p : truth.roster) {
        for (std::size_t i = 0; i < p.node_id.bytes.size(); i += 8) {
            const std::uint64_t word = rng();
            for (std::size_t j = 0; j < 8; ++j) p.node_id.bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
        }
        p.ip = synthetic_public_ip(rng);
        p.port = (rng() % 5 == 0) ? static_cast<std::uint16_t>(1024 + rng() % (65536 - 1024)) : 30303;
    }

    truth.reachable.assign(config.n_peers, true);
    const auto unreachable =
        static_cast<std::size_t>(std::llround(config.unreachable_fraction * static_cast<double>(config.n_peers)));
    std::vector<std::size_t> order(config.n_peers);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < unreachable && i < order.size(); ++i) truth.reachable[order[i]] = false;

    const std::size_t degree = config.n_peers == 0 ? 0 : std::min(config.degree, config.n_peers - 1);
    truth.routing_tables.resize(config.n_peers);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < config.n_peers; ++i) {
        std::vector<std::size_t>& table = truth.routing_tables[i];
        if (degree * 2 >= config.n_peers) {
            others.clear();
            for (std::size_t j = 0; j < config.n_peers; ++j) {
                if (j != i) others.push_back(j);
            }
            // Partial Fisher-Yates: the first `degree` slots are a uniform sample.
            for (std::size_t k = 0; k < degree; ++k) {
                std::uniform_int_distribution<std::size_t> pick(k, others.size() - 1);
                std::swap(others[k], others[pick(rng)]);
            }
            table.assign(others.begin(), others.begin() + static_cast<std::ptrdiff_t>(degree));
        } else {
            std::uniform_int_distribution<std::size_t> pick(0, config.n_peers - 1);
            while (table.size() < degree) {
                const std::size_t j = pick(rng);
                if (j != i && std::find(table.begin(), table.end(), j) == table.end()) table.push_back(j);
            }
        }
        std::sort(table.begin(), table.end());
    }

    SimOverlay overlay;
    overlay.transport = std::make_unique<SimulatedTransport>(truth, config);
    overlay.truth = std::move(truth);
    return overlay;
}

} // namespace chainlens::crawler
