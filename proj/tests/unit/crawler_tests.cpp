// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/crawler.hpp>
#include <chainlens/crawler/live_transport.hpp>
#include <chainlens/crawler/neighbors.hpp>
#include <chainlens/crawler/sim_overlay.hpp>
#include <chainlens/crawler/stats.hpp>
#include <chainlens/crawler/targets.hpp>

#include "../support/support.hpp"

#include <boost/test/unit_test.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace chainlens;
using namespace chainlens::crawler;

namespace {

PeerInfo peer(const NodeId& id, const char* ip, std::uint16_t port)
{
    return PeerInfo{id, *IpAddress::parse(ip), port};
}

CrawlConfig small_config(unsigned prefix_bits = 6)
{
    CrawlConfig c;
    c.prefix_bits = prefix_bits;
    c.rng_seed = 7;
    c.max_in_flight = 32;
    return c;
}

} // namespace

BOOST_AUTO_TEST_SUITE(crawler_tests)

BOOST_AUTO_TEST_CASE(node_hash_prefix_and_distance)
{
    NodeId id;
    const NodeHash h = node_hash(id);
    BOOST_CHECK_EQUAL(h.prefix(0), 0U);
    BOOST_CHECK_EQUAL(h.prefix(8), h.bytes[0]);
    BOOST_CHECK_EQUAL(h.prefix(32), (std::uint32_t{h.bytes[0]} << 24) | (std::uint32_t{h.bytes[1]} << 16) |
                                        (std::uint32_t{h.bytes[2]} << 8) | h.bytes[3]);
    BOOST_CHECK(xor_distance(h, h).is_zero());
    NodeHash other = h;
    other.bytes[31] ^= 0x05;
    BOOST_CHECK_EQUAL(xor_distance(h, other).low64(), 5U);
}

BOOST_AUTO_TEST_CASE(neighbors_match_full_sort)
{
    std::mt19937_64 rng(42);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = rng() % 201;
        std::vector<PeerInfo> candidates;
        for (std::size_t i = 0; i < n; ++i) {
            // Some duplicates share a node id but differ in endpoint.
            if (!candidates.empty() && rng() % 8 == 0) {
                PeerInfo dup = candidates[rng() % candidates.size()];
                dup.port = static_cast<std::uint16_t>(rng());
                candidates.push_back(dup);
            } else {
                candidates.push_back(PeerInfo{test::random_node_id(rng), IpAddress::v4(static_cast<std::uint32_t>(rng())),
                                              static_cast<std::uint16_t>(rng())});
            }
        }
        const NodeHash target = node_hash(test::random_node_id(rng));
        const std::size_t k = rng() % 20;
        BOOST_REQUIRE(select_neighbors(candidates, target, k) == test::oracle::neighbors(candidates, target, k));
    }
}

BOOST_AUTO_TEST_CASE(targets_rehash_to_their_prefix)
{
    for (const unsigned bits : {0U, 3U, 10U}) {
        const auto targets = precompute_targets(bits, 99);
        BOOST_REQUIRE_EQUAL(targets.size(), std::size_t{1} << bits);
        for (std::size_t p = 0; p < targets.size(); ++p) {
            BOOST_CHECK_EQUAL(node_hash(targets[p]).prefix(bits), p);
        }
    }
    BOOST_CHECK(precompute_targets(5, 1) == precompute_targets(5, 1));
    BOOST_CHECK(precompute_targets(5, 1) != precompute_targets(5, 2));
    BOOST_CHECK_THROW(precompute_targets(33, 1), Error);
}

BOOST_AUTO_TEST_CASE(config_validation)
{
    CrawlConfig c;
    c.max_in_flight = 0;
    BOOST_CHECK_THROW(c.validate(), Error);
    c = CrawlConfig{};
    c.neighbor_k = 0;
    BOOST_CHECK_THROW(c.validate(), Error);
    SimOverlayConfig s;
    s.unreachable_fraction = 1.5;
    BOOST_CHECK_THROW(s.validate(), Error);
    s = SimOverlayConfig{};
    s.churn_failure_rate = 1.0;
    BOOST_CHECK_THROW(s.validate(), Error);
}

BOOST_AUTO_TEST_CASE(single_peer_overlay)
{
    SimOverlayConfig sc;
    sc.n_peers = 1;
    const SimOverlay sim = build_sim_overlay(sc);
    const CrawlReport r = crawl(*sim.transport, sim.truth.roster, small_config());
    BOOST_REQUIRE_EQUAL(r.known_peers.size(), 1U);
    BOOST_CHECK(r.known_peers[0] == sim.truth.roster[0]);
    BOOST_CHECK(r.failed_endpoints.empty());
}

BOOST_AUTO_TEST_CASE(unreachable_seeds_throw)
{
    SimOverlayConfig sc;
    sc.n_peers = 20;
    sc.unreachable_fraction = 1.0;
    const SimOverlay sim = build_sim_overlay(sc);
    BOOST_CHECK_THROW(crawl(*sim.transport, std::span(sim.truth.roster).first(3), small_config()), NoSeedsReachable);
    BOOST_CHECK_THROW(crawl(*sim.transport, std::span<const PeerInfo>{}, small_config()), NoSeedsReachable);
}

BOOST_AUTO_TEST_CASE(clique_is_found_completely)
{
    SimOverlayConfig sc;
    sc.n_peers = 100;
    sc.degree = 99;
    sc.neighbor_k = 16;
    const SimOverlay sim = build_sim_overlay(sc);
    const CrawlReport r = crawl(*sim.transport, std::span(sim.truth.roster).first(1), small_config());
    BOOST_CHECK_EQUAL(r.known_peers.size(), 100U);
}

BOOST_AUTO_TEST_CASE(crawl_is_sound_and_deterministic)
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 8; ++round) {
        SimOverlayConfig sc;
        sc.n_peers = 50 + rng() % 250;
        sc.degree = 3 + rng() % 20;
        sc.unreachable_fraction = static_cast<double>(rng() % 30) / 100.0;
        sc.churn_failure_rate = static_cast<double>(rng() % 10) / 100.0;
        sc.rng_seed = rng();
        const SimOverlay sim = build_sim_overlay(sc);
        std::size_t seed = 0;
        while (seed < sim.truth.roster.size() && !sim.transport->ping_pong(sim.truth.roster[seed]).ok) ++seed;
        BOOST_REQUIRE(seed < sim.truth.roster.size());
        const std::vector<PeerInfo> seeds{sim.truth.roster[seed]};

        CrawlConfig cfg = small_config(5);
        cfg.max_in_flight = 1 + rng() % 64;
        CountingTransport counting(*sim.transport);
        const CrawlReport a = crawl(counting, seeds, cfg);
        cfg.worker_threads = 1;
        const CrawlReport b = crawl(*sim.transport, seeds, cfg);
        BOOST_CHECK(a == b);
        BOOST_CHECK_LE(counting.max_in_flight(), cfg.max_in_flight);

        // Every known peer exists, is reachable, and answered a ping.
        const std::vector<PeerInfo> closure = sim.truth.reachable_from(seed);
        std::set<NodeId> ponged;
        for (const NodeId& id : counting.ponged()) ponged.insert(id);
        BOOST_REQUIRE(std::is_sorted(a.known_peers.begin(), a.known_peers.end()));
        for (const PeerInfo& p : a.known_peers) {
            BOOST_CHECK(std::binary_search(closure.begin(), closure.end(), p));
            BOOST_CHECK(ponged.count(p.node_id) == 1);
        }
        BOOST_CHECK(std::is_sorted(a.failed_endpoints.begin(), a.failed_endpoints.end()));
        BOOST_CHECK(std::adjacent_find(a.failed_endpoints.begin(), a.failed_endpoints.end()) == a.failed_endpoints.end());
        BOOST_CHECK_EQUAL(a.find_node_queries, counting.queries());
        BOOST_CHECK_EQUAL(a.ping_attempts, counting.pings());
        BOOST_CHECK(a.stats == endpoint_stats(a.known_peers, cfg.prefix_bits));
    }
}

BOOST_AUTO_TEST_CASE(duplicate_node_ids_count_once)
{
    std::mt19937_64 rng(3);
    const NodeId a = test::random_node_id(rng);
    const NodeId b = test::random_node_id(rng);
    const std::vector<PeerInfo> peers{peer(a, "10.0.0.1", 30303), peer(a, "10.0.0.1", 30304), peer(b, "10.0.0.1", 30303),
                                      peer(b, "8.8.8.8", 30303)};
    const EndpointStats s = endpoint_stats(peers, 4);
    BOOST_CHECK_EQUAL(s.unique_node_ids, 2);
    BOOST_CHECK_EQUAL(s.unique_ips, 2);
    BOOST_CHECK_EQUAL(s.unique_ports, 2);
    BOOST_CHECK_EQUAL(s.ip_port_combos, 3);
    BOOST_CHECK_EQUAL(s.private_range_ips, 1);
    BOOST_REQUIRE_EQUAL(s.node_ids_per_ip.size(), 2U);
    BOOST_CHECK_EQUAL(s.node_ids_per_ip[0].first.to_string(), "10.0.0.1");
    BOOST_CHECK_EQUAL(s.node_ids_per_ip[0].second, 2);
    std::int64_t in_histogram = 0;
    for (const auto& [prefix, count] : s.prefix_histogram) {
        BOOST_CHECK_LT(prefix, 16U);
        in_histogram += count;
    }
    BOOST_CHECK_EQUAL(in_histogram, 2);

    const auto occupancy = prefix_occupancy(s);
    std::int64_t prefixes = 0;
    for (const auto& [n, count] : occupancy) prefixes += count;
    BOOST_CHECK_EQUAL(prefixes, 16);
}

BOOST_AUTO_TEST_CASE(live_transport_pings_over_loopback)
{
    LiveTransportConfig cfg;
    cfg.ping_timeout = std::chrono::milliseconds(2000);
    cfg.bond_wait = std::chrono::milliseconds(200);
    LiveUdpTransport a(cfg);
    LiveUdpTransport b(cfg);
    const PeerInfo to_b = peer(b.self(), "127.0.0.1", b.local_port());
    const PingOutcome ok = a.ping_pong(to_b);
    BOOST_CHECK_MESSAGE(ok.ok, ok.failure);

    // Wrong identity at the right endpoint never verifies.
    std::mt19937_64 rng(1);
    cfg.ping_timeout = std::chrono::milliseconds(300);
    LiveUdpTransport c(cfg);
    const PingOutcome bad = c.ping_pong(peer(test::random_node_id(rng), "127.0.0.1", b.local_port()));
    BOOST_CHECK(!bad.ok);
}

BOOST_AUTO_TEST_SUITE_END()
