// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/bootstrap/ports.hpp>
#include <chainlens/bootstrap/rdns.hpp>
#include <chainlens/bootstrap/seeds.hpp>
#include <chainlens/common/errors.hpp>

#include <boost/test/unit_test.hpp>

#include <random>
#include <sstream>

using namespace chainlens;
using namespace chainlens::bootstrap;

namespace {

IpAddress ip(int n)
{
    return IpAddress::v4(0x0a000000u + static_cast<std::uint32_t>(n));
}

ResolveResult answer(std::initializer_list<int> hosts)
{
    ResolveResult r;
    for (const int h : hosts) r.ips.push_back(ip(h));
    return r;
}

} // namespace

BOOST_AUTO_TEST_SUITE(bootstrap_tests)

BOOST_AUTO_TEST_CASE(scripted_harvest_curve)
{
    ScriptedResolver resolver;
    resolver.script("seed-a", {answer({1, 2, 3}), answer({2, 3, 4}), answer({4, 5}),
                               ResolveResult::failed(ResolveError::NxDomain)});
    resolver.script("seed-b", {answer({3, 6}), ResolveResult::failed(ResolveError::ServFail), answer({6, 7}),
                               answer({1, 8})});
    SeedSource src;
    src.port = 8333;
    src.dns_names = {"seed-a", "seed-b"};
    src.hardcoded = {ip(9), ip(1)};

    const SeedHarvest h = harvest_seeds(resolver, src, 5);
    const std::vector<HarvestRound> want{{1, 4, 4}, {2, 1, 5}, {3, 2, 7}, {4, 1, 8}, {5, 0, 8}};
    BOOST_CHECK(h.rounds == want);
    BOOST_CHECK_EQUAL(h.all_ips.size(), 9U);
    using R = NameRoundResult;
    BOOST_CHECK(h.per_name.at("seed-a") == (std::vector<R>{{3, std::nullopt}, {3, std::nullopt}, {2, std::nullopt},
                                                           {0, ResolveError::NxDomain}, {0, ResolveError::NxDomain}}));
    BOOST_CHECK(h.per_name.at("seed-b") == (std::vector<R>{{2, std::nullopt}, {0, ResolveError::ServFail},
                                                           {2, std::nullopt}, {2, std::nullopt}, {2, std::nullopt}}));
    BOOST_CHECK_THROW(harvest_seeds(resolver, src, 0), Error);
}

BOOST_AUTO_TEST_CASE(unknown_names_fail_every_round)
{
    ScriptedResolver resolver;
    SeedSource src;
    src.port = 1;
    src.dns_names = {"nowhere"};
    const SeedHarvest h = harvest_seeds(resolver, src, 3);
    for (const HarvestRound& r : h.rounds) BOOST_CHECK_EQUAL(r.cumulative_unique, 0U);
    for (const NameRoundResult& r : h.per_name.at("nowhere")) BOOST_CHECK(r.error == ResolveError::NxDomain);
}

BOOST_AUTO_TEST_CASE(scripted_port_summary)
{
    std::map<IpAddress, ConnectResult> script;
    std::set<IpAddress> ips;
    for (int i = 0; i < 10; ++i) {
        ips.insert(ip(i));
        if (i < 4) script[ip(i)] = ConnectResult::Accepted;
        else if (i == 4) script[ip(i)] = ConnectResult::Refused;
        else if (i < 7) script[ip(i)] = ConnectResult::TimedOut;
    }
    ScriptedProber prober(script);
    for (const std::size_t concurrency : {1U, 3U, 64U}) {
        const PortScan scan = probe_ports(prober, ips, 8333, concurrency);
        BOOST_CHECK(scan.summary == (PortSummary{4, 5, 1}));
        BOOST_CHECK_CLOSE(scan.summary.percent(scan.summary.open), 40.0, 1e-9);
        BOOST_CHECK_CLOSE(scan.summary.percent(scan.summary.filtered), 50.0, 1e-9);
        BOOST_CHECK_CLOSE(scan.summary.percent(scan.summary.closed), 10.0, 1e-9);
        BOOST_CHECK(scan.outcomes.at(ip(0)) == ProbeOutcome::Open);
        BOOST_CHECK(scan.outcomes.at(ip(4)) == ProbeOutcome::Closed);
        BOOST_CHECK(scan.outcomes.at(ip(9)) == ProbeOutcome::Filtered);
    }
    BOOST_CHECK_EQUAL(PortSummary{}.percent(0), 0.0);
    BOOST_CHECK_THROW(probe_ports(prober, ips, 0), Error);
    BOOST_CHECK_THROW(probe_ports(prober, ips, 1, 0), Error);
}

BOOST_AUTO_TEST_CASE(simulated_harvests_never_shrink)
{
    std::mt19937_64 rng(31);
    for (int scenario = 0; scenario < 100; ++scenario) {
        SimResolverConfig cfg;
        cfg.pool_size = 1 + rng() % 60;
        cfg.answer_size = 1 + rng() % 12;
        cfg.servfail_rate = static_cast<double>(rng() % 30) / 100.0;
        cfg.nxdomain_rate = static_cast<double>(rng() % 30) / 100.0;
        cfg.seed = rng();
        SimulatedResolver resolver(cfg);
        SeedSource src;
        src.port = 8333;
        for (std::size_t n = 1 + rng() % 6; n > 0; --n) src.dns_names.push_back("seed" + std::to_string(n));
        const std::size_t rounds = 1 + rng() % 40;
        const SeedHarvest h = harvest_seeds(resolver, src, rounds);

        BOOST_REQUIRE_EQUAL(h.rounds.size(), rounds);
        std::size_t prev = 0;
        std::size_t new_total = 0;
        for (const HarvestRound& r : h.rounds) {
            BOOST_CHECK_GE(r.cumulative_unique, prev);
            BOOST_CHECK_EQUAL(r.cumulative_unique - prev, r.new_ips);
            prev = r.cumulative_unique;
            new_total += r.new_ips;
        }
        BOOST_CHECK_EQUAL(new_total, h.all_ips.size());
        std::set<IpAddress> pools;
        for (const std::string& name : src.dns_names) {
            const auto p = resolver.pool(name);
            pools.insert(p.begin(), p.end());
        }
        BOOST_CHECK_LE(prev, pools.size());
        for (const IpAddress& a : h.all_ips) BOOST_CHECK(pools.count(a) == 1);
        for (const auto& [name, results] : h.per_name) {
            for (const NameRoundResult& r : results) {
                BOOST_CHECK(r.error ? r.ip_count == 0 : r.ip_count <= cfg.answer_size);
            }
        }
    }
}

BOOST_AUTO_TEST_CASE(simulated_prober_is_deterministic)
{
    std::set<IpAddress> ips;
    for (int i = 0; i < 500; ++i) ips.insert(ip(i));
    SimulatedProber a({0.36, 0.11, 9});
    SimulatedProber b({0.36, 0.11, 9});
    const PortScan x = probe_ports(a, ips, 8333, 16);
    const PortScan y = probe_ports(b, ips, 8333, 1);
    BOOST_CHECK(x.outcomes == y.outcomes);
    BOOST_CHECK_EQUAL(x.summary.total(), 500U);
    BOOST_CHECK_GT(x.summary.open, 0U);
    BOOST_CHECK_GT(x.summary.closed, 0U);
    BOOST_CHECK_GT(x.summary.filtered, 0U);
}

BOOST_AUTO_TEST_CASE(seed_source_parsing)
{
    std::istringstream ok(R"({"port": 8334, "hardcoded": ["1.2.3.4"], "dns": ["seed.example.org"]})");
    const SeedSource s = load_seed_source(ok);
    BOOST_CHECK_EQUAL(s.port, 8334);
    BOOST_REQUIRE_EQUAL(s.hardcoded.size(), 1U);
    BOOST_CHECK_EQUAL(s.hardcoded[0].to_string(), "1.2.3.4");
    BOOST_CHECK(s.dns_names == std::vector<std::string>{"seed.example.org"});
    for (const char* bad : {R"({"port": 0})", R"({"port": 1, "hardcoded": ["x"]})", R"({"port": 1, "dns": [""]})",
                            "[]", "{"}) {
        std::istringstream in(bad);
        BOOST_CHECK_THROW(load_seed_source(in), Error);
    }
}

BOOST_AUTO_TEST_CASE(rdns_categories)
{
    std::istringstream rules_text("# match,pattern,category\n"
                                  "suffix,.dsl.example.net,residential\n"
                                  "substring,cloud,hosted\n"
                                  "substring,example,other\n");
    const auto rules = load_rdns_rules(rules_text);
    BOOST_REQUIRE_EQUAL(rules.size(), 3U);
    ScriptedReverseResolver resolver({{ip(1), "host-1.DSL.Example.NET"},
                                      {ip(2), "vm7.cloud.example.net"},
                                      {ip(3), "dsl.example.net.attacker"},
                                      {ip(4), ""}});
    const auto names = reverse_lookup(resolver, {ip(1), ip(2), ip(3), ip(4), ip(5)});
    BOOST_CHECK(!names.at(ip(5)));
    const auto cats = classify_rdns(names, rules);
    BOOST_CHECK(cats.at(ip(1)) == RdnsCategory::ResidentialISP);
    BOOST_CHECK(cats.at(ip(2)) == RdnsCategory::Hosted);
    BOOST_CHECK(cats.at(ip(3)) == RdnsCategory::Other);
    BOOST_CHECK(cats.at(ip(4)) == RdnsCategory::NoPtr);
    BOOST_CHECK(cats.at(ip(5)) == RdnsCategory::NoPtr);

    for (const char* bad : {"prefix,x,hosted\n", "suffix,,hosted\n", "suffix,x,mobile\n", "suffix,x\n"}) {
        std::istringstream in(bad);
        BOOST_CHECK_THROW(load_rdns_rules(in), MalformedRow);
    }
}

BOOST_AUTO_TEST_SUITE_END()
