// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "context.hpp"

#include <chainlens/bootstrap/ports.hpp>
#include <chainlens/bootstrap/rdns.hpp>
#include <chainlens/bootstrap/seeds.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/crawler/crawler.hpp>
#include <chainlens/crawler/discv4.hpp>
#include <chainlens/crawler/live_transport.hpp>
#include <chainlens/crawler/sim_overlay.hpp>
#include <chainlens/crawler/stats.hpp>

#include <fstream>
#include <sstream>

namespace chainlens::cli {

namespace {

using nlohmann::json;

struct NetArgs {
    std::string sim;
    bool live{false};
    std::string bootnodes;
    unsigned prefix_bits{13};
    std::size_t max_inflight{500};
    std::optional<std::uint64_t> seed;
    std::size_t neighbors{16};
    std::size_t workers{0};
    std::size_t seed_peers{1};
    unsigned timeout_ms{2000};
    std::uint16_t bind_port{0};

    std::string source;
    std::size_t rounds{1};
    std::string script;
    std::uint64_t sim_seed{1};
    std::size_t concurrency{64};
    unsigned connect_timeout_ms{5000};
    std::string rdns_rules;
};

json peer_json(const crawler::PeerInfo& p)
{
    return {{"node_id", p.node_id.to_hex()}, {"ip", p.ip.to_string()}, {"port", p.port}};
}

json stats_json(const crawler::EndpointStats& s)
{
    json per_ip = json::array();
    for (const auto& [ip, n] : s.node_ids_per_ip) per_ip.push_back({{"ip", ip.to_string()}, {"node_ids", n}});
    json hist = json::object();
    for (const auto& [prefix, n] : s.prefix_histogram) hist[std::to_string(prefix)] = n;
    json occupancy = json::object();
    for (const auto& [peers, n] : crawler::prefix_occupancy(s)) occupancy[std::to_string(peers)] = n;
    return {{"unique_node_ids", s.unique_node_ids},
            {"unique_ips", s.unique_ips},
            {"unique_ports", s.unique_ports},
            {"ip_port_combos", s.ip_port_combos},
            {"private_range_ips", s.private_range_ips},
            {"node_ids_per_ip", per_ip},
            {"prefix_bits", s.prefix_bits},
            {"prefix_histogram", hist},
            {"prefix_occupancy", occupancy}};
}

std::vector<crawler::PeerInfo> load_bootnodes(const std::string& path)
{
    std::istringstream in(read_file(path));
    std::vector<crawler::PeerInfo> peers;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        try {
            peers.push_back(crawler::discv4::parse_enode(line.substr(b, e - b + 1)));
        } catch (const Error& ex) {
            throw MalformedRow(ex.what(), n);
        }
    }
    if (peers.empty()) throw Error("no bootnodes in " + path);
    return peers;
}

void run_crawl(Context& ctx, const NetArgs& a)
{
    if (a.sim.empty() == !a.live) throw UsageError("crawl needs exactly one of --sim or --live");
    crawler::CrawlConfig config;
    config.prefix_bits = a.prefix_bits;
    config.neighbor_k = a.neighbors;
    config.max_in_flight = a.max_inflight;
    config.worker_threads = a.workers;
    config.rng_seed = a.seed;
    config.ping_timeout = config.query_timeout = std::chrono::milliseconds(a.timeout_ms);
    config.validate();

    crawler::CrawlReport rep;
    json extra = json::object();
    if (!a.sim.empty()) {
        const json topo = json::parse(read_file(a.sim));
        crawler::SimOverlayConfig sc;
        sc.n_peers = topo.value("n_peers", sc.n_peers);
        sc.degree = topo.value("degree", sc.degree);
        sc.unreachable_fraction = topo.value("unreachable_fraction", sc.unreachable_fraction);
        sc.churn_failure_rate = topo.value("churn", sc.churn_failure_rate);
        sc.rng_seed = topo.value("seed", sc.rng_seed);
        sc.neighbor_k = topo.value("neighbor_k", a.neighbors);
        if (!config.rng_seed) config.rng_seed = sc.rng_seed;
        const crawler::SimOverlay overlay = crawler::build_sim_overlay(sc);
        const std::size_t n_seeds = std::min<std::size_t>(topo.value("seed_peers", a.seed_peers), sc.n_peers);
        if (n_seeds == 0) throw UsageError("at least one seed peer is needed");
        const std::vector<crawler::PeerInfo> seeds(overlay.truth.roster.begin(),
                                                   overlay.truth.roster.begin() + static_cast<std::ptrdiff_t>(n_seeds));
        rep = crawler::crawl(*overlay.transport, seeds, config);
        std::size_t reachable = 0;
        for (const bool r : overlay.truth.reachable) reachable += r ? 1 : 0;
        extra = {{"n_peers", sc.n_peers}, {"reachable_peers", reachable}, {"seed_peers", n_seeds}};
    } else {
        if (a.bootnodes.empty()) throw UsageError("--live needs --bootnodes");
        const std::vector<crawler::PeerInfo> seeds = load_bootnodes(a.bootnodes);
        crawler::LiveTransportConfig lc;
        lc.bind_port = a.bind_port;
        lc.ping_timeout = lc.query_timeout = std::chrono::milliseconds(a.timeout_ms);
        lc.neighbor_k = a.neighbors;
        crawler::LiveUdpTransport transport(lc);
        *ctx.err << "crawling from " << seeds.size() << " bootnode(s) on udp port " << transport.local_port() << '\n';
        rep = crawler::crawl(transport, seeds, config);
        extra = {{"self", transport.self().to_hex()}};
    }

    report::Report r;
    r.table.columns = {"node_id", "ip", "port"};
    json peers = json::array();
    for (const auto& p : rep.known_peers) {
        r.table.add({p.node_id.to_hex(), p.ip.to_string(), p.port});
        peers.push_back(peer_json(p));
    }
    json failed = json::array();
    for (const auto& f : rep.failed_endpoints) {
        failed.push_back({{"ip", f.ip.to_string()}, {"port", f.port}, {"reason", f.reason}});
    }
    r.document = {{"known_peers", peers},
                  {"failed_endpoints", failed},
                  {"stats", stats_json(rep.stats)},
                  {"find_node_queries", rep.find_node_queries},
                  {"ping_attempts", rep.ping_attempts},
                  {"config",
                   {{"prefix_bits", config.prefix_bits},
                    {"max_in_flight", config.max_in_flight},
                    {"neighbor_k", config.neighbor_k},
                    {"rng_seed", config.rng_seed ? json(*config.rng_seed) : json(nullptr)}}},
                  {"transport", extra}};
    ctx.emit(r, report::Format::Json);
}

std::optional<bootstrap::ResolveError> parse_resolve_error(const std::string& s)
{
    if (s == "NXDOMAIN") return bootstrap::ResolveError::NxDomain;
    if (s == "SERVFAIL") return bootstrap::ResolveError::ServFail;
    if (s == "TIMEOUT") return bootstrap::ResolveError::Timeout;
    return std::nullopt;
}

IpAddress parse_ip(const std::string& s)
{
    const auto ip = IpAddress::parse(s);
    if (!ip) throw Error("invalid address '" + s + "'");
    return *ip;
}

/// Script file: {"dns": {name: [[ip,..] | "NXDOMAIN"|"SERVFAIL"|"TIMEOUT", ..]},
///               "connect": {ip: "accepted"|"refused"|"timeout"}, "ptr": {ip: name}}.
struct NetScript {
    json doc;

    json section(const char* key) const
    {
        if (!doc.is_object()) throw Error("script must be a JSON object");
        return doc.value(key, json::object());
    }

    std::unique_ptr<bootstrap::ScriptedResolver> resolver() const
    {
        auto r = std::make_unique<bootstrap::ScriptedResolver>();
        const json dns = section("dns");
        for (const auto& [name, answers] : dns.items()) {
            std::vector<bootstrap::ResolveResult> rs;
            for (const json& ans : answers) {
                if (ans.is_string()) {
                    const auto err = parse_resolve_error(ans.get<std::string>());
                    if (!err) throw Error("unknown DNS outcome '" + ans.get<std::string>() + "'");
                    rs.push_back(bootstrap::ResolveResult::failed(*err));
                } else {
                    bootstrap::ResolveResult res;
                    for (const json& ip : ans) res.ips.push_back(parse_ip(ip.get<std::string>()));
                    rs.push_back(std::move(res));
                }
            }
            r->script(name, std::move(rs));
        }
        return r;
    }

    std::unique_ptr<bootstrap::ScriptedProber> prober() const
    {
        std::map<IpAddress, bootstrap::ConnectResult> m;
        const json connect = section("connect");
        for (const auto& [ip, v] : connect.items()) {
            const std::string s = v.get<std::string>();
            bootstrap::ConnectResult c{};
            if (s == "accepted") c = bootstrap::ConnectResult::Accepted;
            else if (s == "refused") c = bootstrap::ConnectResult::Refused;
            else if (s == "timeout") c = bootstrap::ConnectResult::TimedOut;
            else throw Error("unknown connect outcome '" + s + "'");
            m.emplace(parse_ip(ip), c);
        }
        return std::make_unique<bootstrap::ScriptedProber>(std::move(m));
    }

    std::unique_ptr<bootstrap::ScriptedReverseResolver> reverse() const
    {
        std::map<IpAddress, std::string> m;
        const json ptr = section("ptr");
        for (const auto& [ip, v] : ptr.items()) m.emplace(parse_ip(ip), v.get<std::string>());
        return std::make_unique<bootstrap::ScriptedReverseResolver>(std::move(m));
    }
};

struct Bootstrap {
    bootstrap::SeedSource source;
    bootstrap::SeedHarvest harvest;
    std::optional<NetScript> script;
};

Bootstrap do_harvest(const NetArgs& a)
{
    if (a.live && !a.script.empty()) throw UsageError("--live and --script are exclusive");
    if (a.rounds == 0) throw UsageError("--rounds must be at least 1");
    Bootstrap b;
    std::istringstream src(read_file(a.source));
    b.source = bootstrap::load_seed_source(src);
    std::unique_ptr<bootstrap::Resolver> resolver;
    if (a.live) {
        resolver = std::make_unique<bootstrap::LiveResolver>();
    } else if (!a.script.empty()) {
        b.script = NetScript{json::parse(read_file(a.script))};
        resolver = b.script->resolver();
    } else {
        bootstrap::SimResolverConfig sc;
        sc.seed = a.sim_seed;
        resolver = std::make_unique<bootstrap::SimulatedResolver>(sc);
    }
    b.harvest = bootstrap::harvest_seeds(*resolver, b.source, a.rounds);
    return b;
}

json harvest_json(const bootstrap::SeedHarvest& h)
{
    json rounds = json::array();
    for (const auto& r : h.rounds) {
        rounds.push_back({{"round", r.index}, {"new_ips", r.new_ips}, {"cumulative_unique", r.cumulative_unique}});
    }
    json per_name = json::object();
    for (const auto& [name, results] : h.per_name) {
        json list = json::array();
        for (const auto& res : results) {
            list.push_back({{"ip_count", res.ip_count},
                            {"error", res.error ? json(std::string(bootstrap::resolve_error_name(*res.error)))
                                                : json(nullptr)}});
        }
        per_name[name] = list;
    }
    json ips = json::array();
    for (const IpAddress& ip : h.all_ips) ips.push_back(ip.to_string());
    return {{"rounds", rounds}, {"per_name", per_name}, {"all_ips", ips}};
}

void run_harvest(Context& ctx, const NetArgs& a)
{
    const Bootstrap b = do_harvest(a);
    report::Report r;
    r.table.columns = {"round", "new_ips", "cumulative_unique"};
    for (const auto& round : b.harvest.rounds) r.table.add({round.index, round.new_ips, round.cumulative_unique});
    r.document = harvest_json(b.harvest);
    ctx.emit(r, report::Format::Json);
}

void run_probe(Context& ctx, const NetArgs& a)
{
    const Bootstrap b = do_harvest(a);
    if (b.source.port == 0) throw Error("seed source has no port");
    std::unique_ptr<bootstrap::Prober> prober;
    if (a.live) {
        prober = std::make_unique<bootstrap::LiveProber>(std::chrono::milliseconds(a.connect_timeout_ms));
    } else if (b.script) {
        prober = b.script->prober();
    } else {
        bootstrap::SimProberConfig pc;
        pc.seed = a.sim_seed;
        prober = std::make_unique<bootstrap::SimulatedProber>(pc);
    }
    const bootstrap::PortScan scan = bootstrap::probe_ports(*prober, b.harvest.all_ips, b.source.port, a.concurrency);

    std::map<IpAddress, bootstrap::RdnsCategory> categories;
    std::map<IpAddress, std::optional<std::string>> ptr_names;
    if (!a.rdns_rules.empty()) {
        std::istringstream rules_in(read_file(a.rdns_rules));
        const auto rules = bootstrap::load_rdns_rules(rules_in);
        std::set<IpAddress> open;
        for (const auto& [ip, o] : scan.outcomes) {
            if (o == bootstrap::ProbeOutcome::Open) open.insert(ip);
        }
        std::unique_ptr<bootstrap::ReverseResolver> rev;
        if (a.live) rev = std::make_unique<bootstrap::LiveReverseResolver>();
        else if (b.script) rev = b.script->reverse();
        else rev = std::make_unique<bootstrap::ScriptedReverseResolver>(std::map<IpAddress, std::string>{});
        ptr_names = bootstrap::reverse_lookup(*rev, open);
        categories = bootstrap::classify_rdns(ptr_names, rules);
    }

    report::Report r;
    r.table.columns = {"ip", "outcome"};
    if (!a.rdns_rules.empty()) r.table.columns.insert(r.table.columns.end(), {"ptr", "category"});
    json outcomes = json::array();
    for (const auto& [ip, o] : scan.outcomes) {
        json row = {{"ip", ip.to_string()}, {"outcome", std::string(bootstrap::probe_outcome_name(o))}};
        std::vector<json> cells{ip.to_string(), std::string(bootstrap::probe_outcome_name(o))};
        if (!a.rdns_rules.empty()) {
            const auto c = categories.find(ip);
            const auto n = ptr_names.find(ip);
            const json ptr = n != ptr_names.end() && n->second ? json(*n->second) : json(nullptr);
            const json cat = c != categories.end() ? json(std::string(bootstrap::rdns_category_name(c->second)))
                                                   : json(nullptr);
            row["ptr"] = ptr;
            row["category"] = cat;
            cells.push_back(ptr);
            cells.push_back(cat);
        }
        outcomes.push_back(row);
        r.table.rows.push_back(cells);
    }
    const bootstrap::PortSummary& s = scan.summary;
    json summary = {{"open", s.open},
                    {"filtered", s.filtered},
                    {"closed", s.closed},
                    {"total", s.total()},
                    {"open_percent", s.percent(s.open)},
                    {"filtered_percent", s.percent(s.filtered)},
                    {"closed_percent", s.percent(s.closed)}};
    json rdns = json::object();
    for (const auto& [ip, cat] : categories) {
        const std::string key(bootstrap::rdns_category_name(cat));
        rdns[key] = rdns.value(key, 0) + 1;
    }
    r.document = {{"port", b.source.port},
                  {"harvest", harvest_json(b.harvest)},
                  {"outcomes", outcomes},
                  {"summary", summary},
                  {"rdns_categories", rdns}};
    ctx.emit(r, report::Format::Json);
}

} // namespace

void register_net_commands(CLI::App& app, Context& ctx, Action& action)
{
    auto args = std::make_shared<NetArgs>();

    auto* crawl = app.add_subcommand("crawl", "Discovery crawl over a simulated or live overlay");
    crawl->add_option("--sim", args->sim, "Topology JSON: n_peers, degree, unreachable_fraction, churn, seed");
    crawl->add_flag("--live", args->live, "Crawl the real network over UDP");
    crawl->add_option("--bootnodes", args->bootnodes, "File of enode:// URLs, one per line");
    crawl->add_option("--prefix-bits", args->prefix_bits, "Target prefix length");
    crawl->add_option("--max-inflight", args->max_inflight, "Concurrent queries");
    crawl->add_option("--seed", args->seed, "Target generation seed");
    crawl->add_option("--neighbors", args->neighbors, "Peers per FIND_NODE answer");
    crawl->add_option("--workers", args->workers, "Worker threads (0: automatic)");
    crawl->add_option("--seed-peers", args->seed_peers, "Simulated roster entries used as seeds");
    crawl->add_option("--timeout-ms", args->timeout_ms, "Live ping and query timeout");
    crawl->add_option("--bind-port", args->bind_port, "Live UDP port (0: ephemeral)");
    crawl->callback([&ctx, &action, args] { action = [&ctx, args] { run_crawl(ctx, *args); }; });

    auto* boot = app.add_subcommand("bootstrap", "DNS seed harvesting and port probing");
    boot->require_subcommand(1);
    auto common = [&](CLI::App* sub) {
        sub->add_option("--source", args->source, "Seed source JSON")->required();
        sub->add_option("--rounds", args->rounds, "DNS query rounds");
        sub->add_flag("--live", args->live, "Use real DNS and TCP");
        sub->add_option("--script", args->script, "Scripted DNS/connect/PTR answers (JSON)");
        sub->add_option("--sim-seed", args->sim_seed, "Seed of the simulated resolver and prober");
    };
    auto* harvest = boot->add_subcommand("harvest", "Query the DNS seeds repeatedly");
    common(harvest);
    harvest->callback([&ctx, &action, args] { action = [&ctx, args] { run_harvest(ctx, *args); }; });
    auto* probe = boot->add_subcommand("probe", "Harvest, then probe the protocol port on every address");
    common(probe);
    probe->add_option("--concurrency", args->concurrency, "Connects in flight");
    probe->add_option("--timeout-ms", args->connect_timeout_ms, "Live connect timeout");
    probe->add_option("--rdns-rules", args->rdns_rules, "Reverse-DNS rule CSV for open addresses");
    probe->callback([&ctx, &action, args] { action = [&ctx, args] { run_probe(ctx, *args); }; });
}

} // namespace chainlens::cli
