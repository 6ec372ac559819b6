// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/bootstrap/seeds.hpp>

#include <chainlens/common/errors.hpp>

#include <nlohmann/json.hpp>

#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>

#include <algorithm>
#include <istream>
#include <iterator>
#include <numeric>
#include <random>

namespace chainlens::bootstrap {

namespace {

std::uint64_t fnv1a(std::string_view s) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : s) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

SeedSource load_seed_source(std::istream& in)
{
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("seed source: ") + e.what());
    }
    if (!doc.is_object()) throw Error("seed source: expected an object");
    SeedSource src;
    const auto port = doc.find("port");
    if (port == doc.end() || !port->is_number_unsigned() || port->get<std::uint64_t>() == 0 ||
        port->get<std::uint64_t>() > 65535) {
        throw Error("seed source: port must be in 1-65535");
    }
    src.port = port->get<std::uint16_t>();
    if (const auto it = doc.find("hardcoded"); it != doc.end()) {
        if (!it->is_array()) throw Error("seed source: hardcoded must be an array");
        for (const auto& v : *it) {
            const auto ip = v.is_string() ? IpAddress::parse(v.get<std::string>()) : std::nullopt;
            if (!ip) throw Error("seed source: invalid hardcoded address " + v.dump());
            src.hardcoded.push_back(*ip);
        }
    }
    if (const auto it = doc.find("dns"); it != doc.end()) {
        if (!it->is_array()) throw Error("seed source: dns must be an array");
        for (const auto& v : *it) {
            if (!v.is_string() || v.get<std::string>().empty()) throw Error("seed source: invalid dns name " + v.dump());
            src.dns_names.push_back(v.get<std::string>());
        }
    }
    return src;
}

std::string_view resolve_error_name(ResolveError e) noexcept
{
    switch (e) {
    case ResolveError::NxDomain: return "NXDOMAIN";
    case ResolveError::ServFail: return "SERVFAIL";
    case ResolveError::Timeout: return "TIMEOUT";
    }
    return "?";
}

void ScriptedResolver::script(const std::string& name, std::vector<ResolveResult> answers)
{
    const std::lock_guard lock(mutex_);
    scripts_[name] = std::move(answers);
}

ResolveResult ScriptedResolver::resolve_a(const std::string& name)
{
    const std::lock_guard lock(mutex_);
    const auto it = scripts_.find(name);
    if (it == scripts_.end() || it->second.empty()) return ResolveResult::failed(ResolveError::NxDomain);
    const std::size_t call = calls_[name]++;
    return it->second[std::min(call, it->second.size() - 1)];
}

SimulatedResolver::SimulatedResolver(SimResolverConfig config) : config_(config)
{
    if (config_.pool_size == 0 || config_.answer_size == 0) throw Error("simulated resolver: empty pool or answer");
    if (config_.servfail_rate < 0 || config_.nxdomain_rate < 0 || config_.servfail_rate + config_.nxdomain_rate > 1) {
        throw Error("simulated resolver: failure rates must be probabilities");
    }
}

std::vector<IpAddress> SimulatedResolver::pool(const std::string& name) const
{
    std::vector<IpAddress> out;
    const std::uint64_t base = config_.seed ^ fnv1a(name);
    for (std::size_t i = 0; i < config_.pool_size; ++i) {
        std::uint64_t x = base + i;
        IpAddress ip;
        do {
            x = splitmix64(x);
            ip = IpAddress::v4(0x01000000u + static_cast<std::uint32_t>(x % 0xDE000000u));
        } while (ip.is_private_v4() || std::find(out.begin(), out.end(), ip) != out.end());
        out.push_back(ip);
    }
    return out;
}

ResolveResult SimulatedResolver::resolve_a(const std::string& name)
{
    std::size_t call = 0;
    {
        const std::lock_guard lock(mutex_);
        call = calls_[name]++;
    }
    std::mt19937_64 rng(splitmix64(config_.seed ^ fnv1a(name)) ^ splitmix64(call));
    const double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (roll < config_.nxdomain_rate) return ResolveResult::failed(ResolveError::NxDomain);
    if (roll < config_.nxdomain_rate + config_.servfail_rate) return ResolveResult::failed(ResolveError::ServFail);
    const std::vector<IpAddress> all = pool(name);
    ResolveResult r;
    std::sample(all.begin(), all.end(), std::back_inserter(r.ips), config_.answer_size, rng);
    return r;
}

ResolveResult LiveResolver::resolve_a(const std::string& name)
{
    addrinfo hints{};
    hints.ai_family = AF_INET;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    const int rc = ::getaddrinfo(name.c_str(), nullptr, &hints, &res);
    if (rc != 0) {
        if (rc == EAI_NONAME || rc == EAI_NODATA) return ResolveResult::failed(ResolveError::NxDomain);
        if (rc == EAI_AGAIN) return ResolveResult::failed(ResolveError::Timeout);
        return ResolveResult::failed(ResolveError::ServFail);
    }
    ResolveResult out;
    for (const addrinfo* p = res; p; p = p->ai_next) {
        const auto* sin = reinterpret_cast<const sockaddr_in*>(p->ai_addr);
        const IpAddress ip = IpAddress::v4(ntohl(sin->sin_addr.s_addr));
        if (std::find(out.ips.begin(), out.ips.end(), ip) == out.ips.end()) out.ips.push_back(ip);
    }
    ::freeaddrinfo(res);
    return out;
}

SeedHarvest harvest_seeds(Resolver& resolver, const SeedSource& source, std::size_t rounds)
{
    if (rounds == 0) throw Error("harvest needs at least one round");
    SeedHarvest h;
    std::set<IpAddress> from_dns;
    for (const std::string& name : source.dns_names) h.per_name[name];
    for (std::size_t round = 0; round < rounds; ++round) {
        const std::size_t before = from_dns.size();
        for (const std::string& name : source.dns_names) {
            const ResolveResult r = resolver.resolve_a(name);
            h.per_name[name].push_back(NameRoundResult{r.ips.size(), r.error});
            from_dns.insert(r.ips.begin(), r.ips.end());
        }
        h.rounds.push_back(HarvestRound{round + 1, from_dns.size() - before, from_dns.size()});
    }
    h.all_ips = from_dns;
    h.all_ips.insert(source.hardcoded.begin(), source.hardcoded.end());
    return h;
}

} // namespace chainlens::bootstrap
