// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_BOOTSTRAP_SEEDS_HPP
#define CHAINLENS_BOOTSTRAP_SEEDS_HPP

#include <chainlens/common/ip.hpp>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::bootstrap {

struct SeedSource {
    std::uint16_t port{0};
    std::vector<IpAddress> hardcoded;
    std::vector<std::string> dns_names;
};

/// {"port":N,"hardcoded":["ip",..],"dns":["name",..]}. Throws chainlens::Error.
SeedSource load_seed_source(std::istream& in);

enum class ResolveError { NxDomain, ServFail, Timeout };

std::string_view resolve_error_name(ResolveError e) noexcept;

struct ResolveResult {
    std::vector<IpAddress> ips;
    std::optional<ResolveError> error;

    static ResolveResult failed(ResolveError e) { return ResolveResult{{}, e}; }
};

class Resolver
{
public:
    virtual ~Resolver() = default;
    /// A records of `name`.
    virtual ResolveResult resolve_a(const std::string& name) = 0;
};

/// Replays a per-name script: the i-th query of a name gets the i-th entry,
/// the last entry repeating. Unscripted names answer NXDOMAIN.
class ScriptedResolver : public Resolver
{
public:
    void script(const std::string& name, std::vector<ResolveResult> answers);
    ResolveResult resolve_a(const std::string& name) override;

private:
    std::mutex mutex_;
    std::map<std::string, std::vector<ResolveResult>> scripts_;
    std::map<std::string, std::size_t> calls_;
};

struct SimResolverConfig {
    /// Addresses behind each name.
    std::size_t pool_size{40};
    /// Addresses returned per answer, drawn from the pool.
    std::size_t answer_size{8};
    double servfail_rate{0.0};
    double nxdomain_rate{0.0};
    std::uint64_t seed{1};
};

/// Round-robin style DNS seed: every answer is a seeded random sample of the
/// name's pool. Answers depend only on (seed, name, query number).
class SimulatedResolver : public Resolver
{
public:
    explicit SimulatedResolver(SimResolverConfig config);
    ResolveResult resolve_a(const std::string& name) override;

    /// Every address the name can ever return.
    std::vector<IpAddress> pool(const std::string& name) const;

private:
    SimResolverConfig config_;
    std::mutex mutex_;
    std::map<std::string, std::size_t> calls_;
};

/// getaddrinfo, IPv4 only.
class LiveResolver : public Resolver
{
public:
    ResolveResult resolve_a(const std::string& name) override;
};

struct HarvestRound {
    std::size_t index{0};
    std::size_t new_ips{0};
    /// Distinct DNS-returned addresses seen so far.
    std::size_t cumulative_unique{0};
    bool operator==(const HarvestRound&) const = default;
};

struct NameRoundResult {
    std::size_t ip_count{0};
    std::optional<ResolveError> error;
    bool operator==(const NameRoundResult&) const = default;
};

struct SeedHarvest {
    std::vector<HarvestRound> rounds;
    std::map<std::string, std::vector<NameRoundResult>> per_name;
    /// DNS answers plus the hard-coded addresses.
    std::set<IpAddress> all_ips;
};

/// Queries every name once per round. Failures are recorded, never thrown.
/// Throws chainlens::Error when rounds is 0.
SeedHarvest harvest_seeds(Resolver& resolver, const SeedSource& source, std::size_t rounds);

} // namespace chainlens::bootstrap

#endif // CHAINLENS_BOOTSTRAP_SEEDS_HPP
