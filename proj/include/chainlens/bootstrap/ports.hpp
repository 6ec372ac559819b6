// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_BOOTSTRAP_PORTS_HPP
#define CHAINLENS_BOOTSTRAP_PORTS_HPP

#include <chainlens/common/ip.hpp>

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string_view>

namespace chainlens::bootstrap {

enum class ConnectResult { Accepted, Refused, TimedOut };

enum class ProbeOutcome { Open, Filtered, Closed };

std::string_view probe_outcome_name(ProbeOutcome o) noexcept;

class Prober
{
public:
    virtual ~Prober() = default;
    virtual ConnectResult connect(const IpAddress& ip, std::uint16_t port) = 0;
};

/// Fixed answers per address; anything else times out.
class ScriptedProber : public Prober
{
public:
    explicit ScriptedProber(std::map<IpAddress, ConnectResult> script) : script_(std::move(script)) {}
    ConnectResult connect(const IpAddress& ip, std::uint16_t port) override;

private:
    std::map<IpAddress, ConnectResult> script_;
};

struct SimProberConfig {
    double open_rate{0.36};
    double refused_rate{0.11};
    std::uint64_t seed{1};
};

/// Seeded answers that depend only on (seed, ip, port).
class SimulatedProber : public Prober
{
public:
    explicit SimulatedProber(SimProberConfig config) : config_(config) {}
    ConnectResult connect(const IpAddress& ip, std::uint16_t port) override;

private:
    SimProberConfig config_;
};

/// Full TCP connect with a deadline. Unreachable networks count as timeouts.
class LiveProber : public Prober
{
public:
    explicit LiveProber(std::chrono::milliseconds timeout = std::chrono::seconds(5)) : timeout_(timeout) {}
    ConnectResult connect(const IpAddress& ip, std::uint16_t port) override;

private:
    std::chrono::milliseconds timeout_;
};

struct PortSummary {
    std::size_t open{0};
    std::size_t filtered{0};
    std::size_t closed{0};

    std::size_t total() const noexcept { return open + filtered + closed; }
    /// Percent of the total; 0 when empty.
    double percent(std::size_t part) const noexcept;
    bool operator==(const PortSummary&) const = default;
};

struct PortScan {
    std::map<IpAddress, ProbeOutcome> outcomes;
    PortSummary summary;
};

/// Probes every address with at most `concurrency` connects in flight.
/// Throws chainlens::Error for port 0 or concurrency 0.
PortScan probe_ports(Prober& prober, const std::set<IpAddress>& ips, std::uint16_t port, std::size_t concurrency = 64);

} // namespace chainlens::bootstrap

#endif // CHAINLENS_BOOTSTRAP_PORTS_HPP
