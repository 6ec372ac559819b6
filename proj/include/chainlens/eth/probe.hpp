// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_PROBE_HPP
#define CHAINLENS_ETH_PROBE_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/eth/registry.hpp>
#include <chainlens/eth/selector.hpp>
#include <chainlens/eth/side_records.hpp>

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace chainlens::eth {

struct GasPolicy {
    std::uint64_t base_call_gas{21'000};
    std::uint64_t suicide_refund{24'000};
    std::uint64_t vulnerability_threshold{21'000};

    /// Throws chainlens::Error when the threshold exceeds the base call gas.
    void validate() const;
};

/// Infrastructure failure of an executor (RPC down, scripted error).
class ExecutorFailure : public Error
{
public:
    using Error::Error;
};

struct InvokeOutcome {
    bool terminated{false};
    /// Beneficiary of the termination; nullopt when nothing was sent.
    std::optional<Address> refund_to;
    std::uint64_t gas_used{0};
};

class ContractExecutor
{
public:
    virtual ~ContractExecutor() = default;

    /// Estimated gas for a no-argument call; nullopt when the call reverts.
    virtual std::optional<std::uint64_t> estimate_gas(const Address& contract, const Selector& selector) = 0;
    virtual InvokeOutcome invoke(const Address& contract, const Selector& selector, const Address& caller) = 0;

    /// True when calls must not overlap.
    virtual bool serial() const noexcept { return false; }
};

/// Answers from scripted gas fixtures. Unscripted pairs revert. A contract
/// stops answering once an invocation has terminated it. Thread-safe.
class FixtureExecutor : public ContractExecutor
{
public:
    explicit FixtureExecutor(std::span<const GasFixture> fixtures, bool serial = false);

    std::optional<std::uint64_t> estimate_gas(const Address& contract, const Selector& selector) override;
    InvokeOutcome invoke(const Address& contract, const Selector& selector, const Address& caller) override;
    bool serial() const noexcept override { return serial_; }

    std::size_t invocations() const;

private:
    const GasFixture* lookup(const Address& contract, const Selector& selector) const;

    std::map<std::pair<Address, Selector>, GasFixture> fixtures_;
    bool serial_;
    mutable std::mutex mutex_;
    std::set<Address> dead_;
    std::size_t invocations_{0};
};

enum class RefundDestination { None, Caller, Creator, NullAddress, Other };

std::string_view refund_destination_name(RefundDestination d) noexcept;

struct ProbeResult {
    Address contract;
    /// Selector whose invocation terminated the contract, else the first
    /// selector estimated below the threshold.
    std::optional<Selector> triggering_selector;
    std::uint64_t gas_estimate{0};
    bool confirmed_terminated{false};
    RefundDestination refund_destination{RefundDestination::None};
    /// Set when refund_destination is Other.
    std::optional<Address> refund_address;
    bool suspicious_default_function{false};
    /// Every dictionary selector estimated below the threshold, in dictionary order.
    std::vector<Selector> vulnerable_selectors;
};

struct ProbeFailure {
    Address contract;
    std::string message;
};

struct ProbeBatch {
    /// In input order; contracts with no estimate below the threshold are absent.
    std::vector<ProbeResult> results;
    std::vector<ProbeFailure> failures;
};

struct ProbeOptions {
    /// Account that sends the invocations.
    Address caller;
    /// 0 picks the hardware concurrency. Ignored for serial executors.
    unsigned threads{0};
};

/**
 * Estimates every dictionary selector on every contract. Contracts with at
 * least one estimate below policy.vulnerability_threshold have their
 * candidate selectors invoked in dictionary order until one terminates the
 * contract. A contract below the threshold for the whole dictionary that
 * never terminates is flagged suspicious_default_function. An
 * ExecutorFailure affects only its own contract.
 */
ProbeBatch probe_suicidal(std::span<const ContractRecord> contracts, ContractExecutor& executor,
                          const SelectorDictionary& dictionary, const GasPolicy& policy = {},
                          const ProbeOptions& options = {});

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_PROBE_HPP
