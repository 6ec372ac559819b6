// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_ANALYTICS_HPP
#define CHAINLENS_ETH_ANALYTICS_HPP

#include <chainlens/common/amount.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/eth/registry.hpp>
#include <chainlens/model/types.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chainlens::eth {

enum class TxClass { ToAccount, ToContract, CreateContract, ZombieCreate };

std::string_view tx_class_name(TxClass c) noexcept;

/// No recipient and empty input → ZombieCreate; no recipient → CreateContract;
/// recipient already a contract at the transaction's position → ToContract;
/// otherwise ToAccount.
TxClass classify_transaction(const model::Transaction& tx, const ContractRegistry& registry);

struct MonthlyClassCounts {
    YearMonth month;
    std::int64_t to_account{0};
    std::int64_t to_contract{0};
    std::int64_t create_contract{0};
    std::int64_t zombie_create{0};

    std::int64_t total() const noexcept { return to_account + to_contract + create_contract + zombie_create; }
};

/// Per-UTC-month class counts, contiguous from first to last active month.
/// Transactions whose block is missing from the snapshot are skipped.
std::vector<MonthlyClassCounts> monthly_class_counts(const model::ChainSnapshot& snapshot,
                                                     const ContractRegistry& registry);

struct PrecreationFunding {
    std::string funding_tx;
    Address contract;
    std::int64_t funding_height{0};
    std::int64_t creation_height{0};
    Amount value{0};
};

/// Value-bearing transactions to an address whose contract is created in a
/// strictly later block. Ordered by funding position.
std::vector<PrecreationFunding> find_precreation_funding(const model::ChainSnapshot& snapshot,
                                                         const ContractRegistry& registry);

struct ZombieReport {
    std::int64_t count{0};
    Amount total_balance{0};
    /// (creation height, zombies created at or below it), one point per height.
    std::vector<std::pair<std::int64_t, std::int64_t>> cdf;
    /// Largest endowments first; ties by creation order.
    std::vector<ContractRecord> top_by_balance;
    /// Zombies per creator, most first; ties by address.
    std::vector<std::pair<Address, std::int64_t>> per_creator;
};

/// Zombie balances are their creation endowments.
ZombieReport zombie_report(const ContractRegistry& registry, std::size_t top_k = 10);

struct LifetimeBucket {
    /// Inclusive upper bound in blocks; nullopt for the open last bucket.
    std::optional<std::int64_t> upper;
    std::int64_t count{0};
    bool operator==(const LifetimeBucket&) const = default;
};

inline const std::vector<std::int64_t> kDefaultLifetimeEdges{100, 10'000};

/// Histogram of termination_height - creation_height over terminated
/// contracts, buckets closed above: (-inf, e0], (e0, e1], ..., (e_last, inf).
/// Empty when no contract was terminated.
std::vector<LifetimeBucket> lifetime_histogram(const ContractRegistry& registry,
                                               const std::vector<std::int64_t>& edges = kDefaultLifetimeEdges);

/// Bucketing core, exposed for callers that already hold lifetimes.
std::vector<LifetimeBucket> bucket_lifetimes(const std::vector<std::int64_t>& lifetimes,
                                             const std::vector<std::int64_t>& edges);

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_ANALYTICS_HPP
