// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_MODEL_QUERIES_HPP
#define CHAINLENS_MODEL_QUERIES_HPP

#include <chainlens/common/time.hpp>
#include <chainlens/model/store.hpp>
#include <chainlens/model/types.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chainlens::model {

/// Greatest height whose block timestamp is strictly earlier than cutoff.
/// Throws EmptyChain when no block qualifies.
std::int64_t apply_cutoff(const Store& store, ChainKind chain, Timestamp cutoff);

/// Totals at or below cutoff_height (all stored blocks when absent).
/// tx_volume is the plain sum of transaction values. Throws EmptyChain.
ChainSummary summarize_chain(const Store& store, ChainKind chain, std::optional<std::int64_t> cutoff_height = {});

struct MonthCount {
    YearMonth month;
    std::int64_t count{0};
    bool operator==(const MonthCount&) const = default;
};

/// Transactions per UTC calendar month of their block, ascending, with
/// empty months between the first and last active month filled with 0.
/// Throws EmptyChain when the chain has no blocks in range.
std::vector<MonthCount> monthly_tx_counts(const Store& store, ChainKind chain,
                                          std::optional<std::int64_t> cutoff_height = {});

/// Gap-fills a sparse month → count series into a contiguous ascending one.
std::vector<MonthCount> fill_month_gaps(const std::vector<MonthCount>& sparse);

} // namespace chainlens::model

#endif // CHAINLENS_MODEL_QUERIES_HPP
