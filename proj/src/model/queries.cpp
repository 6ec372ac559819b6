// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/model/queries.hpp>

#include <algorithm>
#include <map>

namespace chainlens::model {

std::int64_t apply_cutoff(const Store& store, ChainKind chain, Timestamp cutoff)
{
    const auto height = store.last_height_before(chain, cutoff);
    if (!height) throw EmptyChain(std::string(chain_code(chain)));
    return *height;
}

ChainSummary summarize_chain(const Store& store, ChainKind chain, std::optional<std::int64_t> cutoff_height)
{
    std::optional<Timestamp> first_time;
    std::optional<Timestamp> last_time;
    std::int64_t blocks = 0;
    std::int64_t last_height = 0;
    store.for_each_block(chain, cutoff_height, [&](const Block& b) {
        if (!first_time) first_time = b.timestamp;
        first_time = std::min(*first_time, b.timestamp);
        last_time = b.timestamp;
        last_height = b.height;
        ++blocks;
    });
    if (blocks == 0) throw EmptyChain(std::string(chain_code(chain)));

    ChainSummary s;
    s.chain = chain;
    s.first_block_time = *first_time;
    s.cutoff_height = last_height;
    s.cutoff_time = std::max(*last_time, *first_time);
    s.block_count = blocks;
    const auto [count, volume] = store.transaction_totals(chain, last_height);
    s.tx_count = count;
    s.tx_volume = volume;
    return s;
}

std::vector<MonthCount> fill_month_gaps(const std::vector<MonthCount>& sparse)
{
    if (sparse.empty()) return {};
    std::map<YearMonth, std::int64_t> by_month;
    for (const MonthCount& m : sparse) by_month[m.month] += m.count;
    std::vector<MonthCount> out;
    const YearMonth last = by_month.rbegin()->first;
    for (YearMonth m = by_month.begin()->first; m <= last; m = m.next()) {
        const auto it = by_month.find(m);
        out.push_back(MonthCount{m, it == by_month.end() ? 0 : it->second});
    }
    return out;
}

std::vector<MonthCount> monthly_tx_counts(const Store& store, ChainKind chain, std::optional<std::int64_t> cutoff_height)
{
    if (store.block_count(chain, cutoff_height) == 0) throw EmptyChain(std::string(chain_code(chain)));
    std::vector<MonthCount> sparse;
    for (const auto& [packed, count] : store.transactions_per_month(chain, cutoff_height)) {
        sparse.push_back(MonthCount{YearMonth::from_packed(packed), count});
    }
    return fill_month_gaps(sparse);
}

} // namespace chainlens::model
