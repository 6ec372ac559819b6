// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/chain/peercoin.hpp>

#include <map>

namespace chainlens::chain {

std::vector<ProofMonthRow> pos_pow_counts(const model::ChainSnapshot& snapshot)
{
    std::map<YearMonth, ProofMonthRow> by_month;
    for (const model::Block& b : snapshot.blocks) {
        if (!b.proof) throw MissingProofTag(b.height);
        const YearMonth m = year_month_of(b.timestamp);
        ProofMonthRow& row = by_month[m];
        row.month = m;
        ++(*b.proof == model::ProofType::PoS ? row.pos : row.pow);
    }
    std::vector<ProofMonthRow> rows;
    if (by_month.empty()) return rows;
    const YearMonth last = by_month.rbegin()->first;
    for (YearMonth m = by_month.begin()->first; m <= last; m = m.next()) {
        const auto it = by_month.find(m);
        rows.push_back(it == by_month.end() ? ProofMonthRow{m} : it->second);
    }
    return rows;
}

} // namespace chainlens::chain
