// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/analytics.hpp>

#include <algorithm>
#include <map>

namespace chainlens::eth {

std::string_view tx_class_name(TxClass c) noexcept
{
    switch (c) {
    case TxClass::ToAccount: return "to_account";
    case TxClass::ToContract: return "to_contract";
    case TxClass::CreateContract: return "create_contract";
    case TxClass::ZombieCreate: return "zombie_create";
    }
    return "?";
}

TxClass classify_transaction(const model::Transaction& tx, const ContractRegistry& registry)
{
    if (!tx.recipient) return tx.has_empty_input() ? TxClass::ZombieCreate : TxClass::CreateContract;
    return registry.is_contract_at(Address::from_hex(*tx.recipient), tx.block_height, tx.index_in_block)
               ? TxClass::ToContract
               : TxClass::ToAccount;
}

std::vector<MonthlyClassCounts> monthly_class_counts(const model::ChainSnapshot& snapshot,
                                                     const ContractRegistry& registry)
{
    std::map<YearMonth, MonthlyClassCounts> by_month;
    for (const model::Transaction& tx : snapshot.transactions) {
        const model::Block* block = snapshot.block_at(tx.block_height);
        if (!block) continue;
        const YearMonth month = year_month_of(block->timestamp);
        MonthlyClassCounts& row = by_month[month];
        row.month = month;
        switch (classify_transaction(tx, registry)) {
        case TxClass::ToAccount: ++row.to_account; break;
        case TxClass::ToContract: ++row.to_contract; break;
        case TxClass::CreateContract: ++row.create_contract; break;
        case TxClass::ZombieCreate: ++row.zombie_create; break;
        }
    }
    std::vector<MonthlyClassCounts> out;
    if (by_month.empty()) return out;
    const YearMonth last = by_month.rbegin()->first;
    for (YearMonth m = by_month.begin()->first; m <= last; m = m.next()) {
        const auto it = by_month.find(m);
        out.push_back(it == by_month.end() ? MonthlyClassCounts{m} : it->second);
    }
    return out;
}

std::vector<PrecreationFunding> find_precreation_funding(const model::ChainSnapshot& snapshot,
                                                         const ContractRegistry& registry)
{
    std::vector<PrecreationFunding> out;
    for (const model::Transaction& tx : snapshot.transactions) {
        if (!tx.recipient || tx.value == 0) continue;
        const Address to = Address::from_hex(*tx.recipient);
        const ContractRecord* r = registry.find(to);
        if (r && r->creation_height > tx.block_height) {
            out.push_back(PrecreationFunding{tx.hash, to, tx.block_height, r->creation_height, tx.value});
        }
    }
    return out;
}

ZombieReport zombie_report(const ContractRegistry& registry, std::size_t top_k)
{
    ZombieReport report;
    std::vector<ContractRecord> zombies;
    for (ContractRecord& r : registry.records()) {
        if (r.zombie) zombies.push_back(std::move(r));
    }
    std::map<Address, std::int64_t> per_creator;
    for (const ContractRecord& z : zombies) {
        ++report.count;
        report.total_balance += z.endowment;
        if (!report.cdf.empty() && report.cdf.back().first == z.creation_height) {
            ++report.cdf.back().second;
        } else {
            report.cdf.emplace_back(z.creation_height, report.count);
        }
        ++per_creator[z.creator];
    }
    report.per_creator.assign(per_creator.begin(), per_creator.end());
    std::stable_sort(report.per_creator.begin(), report.per_creator.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::stable_sort(zombies.begin(), zombies.end(),
                     [](const ContractRecord& a, const ContractRecord& b) { return a.endowment > b.endowment; });
    if (zombies.size() > top_k) zombies.resize(top_k);
    report.top_by_balance = std::move(zombies);
    return report;
}

std::vector<LifetimeBucket> bucket_lifetimes(const std::vector<std::int64_t>& lifetimes,
                                             const std::vector<std::int64_t>& edges)
{
    if (lifetimes.empty()) return {};
    std::vector<LifetimeBucket> buckets;
    for (const std::int64_t e : edges) buckets.push_back(LifetimeBucket{e, 0});
    buckets.push_back(LifetimeBucket{std::nullopt, 0});
    for (const std::int64_t life : lifetimes) {
        const auto it = std::lower_bound(edges.begin(), edges.end(), life);
        ++buckets[static_cast<std::size_t>(it - edges.begin())].count;
    }
    return buckets;
}

std::vector<LifetimeBucket> lifetime_histogram(const ContractRegistry& registry, const std::vector<std::int64_t>& edges)
{
    if (!std::is_sorted(edges.begin(), edges.end()) ||
        std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw Error("lifetime bucket edges must be strictly increasing");
    }
    std::vector<std::int64_t> lifetimes;
    for (const ContractRecord& r : registry.records()) {
        if (r.termination_height) lifetimes.push_back(*r.termination_height - r.creation_height);
    }
    return bucket_lifetimes(lifetimes, edges);
}

} // namespace chainlens::eth
