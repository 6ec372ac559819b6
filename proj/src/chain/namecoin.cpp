// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/chain/namecoin.hpp>

#include <map>
#include <set>

namespace chainlens::chain {

namespace {

constexpr Amount kLaunchNetworkFee = 50 * kCoin;
constexpr std::int64_t kHalvingInterval = 8192;

} // namespace

Amount default_network_fee(std::int64_t height) noexcept
{
    if (height < 0) return kLaunchNetworkFee;
    const std::int64_t halvings = height / kHalvingInterval;
    return halvings >= 128 ? 0 : kLaunchNetworkFee >> halvings;
}

std::optional<NameOpPayload> classify_name_op(const model::Transaction& tx)
{
    if (!tx.name_op) return std::nullopt;
    const NameOpPayload& op = *tx.name_op;
    const bool ok = op.kind == NameOpKind::New ? (op.name_hash && !op.name) : (op.name && !op.name->empty());
    if (!ok) throw MalformedNameOp(tx.hash);
    return op;
}

Amount expected_fee(NameOpKind kind, std::int64_t height, const FeeSchedule& schedule)
{
    switch (kind) {
    case NameOpKind::New: return schedule.name_new_fee;
    case NameOpKind::Update: return schedule.fixed_op_fee;
    case NameOpKind::FirstUpdate: return schedule.fixed_op_fee + schedule.network_fee_curve(height);
    }
    return 0;
}

std::vector<WeeklyFeeRow> weekly_fee_sums(const model::ChainSnapshot& snapshot)
{
    std::map<std::pair<IsoWeek, NameOpKind>, Amount> sums;
    std::set<NameOpKind> kinds;
    std::optional<IsoWeek> first, last;
    for (const model::Transaction& tx : snapshot.transactions) {
        const auto op = classify_name_op(tx);
        if (!op) continue;
        const model::Block* block = snapshot.block_at(tx.block_height);
        if (!block) continue;
        const IsoWeek week = iso_week_of(block->timestamp);
        sums[{week, op->kind}] += op->paid_fee;
        kinds.insert(op->kind);
        if (!first || week < *first) first = week;
        if (!last || *last < week) last = week;
    }
    std::vector<WeeklyFeeRow> rows;
    if (!first) return rows;
    for (IsoWeek w = *first; w <= *last; w = w.next()) {
        for (const NameOpKind kind : kinds) {
            const auto it = sums.find({w, kind});
            rows.push_back(WeeklyFeeRow{w, kind, it == sums.end() ? Amount{0} : it->second});
        }
    }
    return rows;
}

std::vector<MergeMineSplit::Row> MergeMineSplit::rows() const
{
    auto row = [](std::string label, std::int64_t n, std::int64_t m) {
        const std::int64_t total = n + m;
        return Row{std::move(label), n, m, total == 0 ? 0.0 : 100.0 * static_cast<double>(m) / static_cast<double>(total)};
    };
    return {row("blocks", normal.blocks, merged.blocks),
            row("transactions", normal.transactions, merged.transactions),
            row("new", normal.new_ops, merged.new_ops),
            row("firstupdate", normal.firstupdate_ops, merged.firstupdate_ops),
            row("update", normal.update_ops, merged.update_ops)};
}

MergeMineSplit merge_mine_split(const model::ChainSnapshot& snapshot, const FeeSchedule& schedule)
{
    MergeMineSplit split;
    for (const model::Block& b : snapshot.blocks) {
        const bool aux = b.is_auxpow.value_or(false);
        if (aux && b.height < schedule.merge_mining_start_height) throw AuxPowBeforeActivation(b.height);
        ++(aux ? split.merged : split.normal).blocks;
    }
    for (const model::Transaction& tx : snapshot.transactions) {
        const model::Block* block = snapshot.block_at(tx.block_height);
        if (!block) continue;
        ActivityCounts& c = block->is_auxpow.value_or(false) ? split.merged : split.normal;
        ++c.transactions;
        if (const auto op = classify_name_op(tx)) {
            switch (op->kind) {
            case NameOpKind::New: ++c.new_ops; break;
            case NameOpKind::FirstUpdate: ++c.firstupdate_ops; break;
            case NameOpKind::Update: ++c.update_ops; break;
            }
        }
    }
    return split;
}

ReregistrationReport detect_reregistrations(const model::ChainSnapshot& snapshot, Timestamp day,
                                            const FeeSchedule& schedule)
{
    struct History {
        std::vector<std::int64_t> registrations;
        std::optional<std::int64_t> last_renewal;
    };
    const Timestamp begin = day_start(day);
    const Timestamp end = begin + 86'400;

    ReregistrationReport report;
    std::map<std::string, History> histories;
    for (const model::Transaction& tx : snapshot.transactions) {
        const auto op = classify_name_op(tx);
        if (!op || op->kind == NameOpKind::New) continue;
        History& h = histories[*op->name];
        if (op->kind == NameOpKind::FirstUpdate) {
            const model::Block* block = snapshot.block_at(tx.block_height);
            if (block && block->timestamp >= begin && block->timestamp < end) {
                ++report.firstupdates_on_day;
                if (!h.registrations.empty()) {
                    FirstUpdateRecord rec{*op->name, tx.hash, tx.block_height, h.registrations, h.last_renewal};
                    const bool expired = *h.last_renewal + schedule.expiry_window_blocks < tx.block_height;
                    (expired ? report.reregistered : report.anomalies).push_back(std::move(rec));
                }
            }
            h.registrations.push_back(tx.block_height);
        }
        h.last_renewal = tx.block_height;
    }
    return report;
}

} // namespace chainlens::chain
