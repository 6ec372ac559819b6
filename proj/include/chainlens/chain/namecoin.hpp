// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CHAIN_NAMECOIN_HPP
#define CHAINLENS_CHAIN_NAMECOIN_HPP

#include <chainlens/common/amount.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/model/types.hpp>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chainlens::chain {

using model::NameOpKind;
using model::NameOpPayload;

inline constexpr std::array<NameOpKind, 3> kNameOpKinds{NameOpKind::New, NameOpKind::FirstUpdate,
                                                        NameOpKind::Update};

/// 50 NMC at height 0, halving every 8192 blocks; 0 once the shift empties it.
Amount default_network_fee(std::int64_t height) noexcept;

struct FeeSchedule {
    Amount name_new_fee{kCoin / 100};
    Amount fixed_op_fee{kCoin / 200};
    std::function<Amount(std::int64_t)> network_fee_curve{default_network_fee};
    std::int64_t merge_mining_start_height{19'200};
    /// About 250 days of ten-minute blocks.
    std::int64_t expiry_window_blocks{36'000};
};

class MalformedNameOp : public Error
{
public:
    explicit MalformedNameOp(const std::string& tx_hash)
        : Error("MalformedNameOp: invalid name operation in " + tx_hash), tx_hash_(tx_hash) {}
    const std::string& tx_hash() const noexcept { return tx_hash_; }

private:
    std::string tx_hash_;
};

class AuxPowBeforeActivation : public Error
{
public:
    explicit AuxPowBeforeActivation(std::int64_t height)
        : Error("AuxPowBeforeActivation: merge-mined block at height " + std::to_string(height)), height_(height) {}
    std::int64_t height() const noexcept { return height_; }

private:
    std::int64_t height_;
};

/// The validated name operation of tx, or nullopt when it has none.
/// New must carry a hash and no name; the other kinds must carry a name.
std::optional<NameOpPayload> classify_name_op(const model::Transaction& tx);

Amount expected_fee(NameOpKind kind, std::int64_t height, const FeeSchedule& schedule = {});

struct WeeklyFeeRow {
    IsoWeek week;
    NameOpKind kind{NameOpKind::New};
    Amount paid{0};
    bool operator==(const WeeklyFeeRow&) const = default;
};

/// Sums of paid fees by ISO week of the block and operation kind. One row per
/// week between the first and last active week for every kind observed
/// anywhere, ordered by week then kind. Malformed operations throw.
std::vector<WeeklyFeeRow> weekly_fee_sums(const model::ChainSnapshot& snapshot);

struct ActivityCounts {
    std::int64_t blocks{0};
    std::int64_t transactions{0};
    std::int64_t new_ops{0};
    std::int64_t firstupdate_ops{0};
    std::int64_t update_ops{0};
    bool operator==(const ActivityCounts&) const = default;
};

struct MergeMineSplit {
    ActivityCounts normal;
    ActivityCounts merged;

    struct Row {
        std::string label;
        std::int64_t normal{0};
        std::int64_t merged{0};
        /// Share of merged in the row total, 0 for an empty row.
        double merged_percent{0};
    };
    /// blocks, transactions, new, firstupdate, update.
    std::vector<Row> rows() const;
};

/// Blocks without the AuxPoW flag count as normally mined. Transactions whose
/// block is absent from the snapshot are not counted.
MergeMineSplit merge_mine_split(const model::ChainSnapshot& snapshot, const FeeSchedule& schedule = {});

struct FirstUpdateRecord {
    std::string name;
    std::string tx_hash;
    std::int64_t height{0};
    std::vector<std::int64_t> prior_registration_heights;
    /// Height of the last FirstUpdate or Update before this one.
    std::optional<std::int64_t> last_renewal_height;
};

struct ReregistrationReport {
    std::int64_t firstupdates_on_day{0};
    /// Names whose earlier registration had expired.
    std::vector<FirstUpdateRecord> reregistered;
    /// Names registered before that had not yet expired.
    std::vector<FirstUpdateRecord> anomalies;
};

/// Examines every FirstUpdate whose block falls on the UTC day starting at
/// `day`. Histories link by name; New operations do not participate.
ReregistrationReport detect_reregistrations(const model::ChainSnapshot& snapshot, Timestamp day,
                                            const FeeSchedule& schedule = {});

} // namespace chainlens::chain

#endif // CHAINLENS_CHAIN_NAMECOIN_HPP
