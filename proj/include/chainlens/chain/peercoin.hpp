// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CHAIN_PEERCOIN_HPP
#define CHAINLENS_CHAIN_PEERCOIN_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/model/types.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace chainlens::chain {

class MissingProofTag : public Error
{
public:
    explicit MissingProofTag(std::int64_t height)
        : Error("MissingProofTag: block at height " + std::to_string(height) + " has no proof field"),
          height_(height) {}
    std::int64_t height() const noexcept { return height_; }

private:
    std::int64_t height_;
};

struct ProofMonthRow {
    YearMonth month;
    std::int64_t pos{0};
    std::int64_t pow{0};
    bool operator==(const ProofMonthRow&) const = default;
};

/// Blocks per UTC month split by their proof tag, gap-filled.
std::vector<ProofMonthRow> pos_pow_counts(const model::ChainSnapshot& snapshot);

} // namespace chainlens::chain

#endif // CHAINLENS_CHAIN_PEERCOIN_HPP
