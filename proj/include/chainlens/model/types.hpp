// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_MODEL_TYPES_HPP
#define CHAINLENS_MODEL_TYPES_HPP

#include <chainlens/common/amount.hpp>
#include <chainlens/common/time.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::model {

enum class ChainKind { Ethereum, Namecoin, Peercoin };

/// "eth", "nmc", "ppc"
std::string_view chain_code(ChainKind chain) noexcept;
std::optional<ChainKind> parse_chain(std::string_view code) noexcept;

enum class ProofType { PoW, PoS };

enum class NameOpKind { New, FirstUpdate, Update };

std::string_view name_op_code(NameOpKind kind) noexcept;
std::optional<NameOpKind> parse_name_op(std::string_view code) noexcept;

struct NameOpPayload {
    NameOpKind kind{NameOpKind::New};
    std::optional<std::string> name;
    std::optional<std::string> name_hash;
    Amount paid_fee{0};

    /// New carries a hash; FirstUpdate and Update carry a name.
    bool well_formed() const noexcept;
    bool operator==(const NameOpPayload&) const = default;
};

/// Hashes are stored as lowercase "0x"-prefixed hex.
struct Block {
    ChainKind chain{ChainKind::Ethereum};
    std::int64_t height{0};
    std::string hash;
    std::string parent_hash;
    Timestamp timestamp{0};
    std::optional<bool> is_auxpow;
    std::optional<ProofType> proof;
    std::vector<std::string> tx_hashes;

    bool operator==(const Block&) const = default;
};

struct Transaction {
    ChainKind chain{ChainKind::Ethereum};
    std::string hash;
    std::int64_t block_height{0};
    std::int64_t index_in_block{0};
    std::string sender;
    /// Absent for Ethereum contract creations.
    std::optional<std::string> recipient;
    Amount value{0};
    /// Lowercase "0x"-prefixed hex; "0x" when empty.
    std::string input_data{"0x"};
    std::optional<Amount> fee;
    std::optional<std::uint64_t> gas_limit;
    std::optional<NameOpPayload> name_op;
    /// Contract address reported by the node for a creation, when the dump has it.
    std::optional<std::string> created_address;
    /// Sender nonce, when the dump has it.
    std::optional<std::uint64_t> nonce;

    bool has_empty_input() const noexcept { return input_data.size() <= 2; }
    bool operator==(const Transaction&) const = default;
};

struct ChainSummary {
    ChainKind chain{ChainKind::Ethereum};
    Timestamp first_block_time{0};
    Timestamp cutoff_time{0};
    std::int64_t cutoff_height{0};
    std::int64_t block_count{0};
    std::int64_t tx_count{0};
    /// Sum of transaction values in the smallest unit.
    Amount tx_volume{0};
};

/// An immutable in-memory view of one chain up to a cutoff height.
/// Blocks are sorted by height; transactions by (height, index).
struct ChainSnapshot {
    ChainKind chain{ChainKind::Ethereum};
    std::optional<std::int64_t> cutoff_height;
    std::vector<Block> blocks;
    std::vector<Transaction> transactions;

    /// Nullptr when the block is not part of the snapshot.
    const Block* block_at(std::int64_t height) const noexcept;
};

} // namespace chainlens::model

#endif // CHAINLENS_MODEL_TYPES_HPP
