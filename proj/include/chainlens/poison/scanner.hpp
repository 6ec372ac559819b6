// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_POISON_SCANNER_HPP
#define CHAINLENS_POISON_SCANNER_HPP

#include <chainlens/common/hex.hpp>
#include <chainlens/model/types.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::poison {

struct SignatureEntry {
    std::string format;
    Bytes magic;
    std::size_t offset{0};
    std::string extension;
};

struct SignatureDb {
    std::vector<SignatureEntry> entries;
    std::size_t match_prefix_bytes{2};

    /// The shipped 75-format table.
    static SignatureDb default_db();
    /// CSV rows `format,magic_hex,offset,extension`; '#' lines are comments.
    /// Throws MalformedRow on bad rows, duplicate formats or an empty table.
    static SignatureDb load_csv(std::istream& in);

    std::size_t longest_magic() const noexcept;
};

/// Raw bytes of a transaction input. Throws InvalidHex.
Bytes extract_payload(std::string_view input_hex);

/// Formats whose first min(|magic|, db.match_prefix_bytes) magic bytes occur
/// at their offset in the payload, in table order.
std::vector<std::string> match_signatures(std::span<const std::uint8_t> payload, const SignatureDb& db);

/// Second pass: whether the whole magic of `entry` occurs at its offset.
bool full_magic_match(std::span<const std::uint8_t> payload, const SignatureEntry& entry);

struct ScanRow {
    std::string format;
    std::string tx_hash;
    std::size_t payload_size{0};
    /// Whether the whole magic matched too.
    bool verified{false};
    bool operator==(const ScanRow&) const = default;
};

struct ScanOptions {
    /// When set, each candidate is written as `<tx_hash>.<extension>`.
    std::optional<std::filesystem::path> out_dir;
    /// 0 picks the hardware concurrency.
    unsigned threads{0};
};

struct ScanReport {
    /// Transaction order, then table order.
    std::vector<ScanRow> rows;
    std::map<std::string, std::size_t> counts;
    /// Messages of failed writes; the scan continues past them.
    std::vector<std::string> write_errors;
};

/// Throws InvalidHex naming the transaction on undecodable input.
ScanReport scan_corpus(std::span<const model::Transaction> transactions, const SignatureDb& db,
                       const ScanOptions& options = {});

} // namespace chainlens::poison

#endif // CHAINLENS_POISON_SCANNER_HPP
