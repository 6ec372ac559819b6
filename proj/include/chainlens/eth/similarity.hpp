// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_SIMILARITY_HPP
#define CHAINLENS_ETH_SIMILARITY_HPP

#include <chainlens/eth/registry.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::eth {

/// Unit-cost edit distance, or nullopt once it provably exceeds `cutoff`.
/// Only the diagonal band of width 2*cutoff+1 is evaluated.
std::optional<std::size_t> levenshtein(std::string_view a, std::string_view b, std::size_t cutoff);

/// Distance between two bytecodes over their lowercase hex text without "0x".
std::optional<std::size_t> bytecode_distance(std::string_view a_hex, std::string_view b_hex, std::size_t cutoff);

struct SimilarityBuckets {
    std::size_t exact{0};
    std::size_t minor{100};
    /// Also the cutoff: larger distances are discarded.
    std::size_t heavy{1000};

    void validate() const;
};

struct SimilarityReference {
    std::string name;
    /// Compiled bytecode, hex.
    std::string code;
    bool optimized{false};
};

struct SimilarityRow {
    std::string name;
    bool optimized{false};
    /// Reference size in bytes.
    std::size_t size{0};
    std::size_t exact{0};
    std::size_t minor{0};
    std::size_t heavy{0};

    bool operator==(const SimilarityRow&) const = default;
};

/// One row per reference, in input order. Contracts without code are skipped.
std::vector<SimilarityRow> bucket_similarity(std::span<const ContractRecord> corpus,
                                             std::span<const SimilarityReference> references,
                                             const SimilarityBuckets& buckets = {}, unsigned threads = 0);

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_SIMILARITY_HPP
