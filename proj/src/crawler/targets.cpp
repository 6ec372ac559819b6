// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/targets.hpp>

#include <chainlens/common/errors.hpp>

#include <random>

namespace chainlens::crawler {

std::vector<NodeId> precompute_targets(unsigned prefix_bits, std::optional<std::uint64_t> rng_seed)
{
    if (prefix_bits > kMaxPrefixBits) throw Error("prefix_bits must be at most 32");
    const std::uint64_t buckets = std::uint64_t{1} << prefix_bits;
    std::mt19937_64 rng(rng_seed ? *rng_seed : std::random_device{}());

    std::vector<NodeId> targets(buckets);
    std::vector<bool> filled(buckets, false);
    std::uint64_t remaining = buckets;
    while (remaining != 0) {
        NodeId candidate;
        for (std::size_t i = 0; i < candidate.bytes.size(); i += 8) {
            const std::uint64_t word = rng();
            for (std::size_t j = 0; j < 8; ++j) candidate.bytes[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
        }
        const std::uint32_t p = node_hash(candidate).prefix(prefix_bits);
        if (!filled[p]) {
            filled[p] = true;
            targets[p] = candidate;
            --remaining;
        }
    }
    return targets;
}

} // namespace chainlens::crawler
