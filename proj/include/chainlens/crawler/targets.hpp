// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_TARGETS_HPP
#define CHAINLENS_CRAWLER_TARGETS_HPP

#include <chainlens/crawler/node.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chainlens::crawler {

inline constexpr unsigned kMaxPrefixBits = 32;

/**
 * One lookup target per hash prefix: element p is a random 64-byte id whose
 * Keccak-256 digest starts with the prefix_bits-bit value p. Ids are drawn
 * from a seeded generator and bucketed by prefix until every bucket holds
 * one, so the result depends only on (prefix_bits, rng_seed).
 *
 * Throws chainlens::Error when prefix_bits > 32. Without a seed the
 * generator is seeded from std::random_device.
 */
std::vector<NodeId> precompute_targets(unsigned prefix_bits, std::optional<std::uint64_t> rng_seed);

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_TARGETS_HPP
