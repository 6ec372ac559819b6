// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_NODE_HPP
#define CHAINLENS_CRAWLER_NODE_HPP

#include <chainlens/common/ip.hpp>

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace chainlens::crawler {

/// 64-byte peer identity (an uncompressed secp256k1 public key without the
/// 0x04 tag on the live network).
struct NodeId {
    std::array<std::uint8_t, 64> bytes{};

    static NodeId from_hex(std::string_view hex);
    std::string to_hex() const;
    auto operator<=>(const NodeId&) const = default;
};

/// Keccak-256 of a NodeId; the coordinate used by the XOR metric.
struct NodeHash {
    std::array<std::uint8_t, 32> bytes{};

    std::string to_hex() const;
    /// Leading `bits` bits as an integer (bits ≤ 32).
    std::uint32_t prefix(unsigned bits) const noexcept;
    auto operator<=>(const NodeHash&) const = default;
};

/// 256-bit unsigned XOR distance, big-endian; compares numerically.
struct Distance {
    std::array<std::uint8_t, 32> bytes{};

    bool is_zero() const noexcept;
    /// Low 64 bits, for tests and diagnostics.
    std::uint64_t low64() const noexcept;
    auto operator<=>(const Distance&) const = default;
};

NodeHash node_hash(const NodeId& id) noexcept;
Distance xor_distance(const NodeHash& a, const NodeHash& b) noexcept;

struct PeerInfo {
    NodeId node_id;
    IpAddress ip;
    std::uint16_t port{0};

    auto operator<=>(const PeerInfo&) const = default;
};

struct NodeIdHasher {
    std::size_t operator()(const NodeId& id) const noexcept;
};

} // namespace chainlens::crawler

#endif // CHAINLENS_CRAWLER_NODE_HPP
