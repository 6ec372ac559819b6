// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRAWLER_DISCV4_HPP
#define CHAINLENS_CRAWLER_DISCV4_HPP

#include <chainlens/common/hex.hpp>
#include <chainlens/crawler/node.hpp>
#include <chainlens/crypto/rlp.hpp>
#include <chainlens/crypto/secp256k1.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace chainlens::crawler::discv4 {

// Node discovery v4 wire format:
//   hash(32) || signature(65) || type(1) || rlp(payload)
// hash = keccak256(signature || type || payload), and the signature covers
// keccak256(type || payload). The signer's public key is the sender's NodeId.

enum class PacketType : std::uint8_t { Ping = 1, Pong = 2, FindNode = 3, Neighbors = 4 };

inline constexpr std::size_t kMaxPacketSize = 1280;
inline constexpr std::size_t kHeaderSize = 32 + 65;
/// Nodes per Neighbors packet that keep it under kMaxPacketSize.
inline constexpr std::size_t kNodesPerPacket = 12;

struct Endpoint {
    IpAddress ip;
    std::uint16_t udp{0};
    std::uint16_t tcp{0};
    bool operator==(const Endpoint&) const = default;
};

struct Ping {
    std::uint64_t version{4};
    Endpoint from;
    Endpoint to;
    std::uint64_t expiration{0};
};

struct Pong {
    Endpoint to;
    crypto::Hash256 ping_hash{};
    std::uint64_t expiration{0};
};

struct FindNode {
    NodeId target;
    std::uint64_t expiration{0};
};

struct Neighbors {
    /// The UDP port goes into PeerInfo::port; TCP ports are dropped.
    std::vector<PeerInfo> nodes;
    std::uint64_t expiration{0};
};

Bytes encode_payload(const Ping& p);
Bytes encode_payload(const Pong& p);
Bytes encode_payload(const FindNode& p);
Bytes encode_payload(const Neighbors& p);

struct Encoded {
    Bytes packet;
    crypto::Hash256 hash{};
};

Encoded encode_packet(const secp256k1::PrivateKey& key, PacketType type, std::span<const std::uint8_t> payload);

struct Decoded {
    crypto::Hash256 hash{};
    NodeId sender;
    std::uint8_t type{0};
    /// First RLP item of the payload; anything after it is ignored.
    rlp::Item payload;
};

/// Nullopt for packets that are short, fail the hash check, carry an
/// unrecoverable signature or have an undecodable payload.
std::optional<Decoded> decode_packet(std::span<const std::uint8_t> packet);

/// Payload parsers; extra list elements are ignored. Throw rlp::DecodeError.
Ping parse_ping(const rlp::Item& item);
Pong parse_pong(const rlp::Item& item);
FindNode parse_find_node(const rlp::Item& item);
Neighbors parse_neighbors(const rlp::Item& item);

/// The NodeId of a private key.
NodeId node_id_of(const secp256k1::PrivateKey& key);

/// Parses "enode://<128 hex>@host:port[?discport=N]" with a literal IP host.
/// Throws chainlens::Error.
PeerInfo parse_enode(std::string_view url);

} // namespace chainlens::crawler::discv4

#endif // CHAINLENS_CRAWLER_DISCV4_HPP
