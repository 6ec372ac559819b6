// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/node.hpp>

#include <chainlens/common/hex.hpp>
#include <chainlens/crypto/keccak.hpp>

#include <algorithm>
#include <cstring>

namespace chainlens::crawler {

NodeId NodeId::from_hex(std::string_view hex)
{
    return NodeId{fixed_from_hex<64>(hex)};
}

std::string NodeId::to_hex() const
{
    return chainlens::to_hex(bytes, false);
}

std::string NodeHash::to_hex() const
{
    return chainlens::to_hex(bytes, false);
}

std::uint32_t NodeHash::prefix(unsigned bits) const noexcept
{
    if (bits == 0) return 0;
    const std::uint32_t top = (std::uint32_t{bytes[0]} << 24) | (std::uint32_t{bytes[1]} << 16) |
                              (std::uint32_t{bytes[2]} << 8) | bytes[3];
    return bits >= 32 ? top : top >> (32 - bits);
}

bool Distance::is_zero() const noexcept
{
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

std::uint64_t Distance::low64() const noexcept
{
    std::uint64_t v = 0;
    for (std::size_t i = 24; i < 32; ++i) v = (v << 8) | bytes[i];
    return v;
}

NodeHash node_hash(const NodeId& id) noexcept
{
    return NodeHash{crypto::keccak256(id.bytes)};
}

Distance xor_distance(const NodeHash& a, const NodeHash& b) noexcept
{
    Distance d;
    for (std::size_t i = 0; i < d.bytes.size(); ++i) d.bytes[i] = a.bytes[i] ^ b.bytes[i];
    return d;
}

std::size_t NodeIdHasher::operator()(const NodeId& id) const noexcept
{
    // Node ids are public keys; any 8 bytes are already uniform.
    std::size_t h = 0;
    std::memcpy(&h, id.bytes.data(), sizeof h);
    return h;
}

} // namespace chainlens::crawler
