// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRYPTO_RLP_HPP
#define CHAINLENS_CRYPTO_RLP_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/common/hex.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace chainlens::rlp {

// Recursive Length Prefix encoding.

Bytes encode_string(std::span<const std::uint8_t> payload);
/// Minimal big-endian form; zero encodes as the empty string (0x80).
Bytes encode_uint(std::uint64_t value);
/// Wraps already-encoded items in a list header.
Bytes encode_list(const std::vector<Bytes>& encoded_items);

class DecodeError : public Error
{
public:
    using Error::Error;
};

/// A decoded item: either a byte string or a list of items.
struct Item {
    bool is_list{false};
    Bytes bytes;
    std::vector<Item> items;

    std::uint64_t as_uint() const;
};

/// Decodes exactly one item spanning the whole input.
Item decode(std::span<const std::uint8_t> data);
/// Decodes the first item and ignores whatever follows it.
Item decode_prefix(std::span<const std::uint8_t> data);

} // namespace chainlens::rlp

#endif // CHAINLENS_CRYPTO_RLP_HPP
