// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_HEX_HPP
#define CHAINLENS_COMMON_HEX_HPP

#include <chainlens/common/errors.hpp>

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens {

using Bytes = std::vector<std::uint8_t>;

/// Drops a leading "0x"/"0X" if present.
std::string_view strip_0x(std::string_view text) noexcept;

/// Decodes hex text (optional 0x prefix). Positions reported by InvalidHex
/// are offsets into the digits after the prefix; an odd digit count is
/// reported at the position of the missing digit.
Bytes from_hex(std::string_view text);

std::string to_hex(std::span<const std::uint8_t> bytes, bool prefix = true);

/// True when text is even-length hex after an optional prefix.
bool is_hex_data(std::string_view text) noexcept;

/// Lowercase hex digits with the prefix removed. Throws InvalidHex.
std::string normalize_hex(std::string_view text);

template <std::size_t N>
std::array<std::uint8_t, N> fixed_from_hex(std::string_view text)
{
    const Bytes raw = from_hex(text);
    if (raw.size() != N) {
        throw Error("expected " + std::to_string(N) + " bytes, got " + std::to_string(raw.size()));
    }
    std::array<std::uint8_t, N> out{};
    std::copy(raw.begin(), raw.end(), out.begin());
    return out;
}

} // namespace chainlens

#endif // CHAINLENS_COMMON_HEX_HPP
