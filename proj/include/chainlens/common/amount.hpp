// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_AMOUNT_HPP
#define CHAINLENS_COMMON_AMOUNT_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace chainlens {

/// Currency value in the smallest unit of its chain (Wei, or 1e-8 NMC/PPC).
/// 128 bits hold any Ether amount ever issued with room for sums.
using Amount = unsigned __int128;

/// Units per whole NMC/PPC coin.
inline constexpr std::int64_t kCoin = 100'000'000;

/// Parses a non-negative decimal integer. Throws chainlens::Error on
/// anything else, including overflow.
Amount parse_amount(std::string_view text);

std::string amount_to_string(Amount value);

/// Renders `value` as a decimal with `decimals` fractional digits,
/// trailing zeros trimmed ("1.5", "0.01", "3").
std::string format_units(Amount value, unsigned decimals);

/// Inverse of format_units: "0.5" with 8 decimals gives 50000000. Throws
/// chainlens::Error on signs, exponents or excess fractional digits.
Amount parse_units(std::string_view text, unsigned decimals);

} // namespace chainlens

#endif // CHAINLENS_COMMON_AMOUNT_HPP
