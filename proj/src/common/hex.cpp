// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/common/hex.hpp>

namespace chainlens {

namespace {

int hex_value(char c) noexcept
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char kDigits[] = "0123456789abcdef";

} // namespace

std::string_view strip_0x(std::string_view text) noexcept
{
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        text.remove_prefix(2);
    }
    return text;
}

Bytes from_hex(std::string_view text)
{
    const std::string_view digits = strip_0x(text);
    Bytes out;
    out.reserve(digits.size() / 2);
    for (std::size_t i = 0; i < digits.size(); i += 2) {
        const int hi = hex_value(digits[i]);
        if (hi < 0) throw InvalidHex(i);
        if (i + 1 >= digits.size()) throw InvalidHex(i + 1);
        const int lo = hex_value(digits[i + 1]);
        if (lo < 0) throw InvalidHex(i + 1);
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes, bool prefix)
{
    std::string out;
    out.reserve(bytes.size() * 2 + 2);
    if (prefix) out += "0x";
    for (const std::uint8_t b : bytes) {
        out.push_back(kDigits[b >> 4]);
        out.push_back(kDigits[b & 0x0f]);
    }
    return out;
}

bool is_hex_data(std::string_view text) noexcept
{
    const std::string_view digits = strip_0x(text);
    if (digits.size() % 2 != 0) return false;
    for (const char c : digits) {
        if (hex_value(c) < 0) return false;
    }
    return true;
}

std::string normalize_hex(std::string_view text)
{
    const std::string_view digits = strip_0x(text);
    std::string out;
    out.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const int v = hex_value(digits[i]);
        if (v < 0) throw InvalidHex(i);
        out.push_back(kDigits[v]);
    }
    if (out.size() % 2 != 0) throw InvalidHex(out.size());
    return out;
}

} // namespace chainlens
