// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/common/amount.hpp>

#include <chainlens/common/errors.hpp>

#include <algorithm>

namespace chainlens {

Amount parse_amount(std::string_view text)
{
    if (text.empty()) throw Error("empty amount");
    constexpr Amount kMax = ~Amount{0};
    Amount value = 0;
    for (const char c : text) {
        if (c < '0' || c > '9') throw Error("amount is not a non-negative decimal: " + std::string(text));
        const unsigned digit = static_cast<unsigned>(c - '0');
        if (value > (kMax - digit) / 10) throw Error("amount overflows 128 bits: " + std::string(text));
        value = value * 10 + digit;
    }
    return value;
}

std::string amount_to_string(Amount value)
{
    if (value == 0) return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string format_units(Amount value, unsigned decimals)
{
    std::string digits = amount_to_string(value);
    if (decimals == 0) return digits;
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');
    std::string whole = digits.substr(0, digits.size() - decimals);
    std::string frac = digits.substr(digits.size() - decimals);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return frac.empty() ? whole : whole + "." + frac;
}

Amount parse_units(std::string_view text, unsigned decimals)
{
    const auto dot = text.find('.');
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() || (dot != std::string_view::npos && frac.empty())) {
        throw Error("invalid decimal '" + std::string(text) + "'");
    }
    if (frac.size() > decimals) throw Error("too many fractional digits in '" + std::string(text) + "'");
    std::string digits(whole);
    digits += frac;
    digits.append(decimals - frac.size(), '0');
    return parse_amount(digits);
}

} // namespace chainlens
