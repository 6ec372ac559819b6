// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_TIME_HPP
#define CHAINLENS_COMMON_TIME_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chainlens {

/// Seconds since the Unix epoch, UTC.
using Timestamp = std::int64_t;

struct YearMonth {
    int year{1970};
    unsigned month{1};

    auto operator<=>(const YearMonth&) const = default;
    YearMonth next() const noexcept;
    /// "YYYY-MM"
    std::string to_string() const;
    /// Packed as year*100+month, the form kept in the month index.
    int packed() const noexcept { return year * 100 + static_cast<int>(month); }
    static YearMonth from_packed(int packed) noexcept;
};

struct IsoWeek {
    int year{1970};
    unsigned week{1};

    auto operator<=>(const IsoWeek&) const = default;
    IsoWeek next() const noexcept;
    /// "YYYY-Www"
    std::string to_string() const;
};

YearMonth year_month_of(Timestamp ts) noexcept;
IsoWeek iso_week_of(Timestamp ts) noexcept;
/// Parses "YYYY-Www". Throws chainlens::Error.
IsoWeek parse_iso_week(std::string_view text);

/// Start of the UTC day containing ts.
Timestamp day_start(Timestamp ts) noexcept;

/// Accepts "YYYY-MM-DDTHH:MM:SS[.frac](Z|±HH:MM)" and a bare "YYYY-MM-DD"
/// (midnight UTC). Throws chainlens::Error.
Timestamp parse_rfc3339(std::string_view text);
/// "YYYY-MM-DD" → midnight UTC. Throws chainlens::Error.
Timestamp parse_date(std::string_view text);
std::string format_rfc3339(Timestamp ts);

} // namespace chainlens

#endif // CHAINLENS_COMMON_TIME_HPP
