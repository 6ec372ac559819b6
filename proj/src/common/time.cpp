// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/common/time.hpp>

#include <chainlens/common/errors.hpp>

#include <chrono>
#include <cstdio>

namespace chainlens {

namespace {

using std::chrono::days;
using std::chrono::sys_days;
using std::chrono::year_month_day;

constexpr Timestamp kDay = 86400;

Timestamp floor_div(Timestamp a, Timestamp b) noexcept
{
    Timestamp q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

sys_days day_of(Timestamp ts) noexcept
{
    return sys_days{days{floor_div(ts, kDay)}};
}

// Monday of ISO week 1 of iso_year.
sys_days iso_week_one_monday(int iso_year) noexcept
{
    // January 4th is always in week 1.
    const sys_days jan4 = sys_days{std::chrono::year{iso_year} / std::chrono::January / 4};
    const unsigned wd = std::chrono::weekday{jan4}.iso_encoding();
    return jan4 - days{wd - 1};
}

IsoWeek iso_week_of_day(sys_days d) noexcept
{
    const unsigned wd = std::chrono::weekday{d}.iso_encoding();
    const sys_days thursday = d - days{wd - 1} + days{3};
    const int iso_year = int(year_month_day{thursday}.year());
    const auto offset = (thursday - iso_week_one_monday(iso_year)).count();
    return IsoWeek{iso_year, static_cast<unsigned>(offset / 7 + 1)};
}

bool parse_digits(std::string_view text, std::size_t pos, std::size_t count, int& out)
{
    if (pos + count > text.size()) return false;
    int value = 0;
    for (std::size_t i = pos; i < pos + count; ++i) {
        const char c = text[i];
        if (c < '0' || c > '9') return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

Timestamp civil_to_ts(int y, int m, int d)
{
    const year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                             std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) throw Error("invalid calendar date");
    return static_cast<Timestamp>(sys_days{ymd}.time_since_epoch().count()) * kDay;
}

} // namespace

YearMonth YearMonth::next() const noexcept
{
    return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
}

std::string YearMonth::to_string() const
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u", year, month);
    return buf;
}

YearMonth YearMonth::from_packed(int packed) noexcept
{
    return YearMonth{packed / 100, static_cast<unsigned>(packed % 100)};
}

IsoWeek IsoWeek::next() const noexcept
{
    const sys_days monday = iso_week_one_monday(year) + days{7 * (week - 1)};
    return iso_week_of_day(monday + days{7});
}

std::string IsoWeek::to_string() const
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-W%02u", year, week);
    return buf;
}

YearMonth year_month_of(Timestamp ts) noexcept
{
    const year_month_day ymd{day_of(ts)};
    return YearMonth{int(ymd.year()), unsigned(ymd.month())};
}

IsoWeek iso_week_of(Timestamp ts) noexcept
{
    return iso_week_of_day(day_of(ts));
}

IsoWeek parse_iso_week(std::string_view text)
{
    int year = 0;
    int week = 0;
    if (text.size() != 8 || text[4] != '-' || text[5] != 'W' || !parse_digits(text, 0, 4, year) ||
        !parse_digits(text, 6, 2, week) || week < 1 || week > 53) {
        throw Error("not an ISO week (YYYY-Www): " + std::string(text));
    }
    const IsoWeek parsed{year, static_cast<unsigned>(week)};
    // Reject week 53 in years that only have 52.
    const sys_days monday = iso_week_one_monday(year) + days{7 * (week - 1)};
    if (iso_week_of_day(monday) != parsed) throw Error("ISO week out of range: " + std::string(text));
    return parsed;
}

Timestamp day_start(Timestamp ts) noexcept
{
    return floor_div(ts, kDay) * kDay;
}

Timestamp parse_date(std::string_view text)
{
    int y = 0, m = 0, d = 0;
    if (text.size() != 10 || text[4] != '-' || text[7] != '-' || !parse_digits(text, 0, 4, y) ||
        !parse_digits(text, 5, 2, m) || !parse_digits(text, 8, 2, d)) {
        throw Error("not a date (YYYY-MM-DD): " + std::string(text));
    }
    return civil_to_ts(y, m, d);
}

Timestamp parse_rfc3339(std::string_view text)
{
    if (text.size() == 10) return parse_date(text);
    const std::string bad = "not an RFC 3339 timestamp: " + std::string(text);
    if (text.size() < 20 || (text[10] != 'T' && text[10] != 't' && text[10] != ' ') || text[13] != ':' ||
        text[16] != ':') {
        throw Error(bad);
    }
    const Timestamp date = parse_date(text.substr(0, 10));
    int hh = 0, mm = 0, ss = 0;
    if (!parse_digits(text, 11, 2, hh) || !parse_digits(text, 14, 2, mm) || !parse_digits(text, 17, 2, ss) ||
        hh > 23 || mm > 59 || ss > 60) {
        throw Error(bad);
    }
    std::size_t pos = 19;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw Error(bad);
    }
    Timestamp offset = 0;
    if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
        ++pos;
    } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        int oh = 0, om = 0;
        if (pos + 6 != text.size() || text[pos + 3] != ':' || !parse_digits(text, pos + 1, 2, oh) ||
            !parse_digits(text, pos + 4, 2, om)) {
            throw Error(bad);
        }
        offset = (oh * 3600 + om * 60) * (text[pos] == '+' ? 1 : -1);
        pos += 6;
    } else {
        throw Error(bad);
    }
    if (pos != text.size()) throw Error(bad);
    return date + hh * 3600 + mm * 60 + ss - offset;
}

std::string format_rfc3339(Timestamp ts)
{
    const year_month_day ymd{day_of(ts)};
    const Timestamp secs = ts - floor_div(ts, kDay) * kDay;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", int(ymd.year()), unsigned(ymd.month()),
                  unsigned(ymd.day()), static_cast<int>(secs / 3600), static_cast<int>(secs / 60 % 60),
                  static_cast<int>(secs % 60));
    return buf;
}

} // namespace chainlens
