// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/report/joins.hpp>

#include <chainlens/common/csv.hpp>

#include <algorithm>
#include <charconv>
#include <set>

namespace chainlens::report {

RateTable load_rates(std::istream& in)
{
    RateTable rates;
    for (const csv::TableRow& row : csv::read_table(in)) {
        if (row.fields.size() != 2) throw MalformedRateRow("expected week,rate", row.line);
        IsoWeek week;
        try {
            week = parse_iso_week(row.fields[0]);
        } catch (const Error&) {
            throw MalformedRateRow("invalid ISO week '" + row.fields[0] + "'", row.line);
        }
        try {
            rates[week] = parse_units(row.fields[1], kRateDecimals);
        } catch (const Error&) {
            throw MalformedRateRow("invalid rate '" + row.fields[1] + "'", row.line);
        }
    }
    return rates;
}

std::vector<UsdFeeRow> join_usd(std::span<const chain::WeeklyFeeRow> rows, const RateTable& rates)
{
    std::vector<UsdFeeRow> out;
    for (const chain::WeeklyFeeRow& r : rows) {
        UsdFeeRow u{r, std::nullopt};
        if (const auto it = rates.find(r.week); it != rates.end()) {
            // Coin units carry 8 decimals and rates kRateDecimals more.
            u.usd = format_units(r.paid * it->second, 8 + kRateDecimals);
        }
        out.push_back(std::move(u));
    }
    return out;
}

std::vector<GeoRule> load_geo(std::istream& in)
{
    std::vector<GeoRule> rules;
    for (const csv::TableRow& row : csv::read_table(in)) {
        if (row.fields.size() != 2 || row.fields[1].empty()) throw MalformedGeoRow("expected cidr,country", row.line);
        const std::string& spec = row.fields[0];
        const auto slash = spec.find('/');
        const auto ip = IpAddress::parse(std::string_view(spec).substr(0, slash));
        if (!ip) throw MalformedGeoRow("invalid address '" + spec + "'", row.line);
        const unsigned max_len = ip->is_v6() ? 128 : 32;
        unsigned len = max_len;
        if (slash != std::string::npos) {
            const std::string_view text = std::string_view(spec).substr(slash + 1);
            const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), len);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || len > max_len) {
                throw MalformedGeoRow("invalid prefix length in '" + spec + "'", row.line);
            }
        }
        rules.push_back(GeoRule{*ip, len, row.fields[1]});
    }
    return rules;
}

std::vector<std::pair<std::string, std::size_t>> join_country(std::span<const IpAddress> ips,
                                                              const std::vector<GeoRule>& rules)
{
    std::map<std::string, std::size_t> counts;
    const std::set<IpAddress> distinct(ips.begin(), ips.end());
    for (const IpAddress& ip : distinct) {
        const GeoRule* best = nullptr;
        for (const GeoRule& r : rules) {
            if (r.network.is_v6() != ip.is_v6() || !ip.in_prefix(r.network, r.prefix_len)) continue;
            if (!best || r.prefix_len > best->prefix_len) best = &r;
        }
        ++counts[best ? best->country : "??"];
    }
    std::vector<std::pair<std::string, std::size_t>> out(counts.begin(), counts.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    return out;
}

} // namespace chainlens::report
