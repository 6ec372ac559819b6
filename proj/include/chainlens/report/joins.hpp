// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_REPORT_JOINS_HPP
#define CHAINLENS_REPORT_JOINS_HPP

#include <chainlens/chain/namecoin.hpp>
#include <chainlens/common/amount.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/common/ip.hpp>
#include <chainlens/common/time.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chainlens::report {

class MalformedRateRow : public MalformedRow
{
public:
    MalformedRateRow(const std::string& what, std::size_t line) : MalformedRow("MalformedRateRow: " + what, line) {}
};

class MalformedGeoRow : public MalformedRow
{
public:
    MalformedGeoRow(const std::string& what, std::size_t line) : MalformedRow("MalformedGeoRow: " + what, line) {}
};

/// Decimal places kept for rates.
inline constexpr unsigned kRateDecimals = 8;

/// ISO week → USD per whole coin, scaled by 10^kRateDecimals.
using RateTable = std::map<IsoWeek, Amount>;

/// CSV rows `YYYY-Www,rate`. Throws MalformedRateRow.
RateTable load_rates(std::istream& in);

struct UsdFeeRow {
    chain::WeeklyFeeRow fee;
    /// Exact decimal USD; nullopt when the week has no rate.
    std::optional<std::string> usd;
};

/// usd = paid fee in coins × weekly rate, computed exactly.
std::vector<UsdFeeRow> join_usd(std::span<const chain::WeeklyFeeRow> rows, const RateTable& rates);

struct GeoRule {
    IpAddress network;
    unsigned prefix_len{32};
    std::string country;
};

/// CSV rows `cidr_or_ip,country`. Throws MalformedGeoRow.
std::vector<GeoRule> load_geo(std::istream& in);

/// (country, distinct IPs) by count descending, then country; the longest
/// matching prefix decides, unmatched addresses count under "??".
std::vector<std::pair<std::string, std::size_t>> join_country(std::span<const IpAddress> ips,
                                                              const std::vector<GeoRule>& rules);

} // namespace chainlens::report

#endif // CHAINLENS_REPORT_JOINS_HPP
