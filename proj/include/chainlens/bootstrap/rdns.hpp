// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_BOOTSTRAP_RDNS_HPP
#define CHAINLENS_BOOTSTRAP_RDNS_HPP

#include <chainlens/common/ip.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::bootstrap {

enum class RdnsCategory { ResidentialISP, Hosted, NoPtr, Other };

std::string_view rdns_category_name(RdnsCategory c) noexcept;

struct RdnsRule {
    enum class Match { Substring, Suffix } match{Match::Substring};
    /// Compared case-insensitively.
    std::string pattern;
    RdnsCategory category{RdnsCategory::Other};
};

/// CSV rows `substring|suffix,pattern,residential|hosted|other`. Throws MalformedRow.
std::vector<RdnsRule> load_rdns_rules(std::istream& in);

/// First matching rule wins; no PTR gives NoPtr, no match Other.
std::map<IpAddress, RdnsCategory> classify_rdns(const std::map<IpAddress, std::optional<std::string>>& names,
                                               const std::vector<RdnsRule>& rules);

class ReverseResolver
{
public:
    virtual ~ReverseResolver() = default;
    virtual std::optional<std::string> resolve_ptr(const IpAddress& ip) = 0;
};

class ScriptedReverseResolver : public ReverseResolver
{
public:
    explicit ScriptedReverseResolver(std::map<IpAddress, std::string> names) : names_(std::move(names)) {}
    std::optional<std::string> resolve_ptr(const IpAddress& ip) override;

private:
    std::map<IpAddress, std::string> names_;
};

/// getnameinfo with NI_NAMEREQD.
class LiveReverseResolver : public ReverseResolver
{
public:
    std::optional<std::string> resolve_ptr(const IpAddress& ip) override;
};

std::map<IpAddress, std::optional<std::string>> reverse_lookup(ReverseResolver& resolver,
                                                               const std::set<IpAddress>& ips);

} // namespace chainlens::bootstrap

#endif // CHAINLENS_BOOTSTRAP_RDNS_HPP
