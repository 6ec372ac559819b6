// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/bootstrap/rdns.hpp>

#include <chainlens/common/csv.hpp>
#include <chainlens/common/errors.hpp>

#include <netdb.h>
#include <netinet/in.h>
#include <sys/socket.h>

#include <algorithm>
#include <cctype>
#include <cstring>

namespace chainlens::bootstrap {

namespace {

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

std::string_view rdns_category_name(RdnsCategory c) noexcept
{
    switch (c) {
    case RdnsCategory::ResidentialISP: return "residential";
    case RdnsCategory::Hosted: return "hosted";
    case RdnsCategory::NoPtr: return "no_ptr";
    case RdnsCategory::Other: return "other";
    }
    return "?";
}

std::vector<RdnsRule> load_rdns_rules(std::istream& in)
{
    std::vector<RdnsRule> rules;
    for (const csv::TableRow& row : csv::read_table(in)) {
        if (row.fields.size() != 3) throw MalformedRow("rdns rule: expected match,pattern,category", row.line);
        RdnsRule r;
        const std::string match = lower(row.fields[0]);
        if (match == "substring") {
            r.match = RdnsRule::Match::Substring;
        } else if (match == "suffix") {
            r.match = RdnsRule::Match::Suffix;
        } else {
            throw MalformedRow("rdns rule: unknown match kind " + row.fields[0], row.line);
        }
        r.pattern = lower(row.fields[1]);
        if (r.pattern.empty()) throw MalformedRow("rdns rule: empty pattern", row.line);
        const std::string cat = lower(row.fields[2]);
        if (cat == "residential") {
            r.category = RdnsCategory::ResidentialISP;
        } else if (cat == "hosted") {
            r.category = RdnsCategory::Hosted;
        } else if (cat == "other") {
            r.category = RdnsCategory::Other;
        } else {
            throw MalformedRow("rdns rule: unknown category " + row.fields[2], row.line);
        }
        rules.push_back(std::move(r));
    }
    return rules;
}

std::map<IpAddress, RdnsCategory> classify_rdns(const std::map<IpAddress, std::optional<std::string>>& names,
                                               const std::vector<RdnsRule>& rules)
{
    std::map<IpAddress, RdnsCategory> out;
    for (const auto& [ip, name] : names) {
        if (!name || name->empty()) {
            out.emplace(ip, RdnsCategory::NoPtr);
            continue;
        }
        const std::string n = lower(*name);
        RdnsCategory cat = RdnsCategory::Other;
        for (const RdnsRule& r : rules) {
            const bool hit = r.match == RdnsRule::Match::Substring ? n.find(r.pattern) != std::string::npos
                                                                   : n.ends_with(r.pattern);
            if (hit) {
                cat = r.category;
                break;
            }
        }
        out.emplace(ip, cat);
    }
    return out;
}

std::optional<std::string> ScriptedReverseResolver::resolve_ptr(const IpAddress& ip)
{
    const auto it = names_.find(ip);
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::string> LiveReverseResolver::resolve_ptr(const IpAddress& ip)
{
    sockaddr_storage addr{};
    socklen_t len = 0;
    if (ip.is_v6()) {
        auto* sin6 = reinterpret_cast<sockaddr_in6*>(&addr);
        sin6->sin6_family = AF_INET6;
        std::memcpy(&sin6->sin6_addr, ip.bytes().data(), 16);
        len = sizeof(sockaddr_in6);
    } else {
        auto* sin = reinterpret_cast<sockaddr_in*>(&addr);
        sin->sin_family = AF_INET;
        sin->sin_addr.s_addr = htonl(ip.v4_value());
        len = sizeof(sockaddr_in);
    }
    char host[NI_MAXHOST];
    if (::getnameinfo(reinterpret_cast<const sockaddr*>(&addr), len, host, sizeof(host), nullptr, 0, NI_NAMEREQD) != 0) {
        return std::nullopt;
    }
    return std::string(host);
}

std::map<IpAddress, std::optional<std::string>> reverse_lookup(ReverseResolver& resolver, const std::set<IpAddress>& ips)
{
    std::map<IpAddress, std::optional<std::string>> out;
    for (const IpAddress& ip : ips) out.emplace(ip, resolver.resolve_ptr(ip));
    return out;
}

} // namespace chainlens::bootstrap
