// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_IP_HPP
#define CHAINLENS_COMMON_IP_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace chainlens {

/// An IPv4 or IPv6 address. IPv4 occupies the first four bytes; all
/// IPv4 addresses order before IPv6 ones.
class IpAddress
{
public:
    IpAddress() = default;

    static IpAddress v4(std::uint32_t host_order) noexcept;
    static IpAddress v6(const std::array<std::uint8_t, 16>& bytes) noexcept;
    static std::optional<IpAddress> parse(std::string_view text);

    bool is_v6() const noexcept { return v6_; }
    const std::array<std::uint8_t, 16>& bytes() const noexcept { return bytes_; }
    /// Host-order IPv4 value; 0 for IPv6.
    std::uint32_t v4_value() const noexcept;
    std::string to_string() const;

    /// Membership in 10.0.0.0/8, 172.16.0.0/12 or 192.168.0.0/16.
    bool is_private_v4() const noexcept;

    /// True when the leading prefix_len bits equal those of network.
    bool in_prefix(const IpAddress& network, unsigned prefix_len) const noexcept;

    auto operator<=>(const IpAddress&) const = default;

private:
    bool v6_{false};
    std::array<std::uint8_t, 16> bytes_{};
};

} // namespace chainlens

#endif // CHAINLENS_COMMON_IP_HPP
