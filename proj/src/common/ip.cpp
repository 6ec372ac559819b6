// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/common/ip.hpp>

#include <algorithm>

#include <arpa/inet.h>

namespace chainlens {

IpAddress IpAddress::v4(std::uint32_t host_order) noexcept
{
    IpAddress ip;
    ip.bytes_[0] = static_cast<std::uint8_t>(host_order >> 24);
    ip.bytes_[1] = static_cast<std::uint8_t>(host_order >> 16);
    ip.bytes_[2] = static_cast<std::uint8_t>(host_order >> 8);
    ip.bytes_[3] = static_cast<std::uint8_t>(host_order);
    return ip;
}

IpAddress IpAddress::v6(const std::array<std::uint8_t, 16>& bytes) noexcept
{
    IpAddress ip;
    ip.v6_ = true;
    ip.bytes_ = bytes;
    return ip;
}

std::optional<IpAddress> IpAddress::parse(std::string_view text)
{
    const std::string s(text);
    in_addr a4{};
    if (inet_pton(AF_INET, s.c_str(), &a4) == 1) {
        return v4(ntohl(a4.s_addr));
    }
    in6_addr a6{};
    if (inet_pton(AF_INET6, s.c_str(), &a6) == 1) {
        std::array<std::uint8_t, 16> b{};
        for (int i = 0; i < 16; ++i) b[i] = a6.s6_addr[i];
        // v4-mapped addresses are treated as plain IPv4.
        const bool mapped = std::all_of(b.begin(), b.begin() + 10, [](auto x) { return x == 0; }) && b[10] == 0xff &&
                            b[11] == 0xff;
        if (mapped) {
            return v4((std::uint32_t{b[12]} << 24) | (std::uint32_t{b[13]} << 16) | (std::uint32_t{b[14]} << 8) | b[15]);
        }
        return v6(b);
    }
    return std::nullopt;
}

std::uint32_t IpAddress::v4_value() const noexcept
{
    if (v6_) return 0;
    return (std::uint32_t{bytes_[0]} << 24) | (std::uint32_t{bytes_[1]} << 16) | (std::uint32_t{bytes_[2]} << 8) |
           bytes_[3];
}

std::string IpAddress::to_string() const
{
    char buf[INET6_ADDRSTRLEN] = {};
    if (v6_) {
        in6_addr a6{};
        for (int i = 0; i < 16; ++i) a6.s6_addr[i] = bytes_[i];
        inet_ntop(AF_INET6, &a6, buf, sizeof buf);
    } else {
        in_addr a4{};
        a4.s_addr = htonl(v4_value());
        inet_ntop(AF_INET, &a4, buf, sizeof buf);
    }
    return buf;
}

bool IpAddress::is_private_v4() const noexcept
{
    if (v6_) return false;
    return bytes_[0] == 10 || (bytes_[0] == 172 && (bytes_[1] & 0xf0) == 16) || (bytes_[0] == 192 && bytes_[1] == 168);
}

bool IpAddress::in_prefix(const IpAddress& network, unsigned prefix_len) const noexcept
{
    if (v6_ != network.v6_) return false;
    const unsigned width = v6_ ? 128 : 32;
    if (prefix_len > width) return false;
    for (unsigned bit = 0; bit < prefix_len; ++bit) {
        const unsigned byte = bit / 8;
        const unsigned mask = 0x80u >> (bit % 8);
        if ((bytes_[byte] & mask) != (network.bytes_[byte] & mask)) return false;
    }
    return true;
}

} // namespace chainlens
