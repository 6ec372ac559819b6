// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_ADDRESS_HPP
#define CHAINLENS_ETH_ADDRESS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chainlens::eth {

struct Address {
    std::array<std::uint8_t, 20> bytes{};

    /// Throws chainlens::Error unless text is 20 bytes of hex.
    static Address from_hex(std::string_view text);
    /// Lowercase, "0x"-prefixed.
    std::string to_hex() const;
    bool is_null() const noexcept;
    auto operator<=>(const Address&) const = default;
};

/// Address of a contract created by a transaction from `sender` with the
/// given account nonce: the last 20 bytes of keccak256(rlp([sender, nonce])).
Address derive_contract_address(const Address& sender, std::uint64_t nonce);

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_ADDRESS_HPP
