// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/address.hpp>

#include <chainlens/common/hex.hpp>
#include <chainlens/crypto/keccak.hpp>
#include <chainlens/crypto/rlp.hpp>

#include <algorithm>

namespace chainlens::eth {

Address Address::from_hex(std::string_view text)
{
    return Address{fixed_from_hex<20>(text)};
}

std::string Address::to_hex() const
{
    return chainlens::to_hex(bytes, true);
}

bool Address::is_null() const noexcept
{
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

Address derive_contract_address(const Address& sender, std::uint64_t nonce)
{
    const Bytes encoded = rlp::encode_list({rlp::encode_string(sender.bytes), rlp::encode_uint(nonce)});
    const crypto::Hash256 digest = crypto::keccak256(encoded);
    Address out;
    std::copy(digest.end() - 20, digest.end(), out.bytes.begin());
    return out;
}

} // namespace chainlens::eth
