// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRYPTO_KECCAK_HPP
#define CHAINLENS_CRYPTO_KECCAK_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

namespace chainlens::crypto {

using Hash256 = std::array<std::uint8_t, 32>;

/**
 * Incremental Keccak-256 with the original 0x01 domain padding, as used by
 * Ethereum for node hashes, addresses and function selectors. This is NOT
 * FIPS-202 SHA3-256 (which pads with 0x06); the two disagree on every input.
 */
class Keccak256
{
public:
    Keccak256& write(std::span<const std::uint8_t> data);
    Keccak256& write(std::string_view text);
    Hash256 finalize();

private:
    static constexpr std::size_t kRate = 136;

    void absorb_block();

    std::array<std::uint64_t, 25> state_{};
    std::array<std::uint8_t, kRate> buffer_{};
    std::size_t buffered_{0};
};

Hash256 keccak256(std::span<const std::uint8_t> data);
Hash256 keccak256(std::string_view text);

/// FIPS-202 SHA3-256, same permutation with 0x06 padding. Kept for
/// distinguishing the two variants in tests and diagnostics.
Hash256 sha3_256(std::span<const std::uint8_t> data);

/// The Keccak-f[1600] permutation.
void keccak_f1600(std::array<std::uint64_t, 25>& state) noexcept;

} // namespace chainlens::crypto

#endif // CHAINLENS_CRYPTO_KECCAK_HPP
