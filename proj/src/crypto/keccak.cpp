// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crypto/keccak.hpp>

#include <algorithm>
#include <bit>

namespace chainlens::crypto {

namespace {

constexpr std::array<std::uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL, 0x8000000080008000ULL,
    0x000000000000808bULL, 0x0000000080000001ULL, 0x8000000080008081ULL, 0x8000000000008009ULL,
    0x000000000000008aULL, 0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL, 0x8000000000008003ULL,
    0x8000000000008002ULL, 0x8000000000000080ULL, 0x000000000000800aULL, 0x800000008000000aULL,
    0x8000000080008081ULL, 0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets and lane permutation for the combined rho/pi step,
// walking the pi cycle starting at lane 1.
constexpr std::array<unsigned, 24> kRho = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                           27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
constexpr std::array<unsigned, 24> kPi = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                                          15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

std::uint64_t load_le64(const std::uint8_t* p) noexcept
{
    std::uint64_t v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

Hash256 sponge(std::span<const std::uint8_t> data, std::uint8_t domain)
{
    constexpr std::size_t rate = 136;
    std::array<std::uint64_t, 25> state{};
    std::size_t offset = 0;
    while (data.size() - offset >= rate) {
        for (std::size_t i = 0; i < rate / 8; ++i) state[i] ^= load_le64(data.data() + offset + 8 * i);
        keccak_f1600(state);
        offset += rate;
    }
    std::array<std::uint8_t, rate> last{};
    std::copy(data.begin() + static_cast<std::ptrdiff_t>(offset), data.end(), last.begin());
    last[data.size() - offset] ^= domain;
    last[rate - 1] ^= 0x80;
    for (std::size_t i = 0; i < rate / 8; ++i) state[i] ^= load_le64(last.data() + 8 * i);
    keccak_f1600(state);
    Hash256 out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(state[i / 8] >> (8 * (i % 8)));
    return out;
}

} // namespace

void keccak_f1600(std::array<std::uint64_t, 25>& a) noexcept
{
    for (const std::uint64_t rc : kRoundConstants) {
        // theta
        std::array<std::uint64_t, 5> c{};
        for (int x = 0; x < 5; ++x) c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
        for (int x = 0; x < 5; ++x) {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) a[y + x] ^= d;
        }
        // rho + pi
        std::uint64_t carry = a[1];
        for (int i = 0; i < 24; ++i) {
            const unsigned j = kPi[i];
            const std::uint64_t tmp = a[j];
            a[j] = std::rotl(carry, static_cast<int>(kRho[i]));
            carry = tmp;
        }
        // chi
        for (int y = 0; y < 25; y += 5) {
            std::array<std::uint64_t, 5> row{};
            for (int x = 0; x < 5; ++x) row[x] = a[y + x];
            for (int x = 0; x < 5; ++x) a[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
        }
        // iota
        a[0] ^= rc;
    }
}

Keccak256& Keccak256::write(std::span<const std::uint8_t> data)
{
    for (const std::uint8_t b : data) {
        buffer_[buffered_++] = b;
        if (buffered_ == kRate) absorb_block();
    }
    return *this;
}

Keccak256& Keccak256::write(std::string_view text)
{
    return write(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void Keccak256::absorb_block()
{
    for (std::size_t i = 0; i < kRate / 8; ++i) state_[i] ^= load_le64(buffer_.data() + 8 * i);
    keccak_f1600(state_);
    buffered_ = 0;
}

Hash256 Keccak256::finalize()
{
    std::fill(buffer_.begin() + static_cast<std::ptrdiff_t>(buffered_), buffer_.end(), std::uint8_t{0});
    buffer_[buffered_] ^= 0x01;
    buffer_[kRate - 1] ^= 0x80;
    absorb_block();
    Hash256 out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<std::uint8_t>(state_[i / 8] >> (8 * (i % 8)));
    state_.fill(0);
    return out;
}

Hash256 keccak256(std::span<const std::uint8_t> data)
{
    return sponge(data, 0x01);
}

Hash256 keccak256(std::string_view text)
{
    return keccak256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

Hash256 sha3_256(std::span<const std::uint8_t> data)
{
    return sponge(data, 0x06);
}

} // namespace chainlens::crypto
