// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CRYPTO_SECP256K1_HPP
#define CHAINLENS_CRYPTO_SECP256K1_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/crypto/keccak.hpp>

#include <array>
#include <cstdint>
#include <optional>

namespace chainlens::secp256k1 {

using crypto::Hash256;

using PrivateKey = std::array<std::uint8_t, 32>;
/// Uncompressed point without the 0x04 tag: x || y.
using PublicKey = std::array<std::uint8_t, 64>;
/// r || s || v with v in {0, 1}; s is always in the lower half of the order.
using RecoverableSignature = std::array<std::uint8_t, 65>;

class CryptoError : public Error
{
public:
    using Error::Error;
};

/// Uniformly random valid key from the OpenSSL RNG.
PrivateKey generate_private_key();

/// Throws CryptoError when the key is zero or not below the group order.
PublicKey public_key(const PrivateKey& key);

RecoverableSignature sign(const PrivateKey& key, const Hash256& digest);

/// Signer's public key, or nullopt for an invalid signature.
std::optional<PublicKey> recover(const RecoverableSignature& signature, const Hash256& digest);

} // namespace chainlens::secp256k1

#endif // CHAINLENS_CRYPTO_SECP256K1_HPP
