// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crypto/secp256k1.hpp>

#include <openssl/bn.h>
#include <openssl/ec.h>
#include <openssl/obj_mac.h>

#include <memory>

namespace chainlens::secp256k1 {

namespace {

struct BnFree {
    void operator()(BIGNUM* p) const noexcept { BN_clear_free(p); }
};
struct CtxFree {
    void operator()(BN_CTX* p) const noexcept { BN_CTX_free(p); }
};
struct PointFree {
    void operator()(EC_POINT* p) const noexcept { EC_POINT_clear_free(p); }
};
struct GroupFree {
    void operator()(EC_GROUP* p) const noexcept { EC_GROUP_free(p); }
};

using Bn = std::unique_ptr<BIGNUM, BnFree>;
using Ctx = std::unique_ptr<BN_CTX, CtxFree>;
using Point = std::unique_ptr<EC_POINT, PointFree>;

template <typename T>
T check(T p)
{
    if (!p) throw CryptoError("OpenSSL allocation failed");
    return p;
}

void ok(int rc, const char* what)
{
    if (rc != 1) throw CryptoError(std::string("OpenSSL ") + what + " failed");
}

const EC_GROUP* curve()
{
    static const std::unique_ptr<EC_GROUP, GroupFree> group(EC_GROUP_new_by_curve_name(NID_secp256k1));
    if (!group) throw CryptoError("secp256k1 unavailable in this OpenSSL build");
    return group.get();
}

Bn new_bn()
{
    return Bn(check(BN_secure_new()));
}

Bn from_bytes(const std::uint8_t* data, std::size_t len)
{
    Bn bn(check(BN_bin2bn(data, static_cast<int>(len), nullptr)));
    return bn;
}

void to_bytes(const BIGNUM* bn, std::uint8_t* out)
{
    if (BN_bn2binpad(bn, out, 32) != 32) throw CryptoError("scalar exceeds 32 bytes");
}

PublicKey encode_point(const EC_POINT* p, BN_CTX* ctx)
{
    Bn x = new_bn(), y = new_bn();
    ok(EC_POINT_get_affine_coordinates(curve(), p, x.get(), y.get(), ctx), "get_affine_coordinates");
    PublicKey out{};
    to_bytes(x.get(), out.data());
    to_bytes(y.get(), out.data() + 32);
    return out;
}

const BIGNUM* order()
{
    return EC_GROUP_get0_order(curve());
}

Bn checked_key(const PrivateKey& key)
{
    Bn d = from_bytes(key.data(), key.size());
    if (BN_is_zero(d.get()) || BN_cmp(d.get(), order()) >= 0) throw CryptoError("private key out of range");
    BN_set_flags(d.get(), BN_FLG_CONSTTIME);
    return d;
}

} // namespace

PrivateKey generate_private_key()
{
    Bn d = new_bn();
    do {
        ok(BN_priv_rand_range(d.get(), order()), "rand_range");
    } while (BN_is_zero(d.get()));
    PrivateKey out{};
    to_bytes(d.get(), out.data());
    return out;
}

PublicKey public_key(const PrivateKey& key)
{
    const Bn d = checked_key(key);
    Ctx ctx(check(BN_CTX_new()));
    Point q(check(EC_POINT_new(curve())));
    ok(EC_POINT_mul(curve(), q.get(), d.get(), nullptr, nullptr, ctx.get()), "point_mul");
    return encode_point(q.get(), ctx.get());
}

RecoverableSignature sign(const PrivateKey& key, const Hash256& digest)
{
    const Bn d = checked_key(key);
    const BIGNUM* n = order();
    Ctx ctx(check(BN_CTX_new()));
    const Bn e = from_bytes(digest.data(), digest.size());
    Bn half = new_bn();
    ok(BN_rshift1(half.get(), n), "rshift1");

    Bn k = new_bn(), x = new_bn(), y = new_bn(), r = new_bn(), s = new_bn(), kinv = new_bn(), tmp = new_bn();
    Point rp(check(EC_POINT_new(curve())));
    for (;;) {
        ok(BN_priv_rand_range(k.get(), n), "rand_range");
        if (BN_is_zero(k.get())) continue;
        BN_set_flags(k.get(), BN_FLG_CONSTTIME);
        ok(EC_POINT_mul(curve(), rp.get(), k.get(), nullptr, nullptr, ctx.get()), "point_mul");
        ok(EC_POINT_get_affine_coordinates(curve(), rp.get(), x.get(), y.get(), ctx.get()), "get_affine_coordinates");
        // x ≥ n would need recovery ids 2 and 3, which the wire format lacks.
        if (BN_cmp(x.get(), n) >= 0) continue;
        ok(BN_copy(r.get(), x.get()) != nullptr, "copy");
        if (BN_is_zero(r.get())) continue;
        std::uint8_t v = BN_is_odd(y.get()) ? 1 : 0;
        if (!BN_mod_inverse(kinv.get(), k.get(), n, ctx.get())) throw CryptoError("OpenSSL mod_inverse failed");
        ok(BN_mod_mul(tmp.get(), r.get(), d.get(), n, ctx.get()), "mod_mul");
        ok(BN_mod_add(tmp.get(), tmp.get(), e.get(), n, ctx.get()), "mod_add");
        ok(BN_mod_mul(s.get(), kinv.get(), tmp.get(), n, ctx.get()), "mod_mul");
        if (BN_is_zero(s.get())) continue;
        if (BN_cmp(s.get(), half.get()) > 0) {
            ok(BN_sub(s.get(), n, s.get()), "sub");
            v ^= 1;
        }
        RecoverableSignature sig{};
        to_bytes(r.get(), sig.data());
        to_bytes(s.get(), sig.data() + 32);
        sig[64] = v;
        return sig;
    }
}

std::optional<PublicKey> recover(const RecoverableSignature& signature, const Hash256& digest)
{
    const std::uint8_t v = signature[64];
    if (v > 1) return std::nullopt;
    const BIGNUM* n = order();
    const Bn r = from_bytes(signature.data(), 32);
    const Bn s = from_bytes(signature.data() + 32, 32);
    if (BN_is_zero(r.get()) || BN_is_zero(s.get()) || BN_cmp(r.get(), n) >= 0 || BN_cmp(s.get(), n) >= 0) {
        return std::nullopt;
    }
    Ctx ctx(check(BN_CTX_new()));
    Point rp(check(EC_POINT_new(curve())));
    if (EC_POINT_set_compressed_coordinates(curve(), rp.get(), r.get(), v, ctx.get()) != 1) return std::nullopt;

    Bn e = from_bytes(digest.data(), digest.size());
    ok(BN_nnmod(e.get(), e.get(), n, ctx.get()), "nnmod");
    Bn rinv = new_bn(), u1 = new_bn(), u2 = new_bn();
    if (!BN_mod_inverse(rinv.get(), r.get(), n, ctx.get())) return std::nullopt;
    ok(BN_mod_sub(u1.get(), n, e.get(), n, ctx.get()), "mod_sub");
    ok(BN_mod_mul(u1.get(), u1.get(), rinv.get(), n, ctx.get()), "mod_mul");
    ok(BN_mod_mul(u2.get(), s.get(), rinv.get(), n, ctx.get()), "mod_mul");

    Point q(check(EC_POINT_new(curve())));
    ok(EC_POINT_mul(curve(), q.get(), u1.get(), rp.get(), u2.get(), ctx.get()), "point_mul");
    if (EC_POINT_is_at_infinity(curve(), q.get())) return std::nullopt;
    return encode_point(q.get(), ctx.get());
}

} // namespace chainlens::secp256k1
