// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "support.hpp"

#include <chainlens/common/hex.hpp>
#include <chainlens/crawler/discv4.hpp>
#include <chainlens/crypto/keccak.hpp>
#include <chainlens/crypto/rlp.hpp>
#include <chainlens/crypto/secp256k1.hpp>
#include <chainlens/eth/address.hpp>
#include <chainlens/eth/selector.hpp>

#include <boost/test/unit_test.hpp>

#include <random>

using namespace chainlens;
using nlohmann::json;

namespace {

std::string hex_of(const crypto::Hash256& h)
{
    return to_hex(h, false);
}

} // namespace

BOOST_AUTO_TEST_SUITE(crypto_tests)

BOOST_AUTO_TEST_CASE(keccak_reference_vectors)
{
    const json doc = test::load_json("keccak_vectors.json");
    BOOST_REQUIRE(!doc["keccak256"].empty());
    for (const json& v : doc["keccak256"]) {
        const Bytes input = from_hex(v["input"].get<std::string>());
        BOOST_CHECK_MESSAGE(hex_of(crypto::keccak256(input)) == v["digest"], v["name"]);
    }
}

BOOST_AUTO_TEST_CASE(keccak_incremental_matches_one_shot)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        Bytes data(rng() % 700);
        for (auto& b : data) b = static_cast<std::uint8_t>(rng());
        crypto::Keccak256 h;
        std::size_t pos = 0;
        while (pos < data.size()) {
            const std::size_t n = std::min<std::size_t>(data.size() - pos, rng() % 150);
            h.write(std::span<const std::uint8_t>(data).subspan(pos, n));
            pos += n;
        }
        BOOST_REQUIRE(h.finalize() == crypto::keccak256(data));
    }
}

BOOST_AUTO_TEST_CASE(keccak_is_not_sha3)
{
    BOOST_CHECK_EQUAL(hex_of(crypto::sha3_256(Bytes{})),
                      "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
    BOOST_CHECK(crypto::sha3_256(Bytes{}) != crypto::keccak256(Bytes{}));
}

BOOST_AUTO_TEST_CASE(function_selectors)
{
    const json doc = test::load_json("keccak_vectors.json");
    for (const json& v : doc["selectors"]) {
        BOOST_CHECK_EQUAL(eth::function_selector(v["signature"].get<std::string>()).to_hex(),
                          "0x" + v["selector"].get<std::string>());
    }
}

BOOST_AUTO_TEST_CASE(rlp_known_encodings)
{
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_uint(0)), "0x80");
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_uint(15)), "0x0f");
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_uint(1024)), "0x820400");
    const std::string dog = "dog";
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_string(Bytes(dog.begin(), dog.end()))), "0x83646f67");
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_list({})), "0xc0");
    const Bytes long_string(56, 'a');
    BOOST_CHECK_EQUAL(to_hex(rlp::encode_string(long_string)).substr(0, 6), "0xb838");
}

BOOST_AUTO_TEST_CASE(rlp_rejects_malformed)
{
    BOOST_CHECK_THROW(rlp::decode(from_hex("0x83646f")), rlp::DecodeError);
    BOOST_CHECK_THROW(rlp::decode(from_hex("0x8100")), rlp::DecodeError);
    BOOST_CHECK_THROW(rlp::decode(from_hex("0xb80100")), rlp::DecodeError);
    BOOST_CHECK_THROW(rlp::decode(from_hex("0x0102")), rlp::DecodeError);
    BOOST_CHECK_THROW(rlp::decode(Bytes{}), rlp::DecodeError);
    BOOST_CHECK_NO_THROW(rlp::decode_prefix(from_hex("0x0102")));
    BOOST_CHECK_THROW(rlp::decode(from_hex("0x820001")).as_uint(), rlp::DecodeError);
}

BOOST_AUTO_TEST_CASE(rlp_round_trip_property)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t v = rng() >> (rng() % 64);
        BOOST_REQUIRE_EQUAL(rlp::decode(rlp::encode_uint(v)).as_uint(), v);
        std::vector<Bytes> items;
        std::vector<Bytes> raw;
        const std::size_t n = rng() % 6;
        for (std::size_t k = 0; k < n; ++k) {
            Bytes b(rng() % 80);
            for (auto& x : b) x = static_cast<std::uint8_t>(rng());
            raw.push_back(b);
            items.push_back(rlp::encode_string(b));
        }
        const rlp::Item decoded = rlp::decode(rlp::encode_list(items));
        BOOST_REQUIRE(decoded.is_list);
        BOOST_REQUIRE_EQUAL(decoded.items.size(), n);
        for (std::size_t k = 0; k < n; ++k) BOOST_REQUIRE(decoded.items[k].bytes == raw[k]);
    }
}

BOOST_AUTO_TEST_CASE(contract_address_vectors)
{
    const json doc = test::load_json("keccak_vectors.json");
    BOOST_REQUIRE_EQUAL(doc["contract_addresses"].size(), 10U);
    for (const json& v : doc["contract_addresses"]) {
        const auto sender = eth::Address::from_hex(v["sender"].get<std::string>());
        const std::uint64_t nonce = v["nonce"].get<std::uint64_t>();
        const Bytes encoded = rlp::encode_list({rlp::encode_string(sender.bytes), rlp::encode_uint(nonce)});
        BOOST_CHECK_EQUAL(to_hex(encoded, false), v["rlp"].get<std::string>());
        BOOST_CHECK_EQUAL(eth::derive_contract_address(sender, nonce).to_hex(), v["address"].get<std::string>());
    }
}

BOOST_AUTO_TEST_CASE(secp256k1_against_reference)
{
    const json doc = test::load_json("secp256k1_vectors.json");
    for (const json& v : doc["signatures"]) {
        const auto priv = fixed_from_hex<32>(v["private"].get<std::string>());
        BOOST_CHECK_EQUAL(to_hex(secp256k1::public_key(priv), false), v["public"].get<std::string>());
        secp256k1::RecoverableSignature sig{};
        const Bytes r = from_hex(v["r"].get<std::string>());
        const Bytes s = from_hex(v["s"].get<std::string>());
        std::copy(r.begin(), r.end(), sig.begin());
        std::copy(s.begin(), s.end(), sig.begin() + 32);
        sig[64] = static_cast<std::uint8_t>(v["v"].get<int>());
        const auto digest = fixed_from_hex<32>(v["digest"].get<std::string>());
        const auto pub = secp256k1::recover(sig, digest);
        BOOST_REQUIRE(pub);
        BOOST_CHECK_EQUAL(to_hex(*pub, false), v["public"].get<std::string>());
        sig[64] ^= 1;
        const auto other = secp256k1::recover(sig, digest);
        BOOST_CHECK(!other || to_hex(*other, false) != v["public"].get<std::string>());
    }
}

BOOST_AUTO_TEST_CASE(secp256k1_sign_recover_round_trip)
{
    for (int i = 0; i < 25; ++i) {
        const auto key = secp256k1::generate_private_key();
        const auto digest = crypto::keccak256("round trip " + std::to_string(i));
        const auto sig = secp256k1::sign(key, digest);
        BOOST_REQUIRE(sig[64] <= 1);
        // Low s: the top half of the order is never produced.
        BOOST_REQUIRE(sig[32] < 0x80);
        const auto pub = secp256k1::recover(sig, digest);
        BOOST_REQUIRE(pub);
        BOOST_REQUIRE(*pub == secp256k1::public_key(key));
    }
    secp256k1::RecoverableSignature zero{};
    BOOST_CHECK(!secp256k1::recover(zero, crypto::keccak256("x")));
    BOOST_CHECK_THROW(secp256k1::public_key(secp256k1::PrivateKey{}), secp256k1::CryptoError);
}

BOOST_AUTO_TEST_CASE(discovery_packets_from_reference)
{
    namespace d4 = crawler::discv4;
    const json doc = test::load_json("secp256k1_vectors.json");
    const std::string sender = doc["packet_sender"];
    for (const json& p : doc["packets"]) {
        const Bytes raw = from_hex(p["packet"].get<std::string>());
        const auto dec = d4::decode_packet(raw);
        BOOST_REQUIRE_MESSAGE(dec, p["name"]);
        BOOST_CHECK_EQUAL(dec->sender.to_hex(), sender);
        BOOST_CHECK_EQUAL(dec->type, p["type"].get<int>());
        if (dec->type == 1) {
            const d4::Ping ping = d4::parse_ping(dec->payload);
            BOOST_CHECK_EQUAL(ping.version, 4U);
            BOOST_CHECK_EQUAL(ping.from.ip.to_string(), "127.0.0.1");
            BOOST_CHECK_EQUAL(ping.to.udp, 30304);
            BOOST_CHECK_EQUAL(ping.expiration, 0x60000000U);
        } else if (dec->type == 3) {
            BOOST_CHECK_EQUAL(d4::parse_find_node(dec->payload).target.to_hex(), p["target"].get<std::string>());
        } else if (dec->type == 4) {
            const d4::Neighbors n = d4::parse_neighbors(dec->payload);
            BOOST_REQUIRE_EQUAL(n.nodes.size(), 1U);
            BOOST_CHECK_EQUAL(n.nodes[0].node_id.to_hex(), p["node_id"].get<std::string>());
            BOOST_CHECK_EQUAL(n.nodes[0].ip.to_string(), p["ip"].get<std::string>());
            BOOST_CHECK_EQUAL(n.nodes[0].port, p["port"].get<int>());
        }
        Bytes tampered = raw;
        tampered.back() ^= 0x01;
        BOOST_CHECK(!d4::decode_packet(tampered));
    }
    BOOST_CHECK(!d4::decode_packet(Bytes(50, 0)));
}

BOOST_AUTO_TEST_CASE(discovery_encode_decode_round_trip)
{
    namespace d4 = crawler::discv4;
    const auto key = secp256k1::generate_private_key();
    std::mt19937_64 rng(5);
    d4::Neighbors n;
    for (int i = 0; i < 12; ++i) {
        n.nodes.push_back(crawler::PeerInfo{test::random_node_id(rng), IpAddress::v4(0x0a000000u + i),
                                            static_cast<std::uint16_t>(30000 + i)});
    }
    n.expiration = 1'700'000'000;
    const auto enc = d4::encode_packet(key, d4::PacketType::Neighbors, d4::encode_payload(n));
    BOOST_CHECK_LE(enc.packet.size(), d4::kMaxPacketSize);
    const auto dec = d4::decode_packet(enc.packet);
    BOOST_REQUIRE(dec);
    BOOST_CHECK(dec->hash == enc.hash);
    BOOST_CHECK(dec->sender == d4::node_id_of(key));
    const d4::Neighbors back = d4::parse_neighbors(dec->payload);
    BOOST_CHECK(back.nodes == n.nodes);
    BOOST_CHECK_EQUAL(back.expiration, n.expiration);

    d4::Pong pong;
    pong.to = d4::Endpoint{IpAddress::v4(0x7f000001), 1, 2};
    pong.ping_hash = crypto::keccak256("ping");
    pong.expiration = 9;
    const auto pdec = d4::decode_packet(d4::encode_packet(key, d4::PacketType::Pong, d4::encode_payload(pong)).packet);
    BOOST_REQUIRE(pdec);
    const d4::Pong pback = d4::parse_pong(pdec->payload);
    BOOST_CHECK(pback.ping_hash == pong.ping_hash);
    BOOST_CHECK(pback.to == pong.to);
}

BOOST_AUTO_TEST_CASE(enode_urls)
{
    namespace d4 = crawler::discv4;
    const std::string id(128, 'a');
    const auto p = d4::parse_enode("enode://" + id + "@10.0.0.1:30303");
    BOOST_CHECK_EQUAL(p.ip.to_string(), "10.0.0.1");
    BOOST_CHECK_EQUAL(p.port, 30303);
    BOOST_CHECK_EQUAL(p.node_id.to_hex(), id);
    BOOST_CHECK_EQUAL(d4::parse_enode("enode://" + id + "@10.0.0.1:30303?discport=30301").port, 30301);
    BOOST_CHECK_THROW(d4::parse_enode("enode://abcd@10.0.0.1:30303"), Error);
    BOOST_CHECK_THROW(d4::parse_enode("enode://" + id + "@host.example:30303"), Error);
    BOOST_CHECK_THROW(d4::parse_enode("http://" + id + "@10.0.0.1:30303"), Error);
}

BOOST_AUTO_TEST_SUITE_END()
