// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/discv4.hpp>

#include <chainlens/crypto/keccak.hpp>

#include <algorithm>
#include <charconv>
#include <cstring>

namespace chainlens::crawler::discv4 {

namespace {

Bytes encode_ip(const IpAddress& ip)
{
    const auto& b = ip.bytes();
    return rlp::encode_string(std::span<const std::uint8_t>(b.data(), ip.is_v6() ? 16 : 4));
}

Bytes encode_endpoint(const Endpoint& e)
{
    return rlp::encode_list({encode_ip(e.ip), rlp::encode_uint(e.udp), rlp::encode_uint(e.tcp)});
}

const rlp::Item& at(const rlp::Item& list, std::size_t i)
{
    if (!list.is_list || list.items.size() <= i) throw rlp::DecodeError("discv4: payload list too short");
    return list.items[i];
}

IpAddress parse_ip(const rlp::Item& item)
{
    if (item.is_list) throw rlp::DecodeError("discv4: ip must be a string");
    if (item.bytes.size() == 4) {
        return IpAddress::v4(std::uint32_t{item.bytes[0]} << 24 | std::uint32_t{item.bytes[1]} << 16 |
                             std::uint32_t{item.bytes[2]} << 8 | item.bytes[3]);
    }
    if (item.bytes.size() == 16) {
        std::array<std::uint8_t, 16> b{};
        std::copy(item.bytes.begin(), item.bytes.end(), b.begin());
        return IpAddress::v6(b);
    }
    if (item.bytes.empty()) return IpAddress{};
    throw rlp::DecodeError("discv4: ip must be 4 or 16 bytes");
}

std::uint16_t parse_port(const rlp::Item& item)
{
    const std::uint64_t v = item.as_uint();
    if (v > 65535) throw rlp::DecodeError("discv4: port out of range");
    return static_cast<std::uint16_t>(v);
}

Endpoint parse_endpoint(const rlp::Item& item)
{
    return Endpoint{parse_ip(at(item, 0)), parse_port(at(item, 1)), parse_port(at(item, 2))};
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed(const rlp::Item& item, const char* what)
{
    if (item.is_list || item.bytes.size() != N) throw rlp::DecodeError(std::string("discv4: bad ") + what);
    std::array<std::uint8_t, N> out{};
    std::copy(item.bytes.begin(), item.bytes.end(), out.begin());
    return out;
}

} // namespace

Bytes encode_payload(const Ping& p)
{
    return rlp::encode_list(
        {rlp::encode_uint(p.version), encode_endpoint(p.from), encode_endpoint(p.to), rlp::encode_uint(p.expiration)});
}

Bytes encode_payload(const Pong& p)
{
    return rlp::encode_list({encode_endpoint(p.to), rlp::encode_string(p.ping_hash), rlp::encode_uint(p.expiration)});
}

Bytes encode_payload(const FindNode& p)
{
    return rlp::encode_list({rlp::encode_string(p.target.bytes), rlp::encode_uint(p.expiration)});
}

Bytes encode_payload(const Neighbors& p)
{
    std::vector<Bytes> nodes;
    for (const PeerInfo& n : p.nodes) {
        nodes.push_back(rlp::encode_list(
            {encode_ip(n.ip), rlp::encode_uint(n.port), rlp::encode_uint(n.port), rlp::encode_string(n.node_id.bytes)}));
    }
    return rlp::encode_list({rlp::encode_list(nodes), rlp::encode_uint(p.expiration)});
}

Encoded encode_packet(const secp256k1::PrivateKey& key, PacketType type, std::span<const std::uint8_t> payload)
{
    Bytes body;
    body.reserve(1 + payload.size());
    body.push_back(static_cast<std::uint8_t>(type));
    body.insert(body.end(), payload.begin(), payload.end());
    const secp256k1::RecoverableSignature sig = secp256k1::sign(key, crypto::keccak256(body));

    Encoded out;
    out.packet.resize(32);
    out.packet.insert(out.packet.end(), sig.begin(), sig.end());
    out.packet.insert(out.packet.end(), body.begin(), body.end());
    out.hash = crypto::keccak256(std::span<const std::uint8_t>(out.packet).subspan(32));
    std::copy(out.hash.begin(), out.hash.end(), out.packet.begin());
    return out;
}

std::optional<Decoded> decode_packet(std::span<const std::uint8_t> packet)
{
    if (packet.size() < kHeaderSize + 2) return std::nullopt;
    Decoded d;
    std::copy(packet.begin(), packet.begin() + 32, d.hash.begin());
    if (crypto::keccak256(packet.subspan(32)) != d.hash) return std::nullopt;
    secp256k1::RecoverableSignature sig{};
    std::copy(packet.begin() + 32, packet.begin() + kHeaderSize, sig.begin());
    const auto body = packet.subspan(kHeaderSize);
    const auto pub = secp256k1::recover(sig, crypto::keccak256(body));
    if (!pub) return std::nullopt;
    std::copy(pub->begin(), pub->end(), d.sender.bytes.begin());
    d.type = body[0];
    try {
        d.payload = rlp::decode_prefix(body.subspan(1));
    } catch (const rlp::DecodeError&) {
        return std::nullopt;
    }
    return d;
}

Ping parse_ping(const rlp::Item& item)
{
    Ping p;
    p.version = at(item, 0).as_uint();
    p.from = parse_endpoint(at(item, 1));
    p.to = parse_endpoint(at(item, 2));
    p.expiration = at(item, 3).as_uint();
    return p;
}

Pong parse_pong(const rlp::Item& item)
{
    Pong p;
    p.to = parse_endpoint(at(item, 0));
    p.ping_hash = fixed<32>(at(item, 1), "ping hash");
    p.expiration = at(item, 2).as_uint();
    return p;
}

FindNode parse_find_node(const rlp::Item& item)
{
    FindNode f;
    f.target.bytes = fixed<64>(at(item, 0), "target");
    f.expiration = at(item, 1).as_uint();
    return f;
}

Neighbors parse_neighbors(const rlp::Item& item)
{
    Neighbors n;
    const rlp::Item& list = at(item, 0);
    if (!list.is_list) throw rlp::DecodeError("discv4: nodes must be a list");
    for (const rlp::Item& node : list.items) {
        PeerInfo p;
        p.ip = parse_ip(at(node, 0));
        p.port = parse_port(at(node, 1));
        p.node_id.bytes = fixed<64>(at(node, 3), "node id");
        n.nodes.push_back(p);
    }
    n.expiration = at(item, 1).as_uint();
    return n;
}

NodeId node_id_of(const secp256k1::PrivateKey& key)
{
    NodeId id;
    id.bytes = secp256k1::public_key(key);
    return id;
}

PeerInfo parse_enode(std::string_view url)
{
    constexpr std::string_view scheme = "enode://";
    const auto bad = [&](const char* why) { return Error("invalid enode URL '" + std::string(url) + "': " + why); };
    if (!url.starts_with(scheme)) throw bad("missing enode:// scheme");
    url.remove_prefix(scheme.size());
    const auto at_pos = url.find('@');
    if (at_pos == std::string_view::npos) throw bad("missing '@'");
    PeerInfo p;
    try {
        p.node_id = NodeId::from_hex(url.substr(0, at_pos));
    } catch (const Error&) {
        throw bad("node id must be 64 bytes of hex");
    }
    std::string_view rest = url.substr(at_pos + 1);
    std::string_view query;
    if (const auto q = rest.find('?'); q != std::string_view::npos) {
        query = rest.substr(q + 1);
        rest = rest.substr(0, q);
    }
    const auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) throw bad("missing port");
    std::string_view host = rest.substr(0, colon);
    if (host.size() >= 2 && host.front() == '[' && host.back() == ']') host = host.substr(1, host.size() - 2);
    const auto ip = IpAddress::parse(host);
    if (!ip) throw bad("host must be a literal IP address");
    p.ip = *ip;
    auto parse_port_text = [&](std::string_view text) {
        unsigned v = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
        if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0 || v > 65535) throw bad("invalid port");
        return static_cast<std::uint16_t>(v);
    };
    p.port = parse_port_text(rest.substr(colon + 1));
    if (query.starts_with("discport=")) p.port = parse_port_text(query.substr(9));
    return p;
}

} // namespace chainlens::crawler::discv4
