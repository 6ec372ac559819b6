// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crypto/rlp.hpp>

namespace chainlens::rlp {

namespace {

Bytes big_endian(std::uint64_t value)
{
    Bytes out;
    while (value != 0) {
        out.insert(out.begin(), static_cast<std::uint8_t>(value & 0xff));
        value >>= 8;
    }
    return out;
}

Bytes header(std::size_t length, std::uint8_t short_base, std::uint8_t long_base)
{
    if (length <= 55) return Bytes{static_cast<std::uint8_t>(short_base + length)};
    const Bytes len = big_endian(length);
    Bytes out{static_cast<std::uint8_t>(long_base + len.size())};
    out.insert(out.end(), len.begin(), len.end());
    return out;
}

struct Cursor {
    std::span<const std::uint8_t> data;
    std::size_t pos{0};
};

std::size_t read_length(Cursor& c, std::size_t n)
{
    if (n == 0 || n > 8 || c.pos + n > c.data.size()) throw DecodeError("rlp: bad length prefix");
    if (c.data[c.pos] == 0) throw DecodeError("rlp: non-canonical length");
    std::size_t len = 0;
    for (std::size_t i = 0; i < n; ++i) len = (len << 8) | c.data[c.pos++];
    if (len <= 55) throw DecodeError("rlp: non-canonical length");
    return len;
}

Item decode_item(Cursor& c, int depth)
{
    if (depth > 64) throw DecodeError("rlp: nesting too deep");
    if (c.pos >= c.data.size()) throw DecodeError("rlp: truncated input");
    const std::uint8_t prefix = c.data[c.pos++];
    Item item;
    std::size_t len = 0;
    if (prefix < 0x80) {
        item.bytes.push_back(prefix);
        return item;
    }
    if (prefix <= 0xb7) {
        len = prefix - 0x80u;
    } else if (prefix <= 0xbf) {
        len = read_length(c, prefix - 0xb7u);
    } else if (prefix <= 0xf7) {
        item.is_list = true;
        len = prefix - 0xc0u;
    } else {
        item.is_list = true;
        len = read_length(c, prefix - 0xf7u);
    }
    if (len > c.data.size() - c.pos) throw DecodeError("rlp: item overruns input");
    if (!item.is_list) {
        item.bytes.assign(c.data.begin() + static_cast<std::ptrdiff_t>(c.pos),
                          c.data.begin() + static_cast<std::ptrdiff_t>(c.pos + len));
        if (len == 1 && item.bytes[0] < 0x80) throw DecodeError("rlp: non-canonical single byte");
        c.pos += len;
        return item;
    }
    Cursor inner{c.data.subspan(c.pos, len), 0};
    while (inner.pos < inner.data.size()) item.items.push_back(decode_item(inner, depth + 1));
    c.pos += len;
    return item;
}

} // namespace

Bytes encode_string(std::span<const std::uint8_t> payload)
{
    if (payload.size() == 1 && payload[0] < 0x80) return Bytes{payload[0]};
    Bytes out = header(payload.size(), 0x80, 0xb7);
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Bytes encode_uint(std::uint64_t value)
{
    return encode_string(big_endian(value));
}

Bytes encode_list(const std::vector<Bytes>& encoded_items)
{
    std::size_t total = 0;
    for (const Bytes& b : encoded_items) total += b.size();
    Bytes out = header(total, 0xc0, 0xf7);
    for (const Bytes& b : encoded_items) out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::uint64_t Item::as_uint() const
{
    if (is_list) throw DecodeError("rlp: expected integer, got list");
    if (bytes.size() > 8) throw DecodeError("rlp: integer wider than 64 bits");
    if (!bytes.empty() && bytes[0] == 0) throw DecodeError("rlp: integer has leading zero");
    std::uint64_t v = 0;
    for (const std::uint8_t b : bytes) v = (v << 8) | b;
    return v;
}

Item decode(std::span<const std::uint8_t> data)
{
    Cursor c{data, 0};
    Item item = decode_item(c, 0);
    if (c.pos != data.size()) throw DecodeError("rlp: trailing bytes after item");
    return item;
}

Item decode_prefix(std::span<const std::uint8_t> data)
{
    Cursor c{data, 0};
    return decode_item(c, 0);
}

} // namespace chainlens::rlp
