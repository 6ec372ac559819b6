// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/model/types.hpp>

#include <algorithm>

namespace chainlens::model {

std::string_view chain_code(ChainKind chain) noexcept
{
    switch (chain) {
    case ChainKind::Ethereum: return "eth";
    case ChainKind::Namecoin: return "nmc";
    case ChainKind::Peercoin: return "ppc";
    }
    return "?";
}

std::optional<ChainKind> parse_chain(std::string_view code) noexcept
{
    if (code == "eth") return ChainKind::Ethereum;
    if (code == "nmc") return ChainKind::Namecoin;
    if (code == "ppc") return ChainKind::Peercoin;
    return std::nullopt;
}

std::string_view name_op_code(NameOpKind kind) noexcept
{
    switch (kind) {
    case NameOpKind::New: return "new";
    case NameOpKind::FirstUpdate: return "firstupdate";
    case NameOpKind::Update: return "update";
    }
    return "?";
}

std::optional<NameOpKind> parse_name_op(std::string_view code) noexcept
{
    if (code == "new") return NameOpKind::New;
    if (code == "firstupdate") return NameOpKind::FirstUpdate;
    if (code == "update") return NameOpKind::Update;
    return std::nullopt;
}

bool NameOpPayload::well_formed() const noexcept
{
    return kind == NameOpKind::New ? name_hash.has_value() : name.has_value();
}

const Block* ChainSnapshot::block_at(std::int64_t height) const noexcept
{
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), height,
                                     [](const Block& b, std::int64_t h) { return b.height < h; });
    return (it != blocks.end() && it->height == height) ? &*it : nullptr;
}

} // namespace chainlens::model
