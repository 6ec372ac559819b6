// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/registry.hpp>

#include <algorithm>
#include <tuple>
#include <unordered_map>

namespace chainlens::eth {

void ContractRegistry::add(ContractRecord record)
{
    by_address_.emplace(record.address, std::move(record));
}

const ContractRecord* ContractRegistry::find(const Address& address) const
{
    const auto it = by_address_.find(address);
    return it == by_address_.end() ? nullptr : &it->second;
}

ContractRecord* ContractRegistry::mutable_find(const Address& address)
{
    const auto it = by_address_.find(address);
    return it == by_address_.end() ? nullptr : &it->second;
}

bool ContractRegistry::is_contract_at(const Address& address, std::int64_t height, std::int64_t index) const
{
    const ContractRecord* r = find(address);
    if (!r) return false;
    if (r->creation_index) {
        return std::tie(r->creation_height, *r->creation_index) < std::tie(height, index);
    }
    return r->creation_height < height;
}

std::vector<ContractRecord> ContractRegistry::records() const
{
    std::vector<ContractRecord> out;
    out.reserve(by_address_.size());
    for (const auto& [addr, r] : by_address_) out.push_back(r);
    std::stable_sort(out.begin(), out.end(), [](const ContractRecord& a, const ContractRecord& b) {
        const std::int64_t ai = a.creation_index.value_or(-1);
        const std::int64_t bi = b.creation_index.value_or(-1);
        return std::tie(a.creation_height, ai) < std::tie(b.creation_height, bi);
    });
    return out;
}

ContractRegistry build_contract_registry(const model::ChainSnapshot& snapshot, const SideRecords& side)
{
    ContractRegistry registry;
    std::unordered_map<std::string, std::uint64_t> next_nonce;

    for (const model::Transaction& tx : snapshot.transactions) {
        std::uint64_t& counter = next_nonce[tx.sender];
        const std::uint64_t nonce = tx.nonce.value_or(counter);
        counter = nonce + 1;
        if (tx.recipient) continue;

        ContractRecord r;
        r.creator = Address::from_hex(tx.sender);
        r.address = derive_contract_address(r.creator, nonce);
        if (tx.created_address && Address::from_hex(*tx.created_address) != r.address) {
            throw AddressMismatch(tx.hash);
        }
        r.creation_height = tx.block_height;
        r.creation_index = tx.index_in_block;
        r.creator_kind = CreatorKind::ByTransaction;
        r.creation_tx = tx.hash;
        r.endowment = tx.value;
        r.balance = tx.value;
        r.code = tx.input_data;
        r.zombie = tx.has_empty_input();
        registry.add(std::move(r));
    }

    for (const InternalCreation& c : side.internal_creations) {
        if (snapshot.cutoff_height && c.height > *snapshot.cutoff_height) continue;
        ContractRecord r;
        r.address = c.address;
        r.creator = c.parent;
        r.creator_kind = CreatorKind::ByContract;
        r.creation_height = c.height;
        r.code = c.code;
        registry.add(std::move(r));
    }

    for (const model::Transaction& tx : snapshot.transactions) {
        if (!tx.recipient || tx.value == 0) continue;
        ContractRecord* r = registry.mutable_find(Address::from_hex(*tx.recipient));
        if (r && registry.is_contract_at(r->address, tx.block_height, tx.index_in_block) &&
            !r->terminated()) {
            r->balance += tx.value;
        }
    }

    for (const Termination& t : side.terminations) {
        if (snapshot.cutoff_height && t.height > *snapshot.cutoff_height) continue;
        ContractRecord* r = registry.mutable_find(t.address);
        if (!r) continue;
        if (t.height < r->creation_height) {
            throw Error("termination of " + t.address.to_hex() + " at height " + std::to_string(t.height) +
                        " precedes its creation");
        }
        if (!r->termination_height || t.height < *r->termination_height) {
            r->termination_height = t.height;
            r->refund_to = t.refund_to;
            r->balance = 0;
        }
    }
    return registry;
}

} // namespace chainlens::eth
