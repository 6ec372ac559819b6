// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_REGISTRY_HPP
#define CHAINLENS_ETH_REGISTRY_HPP

#include <chainlens/common/amount.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/eth/address.hpp>
#include <chainlens/eth/side_records.hpp>
#include <chainlens/model/types.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chainlens::eth {

enum class CreatorKind { ByTransaction, ByContract };

struct ContractRecord {
    Address address;
    std::int64_t creation_height{0};
    /// Index of the creating transaction; nullopt for internal creations,
    /// whose position inside the block is unknown.
    std::optional<std::int64_t> creation_index;
    Address creator;
    CreatorKind creator_kind{CreatorKind::ByTransaction};
    std::optional<std::string> creation_tx;
    std::optional<std::int64_t> termination_height;
    std::optional<Address> refund_to;
    /// Value sent with the creating transaction.
    Amount endowment{0};
    /// Endowment plus value-bearing ledger transactions sent to the address
    /// after creation. Transfers made by contract code are not visible.
    Amount balance{0};
    /// Creation input for transaction-created contracts, lowercase 0x-hex.
    std::string code{"0x"};
    /// Created by a transaction with empty input: no code, funds locked.
    bool zombie{false};

    bool terminated() const noexcept { return termination_height.has_value(); }
};

class AddressMismatch : public Error
{
public:
    explicit AddressMismatch(const std::string& tx_hash)
        : Error("AddressMismatch: derived contract address differs from the one recorded for " + tx_hash),
          tx_hash_(tx_hash) {}
    const std::string& tx_hash() const noexcept { return tx_hash_; }

private:
    std::string tx_hash_;
};

class ContractRegistry
{
public:
    ContractRegistry() = default;

    /// Later duplicates of an address are ignored.
    void add(ContractRecord record);

    const ContractRecord* find(const Address& address) const;

    /// Whether `address` is a contract (live or terminated) as seen by a
    /// transaction at (height, index). Transaction-created contracts exist
    /// after their creating transaction; internal creations from the block
    /// after theirs.
    bool is_contract_at(const Address& address, std::int64_t height, std::int64_t index) const;

    /// Sorted by (creation_height, creation_index, address).
    std::vector<ContractRecord> records() const;
    std::size_t size() const noexcept { return by_address_.size(); }

    ContractRecord* mutable_find(const Address& address);

private:
    std::map<Address, ContractRecord> by_address_;
};

/**
 * Builds one record per contract creation in the snapshot plus the supplied
 * internal creations, then applies terminations.
 *
 * The nonce of a creating transaction is its recorded nonce when present,
 * otherwise the count of earlier transactions from the same sender in the
 * snapshot. When a creation carries the node-reported address, it must
 * match the derived one or AddressMismatch is thrown.
 */
ContractRegistry build_contract_registry(const model::ChainSnapshot& snapshot, const SideRecords& side = {});

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_REGISTRY_HPP
