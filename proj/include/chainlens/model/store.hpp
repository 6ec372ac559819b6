// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_MODEL_STORE_HPP
#define CHAINLENS_MODEL_STORE_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/model/types.hpp>

#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

struct sqlite3;

namespace chainlens::model {

class StoreError : public Error
{
public:
    using Error::Error;
};

class ConflictingBlock : public Error
{
public:
    explicit ConflictingBlock(std::int64_t height)
        : Error("ConflictingBlock: a different block already exists at height " + std::to_string(height)),
          height_(height) {}
    std::int64_t height() const noexcept { return height_; }

private:
    std::int64_t height_;
};

class ConflictingTransaction : public Error
{
public:
    using Error::Error;
};

enum class InsertOutcome { Inserted, AlreadyPresent };

/**
 * Embedded on-disk ledger store rooted at a directory.
 *
 * Blocks are keyed by (chain, height), transactions by (chain, hash), and a
 * (chain, height) -> UTC month index backs the monthly aggregations. One
 * writer at a time; any number of Store instances may read the same
 * directory once ingestion has finished.
 */
class Store
{
public:
    static Store open(const std::filesystem::path& dir);
    /// Non-persistent store, for tests and one-shot pipelines.
    static Store in_memory();

    Store(Store&&) noexcept;
    Store& operator=(Store&&) noexcept;
    ~Store();

    const std::filesystem::path& directory() const noexcept { return dir_; }

    /// Inserts, or reports AlreadyPresent when an identical-hash block is
    /// stored at that height. Throws ConflictingBlock on a hash mismatch.
    InsertOutcome put_block(const Block& block);
    /// Throws ConflictingTransaction when the hash or (height, index) slot
    /// is taken by a different record.
    InsertOutcome put_transaction(const Transaction& tx);

    /// Groups writes into one durable transaction.
    void begin();
    void commit();
    void rollback();

    std::optional<Block> block_at(ChainKind chain, std::int64_t height) const;
    std::int64_t block_count(ChainKind chain, std::optional<std::int64_t> max_height = {}) const;
    std::int64_t transaction_count(ChainKind chain) const;

    /// Greatest height whose timestamp is strictly less than `cutoff`.
    std::optional<std::int64_t> last_height_before(ChainKind chain, Timestamp cutoff) const;
    std::optional<std::int64_t> max_height(ChainKind chain) const;

    /// Cutoff persisted by `ingest --cutoff`, applied by default to queries.
    void set_default_cutoff(ChainKind chain, std::int64_t height);
    std::optional<std::int64_t> default_cutoff(ChainKind chain) const;
    /// Explicit cutoff if given, else the persisted default, else none.
    std::optional<std::int64_t> resolve_cutoff(ChainKind chain, std::optional<std::int64_t> explicit_cutoff) const;

    void for_each_block(ChainKind chain, std::optional<std::int64_t> max_height,
                        const std::function<void(const Block&)>& fn) const;
    /// Ordered by (block_height, index_in_block).
    void for_each_transaction(ChainKind chain, std::optional<std::int64_t> max_height,
                              const std::function<void(const Transaction&)>& fn) const;

    ChainSnapshot snapshot(ChainKind chain, std::optional<std::int64_t> max_height) const;

    /// (count, Σ value) over transactions at or below max_height.
    std::pair<std::int64_t, Amount> transaction_totals(ChainKind chain, std::optional<std::int64_t> max_height) const;
    /// Transaction counts per packed year-month (year*100+month) using the
    /// month index. Transactions whose block is not stored have no month
    /// and are left out.
    std::vector<std::pair<int, std::int64_t>> transactions_per_month(ChainKind chain,
                                                                     std::optional<std::int64_t> max_height) const;

    /// Canonical text rendering of every stored record, for equality checks.
    std::string dump() const;

private:
    Store(std::filesystem::path dir, sqlite3* db);
    void exec(const char* sql) const;
    void init_schema();

    std::filesystem::path dir_;
    struct Deleter {
        void operator()(sqlite3* db) const noexcept;
    };
    std::unique_ptr<sqlite3, Deleter> db_;
};

} // namespace chainlens::model

#endif // CHAINLENS_MODEL_STORE_HPP
