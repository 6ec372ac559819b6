// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/model/store.hpp>

#include <sqlite3.h>

#include <limits>
#include <sstream>

namespace chainlens::model {

namespace {

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS blocks (
    chain INTEGER NOT NULL,
    height INTEGER NOT NULL,
    hash TEXT NOT NULL,
    parent TEXT NOT NULL,
    time INTEGER NOT NULL,
    auxpow INTEGER,
    proof INTEGER,
    txs TEXT NOT NULL,
    PRIMARY KEY (chain, height)
) WITHOUT ROWID;
CREATE TABLE IF NOT EXISTS txs (
    chain INTEGER NOT NULL,
    hash TEXT NOT NULL,
    height INTEGER NOT NULL,
    idx INTEGER NOT NULL,
    sender TEXT NOT NULL,
    recipient TEXT,
    value TEXT NOT NULL,
    input TEXT NOT NULL,
    fee TEXT,
    gas INTEGER,
    op_kind INTEGER,
    op_name TEXT,
    op_hash TEXT,
    op_fee TEXT,
    created TEXT,
    nonce INTEGER,
    PRIMARY KEY (chain, hash)
) WITHOUT ROWID;
CREATE UNIQUE INDEX IF NOT EXISTS txs_position ON txs (chain, height, idx);
CREATE TABLE IF NOT EXISTS month_index (
    chain INTEGER NOT NULL,
    height INTEGER NOT NULL,
    month INTEGER NOT NULL,
    PRIMARY KEY (chain, height)
) WITHOUT ROWID;
CREATE TABLE IF NOT EXISTS meta (
    chain INTEGER PRIMARY KEY,
    default_cutoff INTEGER
);
)sql";

class Statement
{
public:
    Statement(sqlite3* db, const char* sql) : db_(db)
    {
        if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK) {
            throw StoreError(std::string("sqlite prepare: ") + sqlite3_errmsg(db));
        }
    }
    Statement(const Statement&) = delete;
    Statement& operator=(const Statement&) = delete;
    ~Statement() { sqlite3_finalize(stmt_); }

    Statement& bind(int i, std::int64_t v)
    {
        check(sqlite3_bind_int64(stmt_, i, v));
        return *this;
    }
    Statement& bind(int i, const std::string& v)
    {
        check(sqlite3_bind_text(stmt_, i, v.c_str(), static_cast<int>(v.size()), SQLITE_TRANSIENT));
        return *this;
    }
    Statement& bind_null(int i)
    {
        check(sqlite3_bind_null(stmt_, i));
        return *this;
    }
    template <typename T>
    Statement& bind_opt(int i, const std::optional<T>& v)
    {
        return v ? bind(i, *v) : bind_null(i);
    }

    /// True while a row is available.
    bool step()
    {
        const int rc = sqlite3_step(stmt_);
        if (rc == SQLITE_ROW) return true;
        if (rc == SQLITE_DONE) return false;
        throw StoreError(std::string("sqlite step: ") + sqlite3_errmsg(db_));
    }

    bool is_null(int col) const { return sqlite3_column_type(stmt_, col) == SQLITE_NULL; }
    std::int64_t integer(int col) const { return sqlite3_column_int64(stmt_, col); }
    std::string text(int col) const
    {
        const auto* p = sqlite3_column_text(stmt_, col);
        return p ? std::string(reinterpret_cast<const char*>(p), static_cast<std::size_t>(sqlite3_column_bytes(stmt_, col)))
                 : std::string();
    }
    std::optional<std::string> opt_text(int col) const
    {
        return is_null(col) ? std::nullopt : std::optional<std::string>(text(col));
    }
    std::optional<std::int64_t> opt_integer(int col) const
    {
        return is_null(col) ? std::nullopt : std::optional<std::int64_t>(integer(col));
    }

private:
    void check(int rc) const
    {
        if (rc != SQLITE_OK) throw StoreError(std::string("sqlite bind: ") + sqlite3_errmsg(db_));
    }

    sqlite3* db_;
    sqlite3_stmt* stmt_{nullptr};
};

std::int64_t chain_key(ChainKind chain) noexcept
{
    return static_cast<std::int64_t>(chain);
}

std::int64_t height_limit(std::optional<std::int64_t> max_height) noexcept
{
    return max_height.value_or(std::numeric_limits<std::int64_t>::max());
}

std::string join_hashes(const std::vector<std::string>& hashes)
{
    std::string out;
    for (std::size_t i = 0; i < hashes.size(); ++i) {
        if (i != 0) out += ',';
        out += hashes[i];
    }
    return out;
}

std::vector<std::string> split_hashes(const std::string& joined)
{
    std::vector<std::string> out;
    if (joined.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = joined.find(',', start);
        out.push_back(joined.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

constexpr const char* kBlockColumns = "chain, height, hash, parent, time, auxpow, proof, txs";
constexpr const char* kTxColumns =
    "chain, hash, height, idx, sender, recipient, value, input, fee, gas, op_kind, op_name, op_hash, op_fee, created, nonce";

Block read_block(const Statement& s)
{
    Block b;
    b.chain = static_cast<ChainKind>(s.integer(0));
    b.height = s.integer(1);
    b.hash = s.text(2);
    b.parent_hash = s.text(3);
    b.timestamp = s.integer(4);
    if (!s.is_null(5)) b.is_auxpow = s.integer(5) != 0;
    if (!s.is_null(6)) b.proof = static_cast<ProofType>(s.integer(6));
    b.tx_hashes = split_hashes(s.text(7));
    return b;
}

Transaction read_tx(const Statement& s)
{
    Transaction t;
    t.chain = static_cast<ChainKind>(s.integer(0));
    t.hash = s.text(1);
    t.block_height = s.integer(2);
    t.index_in_block = s.integer(3);
    t.sender = s.text(4);
    t.recipient = s.opt_text(5);
    t.value = parse_amount(s.text(6));
    t.input_data = s.text(7);
    if (!s.is_null(8)) t.fee = parse_amount(s.text(8));
    if (!s.is_null(9)) t.gas_limit = static_cast<std::uint64_t>(s.integer(9));
    if (!s.is_null(10)) {
        NameOpPayload op;
        op.kind = static_cast<NameOpKind>(s.integer(10));
        op.name = s.opt_text(11);
        op.name_hash = s.opt_text(12);
        op.paid_fee = parse_amount(s.text(13));
        t.name_op = std::move(op);
    }
    t.created_address = s.opt_text(14);
    if (!s.is_null(15)) t.nonce = static_cast<std::uint64_t>(s.integer(15));
    return t;
}

} // namespace

void Store::Deleter::operator()(sqlite3* db) const noexcept
{
    sqlite3_close(db);
}

Store::Store(std::filesystem::path dir, sqlite3* db) : dir_(std::move(dir)), db_(db)
{
    init_schema();
}

Store::Store(Store&&) noexcept = default;
Store& Store::operator=(Store&&) noexcept = default;
Store::~Store() = default;

Store Store::open(const std::filesystem::path& dir)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw StoreError("cannot create store directory " + dir.string() + ": " + ec.message());
    const std::string file = (dir / "ledger.sqlite").string();
    sqlite3* db = nullptr;
    if (sqlite3_open_v2(file.c_str(), &db, SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                        nullptr) != SQLITE_OK) {
        const std::string msg = db ? sqlite3_errmsg(db) : "out of memory";
        sqlite3_close(db);
        throw StoreError("cannot open store " + file + ": " + msg);
    }
    sqlite3_busy_timeout(db, 10000);
    return Store(dir, db);
}

Store Store::in_memory()
{
    sqlite3* db = nullptr;
    if (sqlite3_open(":memory:", &db) != SQLITE_OK) {
        sqlite3_close(db);
        throw StoreError("cannot open in-memory store");
    }
    return Store({}, db);
}

void Store::exec(const char* sql) const
{
    char* err = nullptr;
    if (sqlite3_exec(db_.get(), sql, nullptr, nullptr, &err) != SQLITE_OK) {
        const std::string msg = err ? err : "unknown error";
        sqlite3_free(err);
        throw StoreError("sqlite: " + msg);
    }
}

void Store::init_schema()
{
    exec("PRAGMA journal_mode=WAL;");
    exec(kSchema);
}

void Store::begin()
{
    exec("BEGIN IMMEDIATE;");
}

void Store::commit()
{
    exec("COMMIT;");
}

void Store::rollback()
{
    exec("ROLLBACK;");
}

InsertOutcome Store::put_block(const Block& block)
{
    {
        Statement q(db_.get(), "SELECT hash FROM blocks WHERE chain = ? AND height = ?");
        q.bind(1, chain_key(block.chain)).bind(2, block.height);
        if (q.step()) {
            if (q.text(0) == block.hash) return InsertOutcome::AlreadyPresent;
            throw ConflictingBlock(block.height);
        }
    }
    Statement ins(db_.get(), "INSERT INTO blocks (chain, height, hash, parent, time, auxpow, proof, txs) "
                             "VALUES (?, ?, ?, ?, ?, ?, ?, ?)");
    ins.bind(1, chain_key(block.chain)).bind(2, block.height).bind(3, block.hash).bind(4, block.parent_hash);
    ins.bind(5, block.timestamp);
    if (block.is_auxpow) ins.bind(6, std::int64_t{*block.is_auxpow ? 1 : 0}); else ins.bind_null(6);
    if (block.proof) ins.bind(7, static_cast<std::int64_t>(*block.proof)); else ins.bind_null(7);
    ins.bind(8, join_hashes(block.tx_hashes));
    ins.step();

    Statement idx(db_.get(), "INSERT OR REPLACE INTO month_index (chain, height, month) VALUES (?, ?, ?)");
    idx.bind(1, chain_key(block.chain)).bind(2, block.height);
    idx.bind(3, std::int64_t{year_month_of(block.timestamp).packed()});
    idx.step();
    return InsertOutcome::Inserted;
}

InsertOutcome Store::put_transaction(const Transaction& tx)
{
    {
        Statement q(db_.get(), "SELECT height, idx FROM txs WHERE chain = ? AND hash = ?");
        q.bind(1, chain_key(tx.chain)).bind(2, tx.hash);
        if (q.step()) {
            if (q.integer(0) == tx.block_height && q.integer(1) == tx.index_in_block) {
                return InsertOutcome::AlreadyPresent;
            }
            throw ConflictingTransaction("ConflictingTransaction: " + tx.hash + " already stored at another position");
        }
    }
    {
        Statement q(db_.get(), "SELECT hash FROM txs WHERE chain = ? AND height = ? AND idx = ?");
        q.bind(1, chain_key(tx.chain)).bind(2, tx.block_height).bind(3, tx.index_in_block);
        if (q.step()) {
            throw ConflictingTransaction("ConflictingTransaction: position (" + std::to_string(tx.block_height) + ", " +
                                         std::to_string(tx.index_in_block) + ") already holds " + q.text(0));
        }
    }
    Statement ins(db_.get(), "INSERT INTO txs (chain, hash, height, idx, sender, recipient, value, input, fee, gas, "
                             "op_kind, op_name, op_hash, op_fee, created, nonce) "
                             "VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)");
    ins.bind(1, chain_key(tx.chain)).bind(2, tx.hash).bind(3, tx.block_height).bind(4, tx.index_in_block);
    ins.bind(5, tx.sender).bind_opt(6, tx.recipient).bind(7, amount_to_string(tx.value)).bind(8, tx.input_data);
    if (tx.fee) ins.bind(9, amount_to_string(*tx.fee)); else ins.bind_null(9);
    if (tx.gas_limit) ins.bind(10, static_cast<std::int64_t>(*tx.gas_limit)); else ins.bind_null(10);
    if (tx.name_op) {
        ins.bind(11, static_cast<std::int64_t>(tx.name_op->kind)).bind_opt(12, tx.name_op->name);
        ins.bind_opt(13, tx.name_op->name_hash).bind(14, amount_to_string(tx.name_op->paid_fee));
    } else {
        ins.bind_null(11).bind_null(12).bind_null(13).bind_null(14);
    }
    ins.bind_opt(15, tx.created_address);
    if (tx.nonce) ins.bind(16, static_cast<std::int64_t>(*tx.nonce)); else ins.bind_null(16);
    ins.step();
    return InsertOutcome::Inserted;
}

std::optional<Block> Store::block_at(ChainKind chain, std::int64_t height) const
{
    Statement q(db_.get(), (std::string("SELECT ") + kBlockColumns + " FROM blocks WHERE chain = ? AND height = ?").c_str());
    q.bind(1, chain_key(chain)).bind(2, height);
    if (!q.step()) return std::nullopt;
    return read_block(q);
}

std::int64_t Store::block_count(ChainKind chain, std::optional<std::int64_t> max_height) const
{
    Statement q(db_.get(), "SELECT COUNT(*) FROM blocks WHERE chain = ? AND height <= ?");
    q.bind(1, chain_key(chain)).bind(2, height_limit(max_height));
    q.step();
    return q.integer(0);
}

std::int64_t Store::transaction_count(ChainKind chain) const
{
    Statement q(db_.get(), "SELECT COUNT(*) FROM txs WHERE chain = ?");
    q.bind(1, chain_key(chain));
    q.step();
    return q.integer(0);
}

std::optional<std::int64_t> Store::last_height_before(ChainKind chain, Timestamp cutoff) const
{
    Statement q(db_.get(), "SELECT MAX(height) FROM blocks WHERE chain = ? AND time < ?");
    q.bind(1, chain_key(chain)).bind(2, cutoff);
    q.step();
    return q.opt_integer(0);
}

std::optional<std::int64_t> Store::max_height(ChainKind chain) const
{
    Statement q(db_.get(), "SELECT MAX(height) FROM blocks WHERE chain = ?");
    q.bind(1, chain_key(chain));
    q.step();
    return q.opt_integer(0);
}

void Store::set_default_cutoff(ChainKind chain, std::int64_t height)
{
    Statement q(db_.get(), "INSERT OR REPLACE INTO meta (chain, default_cutoff) VALUES (?, ?)");
    q.bind(1, chain_key(chain)).bind(2, height);
    q.step();
}

std::optional<std::int64_t> Store::default_cutoff(ChainKind chain) const
{
    Statement q(db_.get(), "SELECT default_cutoff FROM meta WHERE chain = ?");
    q.bind(1, chain_key(chain));
    if (!q.step()) return std::nullopt;
    return q.opt_integer(0);
}

std::optional<std::int64_t> Store::resolve_cutoff(ChainKind chain, std::optional<std::int64_t> explicit_cutoff) const
{
    return explicit_cutoff ? explicit_cutoff : default_cutoff(chain);
}

void Store::for_each_block(ChainKind chain, std::optional<std::int64_t> max_height,
                           const std::function<void(const Block&)>& fn) const
{
    Statement q(db_.get(), (std::string("SELECT ") + kBlockColumns +
                            " FROM blocks WHERE chain = ? AND height <= ? ORDER BY height").c_str());
    q.bind(1, chain_key(chain)).bind(2, height_limit(max_height));
    while (q.step()) fn(read_block(q));
}

void Store::for_each_transaction(ChainKind chain, std::optional<std::int64_t> max_height,
                                 const std::function<void(const Transaction&)>& fn) const
{
    Statement q(db_.get(), (std::string("SELECT ") + kTxColumns +
                            " FROM txs WHERE chain = ? AND height <= ? ORDER BY height, idx").c_str());
    q.bind(1, chain_key(chain)).bind(2, height_limit(max_height));
    while (q.step()) fn(read_tx(q));
}

ChainSnapshot Store::snapshot(ChainKind chain, std::optional<std::int64_t> max_height) const
{
    ChainSnapshot snap;
    snap.chain = chain;
    snap.cutoff_height = max_height;
    for_each_block(chain, max_height, [&](const Block& b) { snap.blocks.push_back(b); });
    for_each_transaction(chain, max_height, [&](const Transaction& t) { snap.transactions.push_back(t); });
    return snap;
}

std::pair<std::int64_t, Amount> Store::transaction_totals(ChainKind chain, std::optional<std::int64_t> max_height) const
{
    Statement q(db_.get(), "SELECT value FROM txs WHERE chain = ? AND height <= ?");
    q.bind(1, chain_key(chain)).bind(2, height_limit(max_height));
    std::int64_t count = 0;
    Amount volume = 0;
    while (q.step()) {
        ++count;
        volume += parse_amount(q.text(0));
    }
    return {count, volume};
}

std::vector<std::pair<int, std::int64_t>> Store::transactions_per_month(ChainKind chain,
                                                                        std::optional<std::int64_t> max_height) const
{
    Statement q(db_.get(), "SELECT m.month, COUNT(*) FROM txs t JOIN month_index m "
                           "ON m.chain = t.chain AND m.height = t.height "
                           "WHERE t.chain = ? AND t.height <= ? GROUP BY m.month ORDER BY m.month");
    q.bind(1, chain_key(chain)).bind(2, height_limit(max_height));
    std::vector<std::pair<int, std::int64_t>> out;
    while (q.step()) out.emplace_back(static_cast<int>(q.integer(0)), q.integer(1));
    return out;
}

std::string Store::dump() const
{
    std::ostringstream out;
    for (const char* sql : {"SELECT chain, height, hash, parent, time, auxpow, proof, txs FROM blocks ORDER BY chain, height",
                            "SELECT chain, hash, height, idx, sender, recipient, value, input, fee, gas, op_kind, op_name, "
                            "op_hash, op_fee, created, nonce FROM txs ORDER BY chain, hash",
                            "SELECT chain, height, month FROM month_index ORDER BY chain, height",
                            "SELECT chain, default_cutoff FROM meta ORDER BY chain"}) {
        sqlite3_stmt* raw = nullptr;
        if (sqlite3_prepare_v2(db_.get(), sql, -1, &raw, nullptr) != SQLITE_OK) {
            throw StoreError(std::string("sqlite prepare: ") + sqlite3_errmsg(db_.get()));
        }
        const int cols = sqlite3_column_count(raw);
        while (sqlite3_step(raw) == SQLITE_ROW) {
            for (int c = 0; c < cols; ++c) {
                if (c != 0) out << '|';
                const auto* p = sqlite3_column_text(raw, c);
                out << (p ? reinterpret_cast<const char*>(p) : "NULL");
            }
            out << '\n';
        }
        sqlite3_finalize(raw);
        out << "--\n";
    }
    return out.str();
}

} // namespace chainlens::model
