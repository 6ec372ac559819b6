// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/model/ingest.hpp>

#include <chainlens/common/hex.hpp>

#include <istream>
#include <limits>
#include <ostream>
#include <set>

namespace chainlens::model {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* field)
{
    const auto it = obj.find(field);
    if (it == obj.end() || it->is_null()) throw SchemaViolation(field, "missing required field");
    return *it;
}

const json* optional_field(const json& obj, const char* field)
{
    const auto it = obj.find(field);
    return (it == obj.end() || it->is_null()) ? nullptr : &*it;
}

/// Integer fields may arrive as JSON numbers or decimal strings.
std::int64_t non_negative_integer(const json& v, const char* field)
{
    if (v.is_number_unsigned()) {
        const auto u = v.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            throw SchemaViolation(field, "integer out of range");
        }
        return static_cast<std::int64_t>(u);
    }
    if (v.is_number_integer()) {
        const auto i = v.get<std::int64_t>();
        if (i < 0) throw SchemaViolation(field, "must be non-negative");
        return i;
    }
    if (v.is_string()) {
        Amount a = 0;
        try {
            a = parse_amount(v.get<std::string>());
        } catch (const Error&) {
            throw SchemaViolation(field, "not a non-negative decimal integer");
        }
        if (a > static_cast<Amount>(std::numeric_limits<std::int64_t>::max())) {
            throw SchemaViolation(field, "integer out of range");
        }
        return static_cast<std::int64_t>(a);
    }
    throw SchemaViolation(field, "must be an integer");
}

Amount amount_field(const json& v, const char* field)
{
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(v.get<std::int64_t>());
    if (v.is_string()) {
        try {
            return parse_amount(v.get<std::string>());
        } catch (const Error&) {
            throw SchemaViolation(field, "not a non-negative decimal integer");
        }
    }
    throw SchemaViolation(field, "must be a decimal string");
}

std::string string_field(const json& v, const char* field)
{
    if (!v.is_string()) throw SchemaViolation(field, "must be a string");
    return v.get<std::string>();
}

std::string hash_field(const json& v, const char* field, std::size_t bytes)
{
    const std::string text = string_field(v, field);
    std::string digits;
    try {
        digits = normalize_hex(text);
    } catch (const InvalidHex&) {
        throw SchemaViolation(field, "not hex: " + text);
    }
    if (digits.size() != bytes * 2) {
        throw SchemaViolation(field, "expected " + std::to_string(bytes) + " bytes of hex");
    }
    return "0x" + digits;
}

std::string address_field(const json& v, const char* field, ChainKind chain)
{
    if (chain == ChainKind::Ethereum) return hash_field(v, field, 20);
    std::string s = string_field(v, field);
    if (s.empty()) throw SchemaViolation(field, "empty address");
    return s;
}

void require_chain(const json& obj, ChainKind chain)
{
    const std::string code = string_field(require(obj, "chain"), "chain");
    const auto parsed = parse_chain(code);
    if (!parsed) throw SchemaViolation("chain", "unknown chain '" + code + "'");
    if (*parsed != chain) {
        throw SchemaViolation("chain", "record is for '" + code + "' but ingesting '" + std::string(chain_code(chain)) + "'");
    }
}

Block parse_block(const json& obj, ChainKind chain)
{
    Block b;
    b.chain = chain;
    b.height = non_negative_integer(require(obj, "height"), "height");
    b.hash = hash_field(require(obj, "hash"), "hash", 32);
    b.parent_hash = hash_field(require(obj, "parent"), "parent", 32);
    b.timestamp = non_negative_integer(require(obj, "time"), "time");
    if (b.timestamp <= 0) throw SchemaViolation("time", "must be strictly positive");
    if (const json* v = optional_field(obj, "auxpow")) {
        if (!v->is_boolean()) throw SchemaViolation("auxpow", "must be a boolean");
        b.is_auxpow = v->get<bool>();
    }
    if (const json* v = optional_field(obj, "proof")) {
        const std::string p = string_field(*v, "proof");
        if (p == "pow") b.proof = ProofType::PoW;
        else if (p == "pos") b.proof = ProofType::PoS;
        else throw SchemaViolation("proof", "must be \"pow\" or \"pos\"");
    }
    if (const json* v = optional_field(obj, "txs")) {
        if (!v->is_array()) throw SchemaViolation("txs", "must be an array");
        std::set<std::string> seen;
        for (const json& h : *v) {
            std::string hash = hash_field(h, "txs", 32);
            if (!seen.insert(hash).second) throw SchemaViolation("txs", "duplicate transaction hash " + hash);
            b.tx_hashes.push_back(std::move(hash));
        }
    }
    return b;
}

NameOpPayload parse_name_op(const json& obj)
{
    if (!obj.is_object()) throw SchemaViolation("name_op", "must be an object");
    NameOpPayload op;
    const std::string kind = string_field(require(obj, "kind"), "name_op.kind");
    const auto parsed = model::parse_name_op(kind);
    if (!parsed) throw SchemaViolation("name_op.kind", "unknown kind '" + kind + "'");
    op.kind = *parsed;
    if (const json* v = optional_field(obj, "name")) op.name = string_field(*v, "name_op.name");
    if (const json* v = optional_field(obj, "name_hash")) {
        const std::string text = string_field(*v, "name_op.name_hash");
        try {
            const std::string digits = normalize_hex(text);
            if (digits.empty()) throw SchemaViolation("name_op.name_hash", "empty hash");
            op.name_hash = "0x" + digits;
        } catch (const InvalidHex&) {
            throw SchemaViolation("name_op.name_hash", "not hex: " + text);
        }
    }
    op.paid_fee = amount_field(require(obj, "paid_fee"), "name_op.paid_fee");
    if (op.kind == NameOpKind::New && !op.name_hash) throw SchemaViolation("name_op.name_hash", "new requires a name hash");
    if (op.kind != NameOpKind::New && !op.name) throw SchemaViolation("name_op.name", kind + " requires a name");
    return op;
}

Transaction parse_tx(const json& obj, ChainKind chain)
{
    Transaction t;
    t.chain = chain;
    t.hash = hash_field(require(obj, "hash"), "hash", 32);
    t.block_height = non_negative_integer(require(obj, "height"), "height");
    t.index_in_block = non_negative_integer(require(obj, "index"), "index");
    t.sender = address_field(require(obj, "from"), "from", chain);
    if (const json* v = optional_field(obj, "to")) t.recipient = address_field(*v, "to", chain);
    t.value = amount_field(require(obj, "value"), "value");
    if (const json* v = optional_field(obj, "input")) {
        const std::string text = string_field(*v, "input");
        try {
            t.input_data = "0x" + normalize_hex(text);
        } catch (const InvalidHex& e) {
            throw SchemaViolation("input", std::string("invalid hex data: ") + e.what());
        }
    }
    if (const json* v = optional_field(obj, "fee")) t.fee = amount_field(*v, "fee");
    if (const json* v = optional_field(obj, "gas")) t.gas_limit = static_cast<std::uint64_t>(non_negative_integer(*v, "gas"));
    if (const json* v = optional_field(obj, "name_op")) {
        if (chain != ChainKind::Namecoin) throw SchemaViolation("name_op", "name operations exist only on nmc");
        t.name_op = parse_name_op(*v);
    }
    if (const json* v = optional_field(obj, "creates")) t.created_address = address_field(*v, "creates", chain);
    if (const json* v = optional_field(obj, "nonce")) t.nonce = static_cast<std::uint64_t>(non_negative_integer(*v, "nonce"));
    return t;
}

} // namespace

std::string_view reject_kind_name(RejectKind kind) noexcept
{
    switch (kind) {
    case RejectKind::MalformedJson: return "MalformedJson";
    case RejectKind::SchemaViolation: return "SchemaViolation";
    case RejectKind::ConflictingBlock: return "ConflictingBlock";
    case RejectKind::ConflictingTransaction: return "ConflictingTransaction";
    }
    return "?";
}

IngestAborted::IngestAborted(Rejection rejection)
    : Error("line " + std::to_string(rejection.line) + ": " + std::string(reject_kind_name(rejection.kind)) + ": " +
            rejection.message),
      rejection_(std::move(rejection))
{
}

Record parse_record(const json& object, ChainKind chain)
{
    if (!object.is_object()) throw SchemaViolation("type", "line is not a JSON object");
    const std::string type = string_field(require(object, "type"), "type");
    require_chain(object, chain);
    if (type == "block") return parse_block(object, chain);
    if (type == "tx") return parse_tx(object, chain);
    throw SchemaViolation("type", "unknown record type '" + type + "'");
}

IngestSummary ingest_blocks(std::istream& source, ChainKind chain, Store& store, const IngestOptions& options)
{
    IngestSummary summary;
    std::string line;
    std::size_t lineno = 0;
    const auto reject = [&](RejectKind kind, std::string field, std::string message) {
        Rejection r{lineno, kind, std::move(field), std::move(message)};
        if (options.log) {
            *options.log << "line " << r.line << ": " << reject_kind_name(r.kind);
            if (!r.field.empty()) *options.log << " [" << r.field << "]";
            *options.log << ": " << r.message << '\n';
        }
        if (options.strict) {
            store.rollback();
            throw IngestAborted(r);
        }
        summary.rejected_lines.push_back(std::move(r));
    };

    store.begin();
    try {
        while (std::getline(source, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            json obj;
            try {
                obj = json::parse(line);
            } catch (const json::parse_error& e) {
                reject(RejectKind::MalformedJson, "", e.what());
                continue;
            }
            Record record;
            try {
                record = parse_record(obj, chain);
            } catch (const SchemaViolation& e) {
                reject(RejectKind::SchemaViolation, e.field(), e.what());
                continue;
            }
            try {
                if (const auto* block = std::get_if<Block>(&record)) {
                    if (store.put_block(*block) == InsertOutcome::Inserted) ++summary.blocks_loaded;
                } else if (store.put_transaction(std::get<Transaction>(record)) == InsertOutcome::Inserted) {
                    ++summary.txs_loaded;
                }
            } catch (const ConflictingBlock& e) {
                reject(RejectKind::ConflictingBlock, "", e.what());
            } catch (const ConflictingTransaction& e) {
                reject(RejectKind::ConflictingTransaction, "", e.what());
            }
        }
        store.commit();
    } catch (const IngestAborted&) {
        throw;
    } catch (...) {
        store.rollback();
        throw;
    }
    return summary;
}

json to_json(const Block& block)
{
    json j;
    j["type"] = "block";
    j["chain"] = chain_code(block.chain);
    j["height"] = block.height;
    j["hash"] = block.hash;
    j["parent"] = block.parent_hash;
    j["time"] = block.timestamp;
    if (block.is_auxpow) j["auxpow"] = *block.is_auxpow;
    if (block.proof) j["proof"] = *block.proof == ProofType::PoS ? "pos" : "pow";
    j["txs"] = block.tx_hashes;
    return j;
}

json to_json(const Transaction& tx)
{
    json j;
    j["type"] = "tx";
    j["chain"] = chain_code(tx.chain);
    j["hash"] = tx.hash;
    j["height"] = tx.block_height;
    j["index"] = tx.index_in_block;
    j["from"] = tx.sender;
    j["to"] = tx.recipient ? json(*tx.recipient) : json(nullptr);
    j["value"] = amount_to_string(tx.value);
    j["input"] = tx.input_data;
    if (tx.fee) j["fee"] = amount_to_string(*tx.fee);
    if (tx.gas_limit) j["gas"] = *tx.gas_limit;
    if (tx.name_op) {
        json op;
        op["kind"] = name_op_code(tx.name_op->kind);
        if (tx.name_op->name) op["name"] = *tx.name_op->name;
        if (tx.name_op->name_hash) op["name_hash"] = *tx.name_op->name_hash;
        op["paid_fee"] = amount_to_string(tx.name_op->paid_fee);
        j["name_op"] = op;
    }
    if (tx.created_address) j["creates"] = *tx.created_address;
    if (tx.nonce) j["nonce"] = *tx.nonce;
    return j;
}

} // namespace chainlens::model
