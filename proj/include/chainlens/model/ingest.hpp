// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_MODEL_INGEST_HPP
#define CHAINLENS_MODEL_INGEST_HPP

#include <chainlens/common/errors.hpp>
#include <chainlens/model/store.hpp>
#include <chainlens/model/types.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace chainlens::model {

enum class RejectKind { MalformedJson, SchemaViolation, ConflictingBlock, ConflictingTransaction };

std::string_view reject_kind_name(RejectKind kind) noexcept;

struct Rejection {
    std::size_t line{0};
    RejectKind kind{RejectKind::SchemaViolation};
    /// Offending field for schema violations; empty otherwise.
    std::string field;
    std::string message;
};

struct IngestSummary {
    std::int64_t blocks_loaded{0};
    std::int64_t txs_loaded{0};
    std::vector<Rejection> rejected_lines;
};

struct IngestOptions {
    /// First rejected line aborts the ingest and rolls back everything.
    bool strict{false};
    /// Rejections are logged here, one per line, when set.
    std::ostream* log{nullptr};
};

/// Raised by a record that does not match the NDJSON schema.
class SchemaViolation : public Error
{
public:
    SchemaViolation(std::string field, const std::string& message)
        : Error("SchemaViolation(" + field + "): " + message), field_(std::move(field)) {}
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Thrown in strict mode; carries the first rejection.
class IngestAborted : public Error
{
public:
    explicit IngestAborted(Rejection rejection);
    const Rejection& rejection() const noexcept { return rejection_; }

private:
    Rejection rejection_;
};

using Record = std::variant<Block, Transaction>;

/// Validates one decoded NDJSON object for `chain`. Throws SchemaViolation.
Record parse_record(const nlohmann::json& object, ChainKind chain);

/// Streams one JSON object per line into the store. Re-ingesting the same
/// input is a no-op. Blank lines are skipped.
IngestSummary ingest_blocks(std::istream& source, ChainKind chain, Store& store, const IngestOptions& options = {});

/// The inverse of parse_record, emitting the NDJSON schema.
nlohmann::json to_json(const Block& block);
nlohmann::json to_json(const Transaction& tx);

} // namespace chainlens::model

#endif // CHAINLENS_MODEL_INGEST_HPP
