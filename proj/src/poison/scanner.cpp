// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/poison/scanner.hpp>

#include <chainlens/common/csv.hpp>
#include <chainlens/common/errors.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace chainlens::poison {

namespace detail {
extern const char* const kDefaultSignatures;
}

SignatureDb SignatureDb::default_db()
{
    std::istringstream in(detail::kDefaultSignatures);
    return load_csv(in);
}

SignatureDb SignatureDb::load_csv(std::istream& in)
{
    SignatureDb db;
    std::set<std::string> seen;
    for (const csv::TableRow& row : csv::read_table(in)) {
        const auto bad = [&](const std::string& why) { return MalformedRow("signature row: " + why, row.line); };
        if (row.fields.size() != 4) throw bad("expected format,magic_hex,offset,extension");
        SignatureEntry e;
        e.format = row.fields[0];
        if (e.format.empty()) throw bad("empty format");
        try {
            e.magic = from_hex(row.fields[1]);
        } catch (const InvalidHex&) {
            throw bad("invalid magic hex");
        }
        if (e.magic.empty() || e.magic.size() > 16) throw bad("magic must be 1 to 16 bytes");
        const std::string& off = row.fields[2];
        const auto [ptr, ec] = std::from_chars(off.data(), off.data() + off.size(), e.offset);
        if (ec != std::errc{} || ptr != off.data() + off.size()) throw bad("invalid offset");
        e.extension = row.fields[3];
        if (e.extension.empty() || e.extension.find_first_of("/\\") != std::string::npos) {
            throw bad("invalid extension");
        }
        if (!seen.insert(e.format).second) throw bad("duplicate format " + e.format);
        db.entries.push_back(std::move(e));
    }
    if (db.entries.empty()) throw MalformedRow("signature table has no entries", 0);
    return db;
}

std::size_t SignatureDb::longest_magic() const noexcept
{
    std::size_t n = 0;
    for (const SignatureEntry& e : entries) n = std::max(n, e.magic.size());
    return n;
}

Bytes extract_payload(std::string_view input_hex)
{
    return from_hex(input_hex);
}

namespace {

bool prefix_match(std::span<const std::uint8_t> payload, const SignatureEntry& e, std::size_t k)
{
    if (k == 0 || payload.size() < e.offset || payload.size() - e.offset < k) return false;
    return std::equal(e.magic.begin(), e.magic.begin() + static_cast<std::ptrdiff_t>(k),
                      payload.begin() + static_cast<std::ptrdiff_t>(e.offset));
}

} // namespace

std::vector<std::string> match_signatures(std::span<const std::uint8_t> payload, const SignatureDb& db)
{
    std::vector<std::string> out;
    for (const SignatureEntry& e : db.entries) {
        if (prefix_match(payload, e, std::min(e.magic.size(), db.match_prefix_bytes))) out.push_back(e.format);
    }
    return out;
}

bool full_magic_match(std::span<const std::uint8_t> payload, const SignatureEntry& entry)
{
    return prefix_match(payload, entry, entry.magic.size());
}

ScanReport scan_corpus(std::span<const model::Transaction> transactions, const SignatureDb& db,
                       const ScanOptions& options)
{
    std::vector<std::vector<ScanRow>> per_tx(transactions.size());
    std::vector<std::string> write_errors;
    std::mutex errors_mutex;
    std::exception_ptr failure;
    std::atomic<std::size_t> next{0};

    if (options.out_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*options.out_dir, ec);
        if (ec) write_errors.push_back("cannot create " + options.out_dir->string() + ": " + ec.message());
    }

    auto work = [&] {
        try {
            for (std::size_t i = next++; i < transactions.size(); i = next++) {
                const model::Transaction& tx = transactions[i];
                Bytes payload;
                try {
                    payload = extract_payload(tx.input_data);
                } catch (const InvalidHex& e) {
                    throw Error("transaction " + tx.hash + ": " + e.what());
                }
                for (const SignatureEntry& e : db.entries) {
                    if (!prefix_match(payload, e, std::min(e.magic.size(), db.match_prefix_bytes))) continue;
                    per_tx[i].push_back(ScanRow{e.format, tx.hash, payload.size(), full_magic_match(payload, e)});
                    if (!options.out_dir) continue;
                    const auto path = *options.out_dir / (tx.hash + "." + e.extension);
                    std::ofstream out(path, std::ios::binary | std::ios::trunc);
                    out.write(reinterpret_cast<const char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
                    if (!out) {
                        const std::lock_guard lock(errors_mutex);
                        write_errors.push_back("cannot write " + path.string());
                    }
                }
            }
        } catch (...) {
            next = transactions.size();
            const std::lock_guard lock(errors_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    unsigned n = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    n = static_cast<unsigned>(std::min<std::size_t>(n, transactions.size()));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    ScanReport report;
    for (auto& rows : per_tx) {
        for (ScanRow& r : rows) {
            ++report.counts[r.format];
            report.rows.push_back(std::move(r));
        }
    }
    std::sort(write_errors.begin(), write_errors.end());
    report.write_errors = std::move(write_errors);
    return report;
}

} // namespace chainlens::poison
