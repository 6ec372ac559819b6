// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/common/csv.hpp>
#include <chainlens/common/hex.hpp>
#include <chainlens/poison/scanner.hpp>

#include "../support/support.hpp"

#include <boost/test/unit_test.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace chainlens;
using namespace chainlens::poison;
using nlohmann::json;

namespace {

std::vector<model::Transaction> corpus_transactions(const json& scan)
{
    std::vector<model::Transaction> txs;
    for (const json& t : scan["transactions"]) {
        model::Transaction tx;
        tx.hash = t["hash"].get<std::string>();
        tx.input_data = t["input"].get<std::string>();
        txs.push_back(tx);
    }
    return txs;
}

const SignatureEntry& entry(const SignatureDb& db, const std::string& format)
{
    const auto it = std::find_if(db.entries.begin(), db.entries.end(),
                                 [&](const SignatureEntry& e) { return e.format == format; });
    BOOST_REQUIRE(it != db.entries.end());
    return *it;
}

} // namespace

BOOST_AUTO_TEST_SUITE(poison_tests)

BOOST_AUTO_TEST_CASE(default_db_matches_data_file)
{
    std::ifstream in(test::data_path("signatures.csv"));
    const SignatureDb file = SignatureDb::load_csv(in);
    const SignatureDb db = SignatureDb::default_db();
    BOOST_CHECK_EQUAL(db.entries.size(), 75U);
    BOOST_REQUIRE_EQUAL(file.entries.size(), db.entries.size());
    for (std::size_t i = 0; i < db.entries.size(); ++i) {
        BOOST_CHECK_EQUAL(file.entries[i].format, db.entries[i].format);
        BOOST_CHECK(file.entries[i].magic == db.entries[i].magic);
        BOOST_CHECK_EQUAL(file.entries[i].offset, db.entries[i].offset);
        BOOST_CHECK_EQUAL(file.entries[i].extension, db.entries[i].extension);
    }
    BOOST_CHECK_EQUAL(db.match_prefix_bytes, 2U);
    BOOST_CHECK_EQUAL(db.longest_magic(), test::load_json("poison_corpus.json")["longest_magic"].get<std::size_t>());
}

BOOST_AUTO_TEST_CASE(bad_tables_are_rejected)
{
    for (const char* text : {"", "# only a comment\n", "png,89504e47,0,png\npng,ffd8,0,jpg\n", "png,zz,0,png\n",
                             "png,89504e47,x,png\n", "png,89504e47,0\n"}) {
        std::istringstream in(text);
        BOOST_CHECK_THROW(SignatureDb::load_csv(in), MalformedRow);
    }
}

BOOST_AUTO_TEST_CASE(samples_identify_like_reference_library)
{
    const SignatureDb db = SignatureDb::default_db();
    const json corpus = test::load_json("poison_corpus.json");
    BOOST_REQUIRE_EQUAL(corpus["samples"].size(), 16U);
    for (const json& s : corpus["samples"]) {
        const Bytes payload = from_hex(s["hex"].get<std::string>());
        const auto prefix = match_signatures(payload, db);
        BOOST_CHECK(prefix == s["prefix_matches"].get<std::vector<std::string>>());
        std::vector<std::string> full;
        for (const SignatureEntry& e : db.entries) {
            if (full_magic_match(payload, e)) full.push_back(e.format);
        }
        BOOST_CHECK(full == s["full_matches"].get<std::vector<std::string>>());
        BOOST_REQUIRE(!full.empty());
        BOOST_CHECK_EQUAL("." + entry(db, full.front()).extension, s["identified_as"].get<std::string>());
    }
}

BOOST_AUTO_TEST_CASE(scan_detection_set_is_exact)
{
    const json scan = test::load_json("poison_corpus.json")["scan"];
    const auto txs = corpus_transactions(scan);
    BOOST_CHECK_EQUAL(txs.size(), 56U);
    std::set<std::pair<std::string, std::string>> collisions;
    for (const json& c : scan["prefix_collisions"]) {
        collisions.insert({c["tx_hash"].get<std::string>(), c["format"].get<std::string>()});
    }
    for (const unsigned threads : {1U, 3U}) {
        const ScanReport r = scan_corpus(txs, SignatureDb::default_db(), {std::nullopt, threads});
        BOOST_REQUIRE_EQUAL(r.rows.size(), scan["expected_rows"].size());
        for (std::size_t i = 0; i < r.rows.size(); ++i) {
            const json& want = scan["expected_rows"][i];
            BOOST_CHECK_EQUAL(r.rows[i].format, want["format"].get<std::string>());
            BOOST_CHECK_EQUAL(r.rows[i].tx_hash, want["tx_hash"].get<std::string>());
            BOOST_CHECK_EQUAL(r.rows[i].payload_size, want["size"].get<std::size_t>());
            BOOST_CHECK_EQUAL(r.rows[i].verified, collisions.count({r.rows[i].tx_hash, r.rows[i].format}) == 0);
        }
        using Counts = std::map<std::string, std::size_t>;
        BOOST_CHECK(r.counts == scan["expected_counts"].get<Counts>());
        // Every planted payload is found under its intended format.
        for (const auto& [hash, format] : scan["intended"].items()) {
            BOOST_CHECK(std::any_of(r.rows.begin(), r.rows.end(), [&](const ScanRow& row) {
                return row.tx_hash == hash && row.format == format.get<std::string>() && row.verified;
            }));
        }
    }
}

BOOST_AUTO_TEST_CASE(longer_prefixes_find_a_subset)
{
    const json scan = test::load_json("poison_corpus.json")["scan"];
    const auto txs = corpus_transactions(scan);
    SignatureDb db = SignatureDb::default_db();
    std::vector<ScanRow> prev = scan_corpus(txs, db).rows;
    for (std::size_t n = 3; n <= 8; ++n) {
        db.match_prefix_bytes = n;
        const std::vector<ScanRow> rows = scan_corpus(txs, db).rows;
        for (const ScanRow& row : rows) BOOST_CHECK(std::find(prev.begin(), prev.end(), row) != prev.end());
        prev = rows;
    }
}

BOOST_AUTO_TEST_CASE(extraction_writes_candidates)
{
    const json scan = test::load_json("poison_corpus.json")["scan"];
    const auto txs = corpus_transactions(scan);
    test::TempDir dir;
    const SignatureDb db = SignatureDb::default_db();
    const ScanReport r = scan_corpus(txs, db, {dir.path(), 2});
    BOOST_CHECK(r.write_errors.empty());
    for (const ScanRow& row : r.rows) {
        const auto path = dir.path() / (row.tx_hash + "." + entry(db, row.format).extension);
        BOOST_REQUIRE(std::filesystem::exists(path));
        BOOST_CHECK_EQUAL(std::filesystem::file_size(path), row.payload_size);
    }
    const ScanReport missing = scan_corpus(txs, db, {dir.path() / "absent" / "deeper", 1});
    BOOST_CHECK_EQUAL(missing.rows.size(), r.rows.size());
}

BOOST_AUTO_TEST_CASE(payload_hex_round_trip)
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 1000; ++i) {
        const std::string hex = test::random_hex(rng, rng() % 300);
        const Bytes payload = extract_payload(hex);
        BOOST_REQUIRE_EQUAL(to_hex(payload), hex);
        BOOST_CHECK(extract_payload(hex.substr(2)) == payload);
    }
    BOOST_CHECK(extract_payload("0x").empty());
    BOOST_CHECK_THROW(extract_payload("0x123"), InvalidHex);
}

BOOST_AUTO_TEST_SUITE_END()
