// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/chain/namecoin.hpp>
#include <chainlens/chain/peercoin.hpp>

#include "../support/support.hpp"

#include <boost/test/unit_test.hpp>

#include <random>

using namespace chainlens;
using namespace chainlens::chain;
using nlohmann::json;

namespace {

model::ChainSnapshot fixture_snapshot(const char* name, model::ChainKind chain)
{
    return test::ingest_fixture(name, chain).snapshot(chain, std::nullopt);
}

void check_records(const std::vector<FirstUpdateRecord>& got, const json& want)
{
    BOOST_REQUIRE_EQUAL(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        BOOST_CHECK_EQUAL(got[i].name, want[i]["name"].get<std::string>());
        BOOST_CHECK_EQUAL(got[i].tx_hash, want[i]["tx"].get<std::string>());
        BOOST_CHECK(got[i].prior_registration_heights == want[i]["prior"].get<std::vector<std::int64_t>>());
        BOOST_CHECK(got[i].last_renewal_height == want[i]["last_renewal"].get<std::int64_t>());
    }
}

} // namespace

BOOST_AUTO_TEST_SUITE(chain_tests)

BOOST_AUTO_TEST_CASE(merge_mine_split_matches_hand_counts)
{
    const json expected = test::load_json("chain_expected.json")["nmc"]["mergemine"];
    const MergeMineSplit split = merge_mine_split(fixture_snapshot("nmc_labeled.ndjson", model::ChainKind::Namecoin));
    const auto rows = split.rows();
    BOOST_REQUIRE_EQUAL(rows.size(), expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BOOST_CHECK_EQUAL(rows[i].label, expected[i]["label"].get<std::string>());
        BOOST_CHECK_EQUAL(rows[i].normal, expected[i]["normal"].get<std::int64_t>());
        BOOST_CHECK_EQUAL(rows[i].merged, expected[i]["merged"].get<std::int64_t>());
        const double total = static_cast<double>(rows[i].normal + rows[i].merged);
        BOOST_CHECK_CLOSE(rows[i].merged_percent, 100.0 * static_cast<double>(rows[i].merged) / total, 1e-9);
    }
    BOOST_CHECK_EQUAL(split.normal.new_ops + split.normal.firstupdate_ops + split.normal.update_ops, 4);
}

BOOST_AUTO_TEST_CASE(auxpow_before_activation_is_rejected)
{
    model::ChainSnapshot snap = fixture_snapshot("nmc_labeled.ndjson", model::ChainKind::Namecoin);
    for (model::Block& b : snap.blocks) {
        if (b.height < 19'200) {
            b.is_auxpow = true;
            BOOST_CHECK_EXCEPTION(merge_mine_split(snap), AuxPowBeforeActivation,
                                  [&](const AuxPowBeforeActivation& e) { return e.height() == b.height; });
            return;
        }
    }
    BOOST_FAIL("fixture has no block below the activation height");
}

BOOST_AUTO_TEST_CASE(weekly_fees_are_exact)
{
    const json expected = test::load_json("chain_expected.json")["nmc"]["weekly_fees"];
    const auto rows = weekly_fee_sums(fixture_snapshot("nmc_labeled.ndjson", model::ChainKind::Namecoin));
    BOOST_REQUIRE_EQUAL(rows.size(), expected.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BOOST_CHECK_EQUAL(rows[i].week.to_string(), expected[i]["week"].get<std::string>());
        BOOST_CHECK_EQUAL(model::name_op_code(rows[i].kind), expected[i]["kind"].get<std::string>());
        BOOST_CHECK_EQUAL(amount_to_string(rows[i].paid), expected[i]["paid"].get<std::string>());
    }
}

BOOST_AUTO_TEST_CASE(network_fee_curve)
{
    BOOST_CHECK(default_network_fee(0) == 50 * kCoin);
    Amount prev = default_network_fee(0);
    for (std::int64_t h = 0; h < 10'000'000; h += 997) {
        const Amount f = default_network_fee(h);
        BOOST_CHECK(f <= prev);
        prev = f;
    }
    BOOST_CHECK(default_network_fee(std::int64_t{1} << 40) == 0);
    FeeSchedule s;
    BOOST_CHECK(expected_fee(NameOpKind::New, 5, s) == kCoin / 100);
    BOOST_CHECK(expected_fee(NameOpKind::Update, 5, s) == kCoin / 200);
    BOOST_CHECK(expected_fee(NameOpKind::FirstUpdate, 5, s) == kCoin / 200 + default_network_fee(5));
    s.network_fee_curve = [](std::int64_t) { return Amount{7}; };
    BOOST_CHECK(expected_fee(NameOpKind::FirstUpdate, 5, s) == kCoin / 200 + 7);
}

BOOST_AUTO_TEST_CASE(malformed_name_ops)
{
    model::Transaction tx;
    tx.chain = model::ChainKind::Namecoin;
    tx.hash = "0xaa";
    BOOST_CHECK(!classify_name_op(tx));
    tx.name_op = NameOpPayload{NameOpKind::FirstUpdate, std::nullopt, std::string("0x11"), 0};
    BOOST_CHECK_THROW(classify_name_op(tx), MalformedNameOp);
    tx.name_op = NameOpPayload{NameOpKind::New, std::string("d/x"), std::nullopt, 0};
    BOOST_CHECK_THROW(classify_name_op(tx), MalformedNameOp);
    tx.name_op = NameOpPayload{NameOpKind::Update, std::string("d/x"), std::nullopt, 0};
    BOOST_CHECK(classify_name_op(tx)->name == "d/x");
}

BOOST_AUTO_TEST_CASE(reregistrations_match_constructed_cases)
{
    const json expected = test::load_json("chain_expected.json")["nmc"]["rereg"];
    FeeSchedule s;
    s.expiry_window_blocks = expected["window"].get<std::int64_t>();
    const ReregistrationReport r = detect_reregistrations(
        fixture_snapshot("nmc_labeled.ndjson", model::ChainKind::Namecoin),
        parse_date(expected["day"].get<std::string>()), s);
    BOOST_CHECK_EQUAL(r.firstupdates_on_day, expected["firstupdates_on_day"].get<std::int64_t>());
    check_records(r.reregistered, expected["reregistered"]);
    check_records(r.anomalies, expected["anomalies"]);
}

BOOST_AUTO_TEST_CASE(pos_pow_matches_hand_counts)
{
    const json expected = test::load_json("chain_expected.json")["ppc"];
    const model::ChainSnapshot snap = fixture_snapshot("ppc_labeled.ndjson", model::ChainKind::Peercoin);
    const auto rows = pos_pow_counts(snap);
    BOOST_REQUIRE_EQUAL(rows.size(), expected.size());
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        BOOST_CHECK_EQUAL(rows[i].month.to_string(), expected[i]["month"].get<std::string>());
        BOOST_CHECK_EQUAL(rows[i].pos, expected[i]["pos"].get<std::int64_t>());
        BOOST_CHECK_EQUAL(rows[i].pow, expected[i]["pow"].get<std::int64_t>());
        sum += rows[i].pos + rows[i].pow;
    }
    BOOST_CHECK_EQUAL(sum, static_cast<std::int64_t>(snap.blocks.size()));
}

BOOST_AUTO_TEST_CASE(pos_pow_conserves_blocks)
{
    std::mt19937_64 rng(17);
    for (int round = 0; round < 20; ++round) {
        const model::ChainSnapshot snap =
            test::ingest_text(test::random_chain_ndjson(rng, model::ChainKind::Peercoin, 30 + static_cast<int>(rng() % 200)),
                              model::ChainKind::Peercoin)
                .snapshot(model::ChainKind::Peercoin, std::nullopt);
        std::int64_t sum = 0;
        for (const ProofMonthRow& r : pos_pow_counts(snap)) sum += r.pos + r.pow;
        BOOST_CHECK_EQUAL(sum, static_cast<std::int64_t>(snap.blocks.size()));
    }
}

BOOST_AUTO_TEST_CASE(missing_proof_tag_is_rejected)
{
    model::ChainSnapshot snap = fixture_snapshot("ppc_labeled.ndjson", model::ChainKind::Peercoin);
    snap.blocks.at(3).proof.reset();
    const std::int64_t h = snap.blocks.at(3).height;
    BOOST_CHECK_EXCEPTION(pos_pow_counts(snap), MissingProofTag, [&](const MissingProofTag& e) { return e.height() == h; });
}

BOOST_AUTO_TEST_SUITE_END()
