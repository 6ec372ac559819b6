// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "context.hpp"

#include <chainlens/chain/namecoin.hpp>
#include <chainlens/chain/peercoin.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/poison/scanner.hpp>
#include <chainlens/report/joins.hpp>

#include <fstream>

namespace chainlens::cli {

namespace {

using nlohmann::json;

struct ChainArgs {
    std::string rates;
    std::string day;
    std::int64_t window{36'000};
    std::string by{"month"};
    model::ChainKind chain{model::ChainKind::Ethereum};
    std::string signatures;
    std::string extract;
    std::size_t prefix_bytes{2};
    unsigned threads{0};
};

model::ChainSnapshot load_snapshot(const Context& ctx, model::ChainKind chain)
{
    const model::Store store = ctx.open_store();
    const auto cutoff = ctx.cutoff_height(store, chain);
    if (store.block_count(chain, cutoff) == 0) throw EmptyChain(std::string(model::chain_code(chain)));
    return store.snapshot(chain, cutoff);
}

void run_fees(Context& ctx, const ChainArgs& a)
{
    const model::ChainSnapshot snap = load_snapshot(ctx, model::ChainKind::Namecoin);
    const std::vector<chain::WeeklyFeeRow> rows = chain::weekly_fee_sums(snap);
    report::Report r;
    r.table.columns = {"week", "kind", "paid"};
    if (a.rates.empty()) {
        for (const auto& row : rows) {
            r.table.add({row.week.to_string(), std::string(model::name_op_code(row.kind)), format_units(row.paid, 8)});
        }
    } else {
        std::ifstream in(a.rates);
        if (!in) throw IoError("cannot open " + a.rates);
        const report::RateTable rates = report::load_rates(in);
        r.table.columns.push_back("usd");
        for (const auto& u : report::join_usd(rows, rates)) {
            r.table.add({u.fee.week.to_string(), std::string(model::name_op_code(u.fee.kind)),
                         format_units(u.fee.paid, 8), u.usd ? json(*u.usd) : json(nullptr)});
        }
    }
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_mergemine(Context& ctx, const ChainArgs&)
{
    const model::ChainSnapshot snap = load_snapshot(ctx, model::ChainKind::Namecoin);
    const chain::MergeMineSplit split = chain::merge_mine_split(snap);
    report::Report r;
    r.table.columns = {"category", "normal", "merge_mined", "merge_mined_percent"};
    for (const auto& row : split.rows()) r.table.add({row.label, row.normal, row.merged, row.merged_percent});
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_rereg(Context& ctx, const ChainArgs& a)
{
    if (a.window < 0) throw UsageError("--window must be non-negative");
    const model::ChainSnapshot snap = load_snapshot(ctx, model::ChainKind::Namecoin);
    chain::FeeSchedule schedule;
    schedule.expiry_window_blocks = a.window;
    const chain::ReregistrationReport rep = chain::detect_reregistrations(snap, parse_date(a.day), schedule);
    report::Report r;
    r.table.columns = {"status", "name", "tx_hash", "height", "prior_registration_heights", "last_renewal_height"};
    auto add_rows = [&](const std::vector<chain::FirstUpdateRecord>& recs, const char* status) {
        for (const auto& f : recs) {
            std::string prior;
            for (const std::int64_t h : f.prior_registration_heights) {
                prior += (prior.empty() ? "" : ";") + std::to_string(h);
            }
            r.table.add({status, f.name, f.tx_hash, f.height, prior,
                         f.last_renewal_height ? json(*f.last_renewal_height) : json(nullptr)});
        }
    };
    add_rows(rep.reregistered, "reregistered");
    add_rows(rep.anomalies, "anomaly");
    r.document = {{"day", a.day},
                  {"firstupdates_on_day", rep.firstupdates_on_day},
                  {"reregistered", rep.reregistered.size()},
                  {"anomalies", rep.anomalies.size()},
                  {"rows", r.table.to_json()}};
    ctx.emit(r, report::Format::Csv);
}

void run_pos_pow(Context& ctx, const ChainArgs& a)
{
    if (a.by != "month") throw UsageError("--by supports only month");
    const model::ChainSnapshot snap = load_snapshot(ctx, model::ChainKind::Peercoin);
    report::Report r;
    r.table.columns = {"month", "pos", "pow"};
    for (const auto& row : chain::pos_pow_counts(snap)) r.table.add({row.month.to_string(), row.pos, row.pow});
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_poison(Context& ctx, const ChainArgs& a)
{
    poison::SignatureDb db = poison::SignatureDb::default_db();
    if (!a.signatures.empty()) {
        std::ifstream in(a.signatures);
        if (!in) throw IoError("cannot open " + a.signatures);
        db = poison::SignatureDb::load_csv(in);
    }
    if (a.prefix_bytes == 0) throw UsageError("--prefix-bytes must be at least 1");
    db.match_prefix_bytes = a.prefix_bytes;

    const model::Store store = ctx.open_store();
    const auto cutoff = ctx.cutoff_height(store, a.chain);
    std::vector<model::Transaction> txs;
    store.for_each_transaction(a.chain, cutoff, [&](const model::Transaction& tx) { txs.push_back(tx); });

    poison::ScanOptions opts;
    if (!a.extract.empty()) opts.out_dir = a.extract;
    opts.threads = a.threads;
    const poison::ScanReport scan = poison::scan_corpus(txs, db, opts);
    for (const std::string& e : scan.write_errors) *ctx.err << "chainlens: " << e << '\n';

    report::Report r;
    r.table.columns = {"format", "tx_hash", "payload_size", "verified"};
    for (const auto& row : scan.rows) r.table.add({row.format, row.tx_hash, row.payload_size, row.verified});
    r.document = {{"rows", r.table.to_json()},
                  {"counts", scan.counts},
                  {"transactions_scanned", txs.size()},
                  {"prefix_bytes", db.match_prefix_bytes},
                  {"write_errors", scan.write_errors}};
    ctx.emit(r, report::Format::Csv);
}

} // namespace

void register_chain_commands(CLI::App& app, Context& ctx, Action& action)
{
    auto args = std::make_shared<ChainArgs>();
    auto bind = [&ctx, &action, args](CLI::App* sub, void (*fn)(Context&, const ChainArgs&)) {
        sub->callback([&ctx, &action, args, fn] { action = [&ctx, args, fn] { fn(ctx, *args); }; });
        return sub;
    };

    auto* nmc = app.add_subcommand("nmc", "Namecoin name-operation analytics");
    nmc->require_subcommand(1);
    bind(nmc->add_subcommand("fees", "Name-operation fees per ISO week"), run_fees)
        ->add_option("--rates", args->rates, "CSV of YYYY-Www,usd_per_coin to join");
    bind(nmc->add_subcommand("mergemine", "Activity in normal versus merge-mined blocks"), run_mergemine);
    auto* rereg = bind(nmc->add_subcommand("rereg", "Expired names registered again on one UTC day"), run_rereg);
    rereg->add_option("--day", args->day, "UTC day, YYYY-MM-DD")->required();
    rereg->add_option("--window", args->window, "Expiry window in blocks");

    auto* ppc = app.add_subcommand("ppc", "Peercoin analytics");
    ppc->require_subcommand(1);
    bind(ppc->add_subcommand("pos-pow", "Proof-of-stake and proof-of-work blocks per period"), run_pos_pow)
        ->add_option("--by", args->by, "Period granularity")
        ->check(CLI::IsMember({"month"}));

    auto* poison_cmd = app.add_subcommand("poison", "Embedded file payloads");
    poison_cmd->require_subcommand(1);
    auto* scan = bind(poison_cmd->add_subcommand("scan", "Match transaction inputs against file signatures"), run_poison);
    add_chain_option(*scan, args->chain);
    scan->add_option("--signatures", args->signatures, "Signature CSV (default: built-in table)");
    scan->add_option("--extract", args->extract, "Directory for candidate payloads");
    scan->add_option("--prefix-bytes", args->prefix_bytes, "Magic bytes compared in the first pass");
    scan->add_option("--threads", args->threads, "Parallel transactions (0: hardware threads)");
}

} // namespace chainlens::cli
