// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "context.hpp"

#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/crawler/node.hpp>
#include <chainlens/model/ingest.hpp>
#include <chainlens/model/queries.hpp>
#include <chainlens/report/joins.hpp>

#include <fstream>
#include <sstream>

namespace chainlens::cli {

namespace {

using nlohmann::json;

struct LedgerArgs {
    model::ChainKind chain{model::ChainKind::Ethereum};
    std::string input;
    bool strict{false};
    std::string peers;
    std::string geo;
};

void run_ingest(Context& ctx, const LedgerArgs& a)
{
    std::ifstream in(a.input, std::ios::binary);
    if (!in) throw IoError("cannot open " + a.input);
    model::Store store = ctx.open_store(true);
    model::IngestOptions opts;
    opts.strict = a.strict;
    opts.log = ctx.err;
    const model::IngestSummary s = model::ingest_blocks(in, a.chain, store, opts);

    report::Report r;
    r.document = {{"chain", model::chain_code(a.chain)},
                  {"blocks_loaded", s.blocks_loaded},
                  {"txs_loaded", s.txs_loaded},
                  {"rejected_lines", s.rejected_lines.size()}};
    r.table.columns = {"chain", "blocks_loaded", "txs_loaded", "rejected_lines"};
    r.table.add({std::string(model::chain_code(a.chain)), s.blocks_loaded, s.txs_loaded, s.rejected_lines.size()});
    if (!ctx.cutoff.empty()) {
        const std::int64_t h = model::apply_cutoff(store, a.chain, parse_rfc3339(ctx.cutoff));
        store.set_default_cutoff(a.chain, h);
        r.document["cutoff_height"] = h;
    }
    ctx.emit(r, report::Format::Json);
}

void run_summarize(Context& ctx, const LedgerArgs& a)
{
    const model::Store store = ctx.open_store();
    const model::ChainSummary s = model::summarize_chain(store, a.chain, ctx.cutoff_height(store, a.chain));
    report::Report r;
    r.table.columns = {"chain", "first_block_time", "cutoff_time", "cutoff_height", "block_count", "tx_count", "tx_volume"};
    r.table.add({std::string(model::chain_code(s.chain)), format_rfc3339(s.first_block_time),
                 format_rfc3339(s.cutoff_time), s.cutoff_height, s.block_count, s.tx_count,
                 amount_to_string(s.tx_volume)});
    r.document = r.table.to_json()[0];
    ctx.emit(r, report::Format::Csv);
}

void run_tx_monthly(Context& ctx, const LedgerArgs& a)
{
    const model::Store store = ctx.open_store();
    const auto rows = model::monthly_tx_counts(store, a.chain, ctx.cutoff_height(store, a.chain));
    report::Report r;
    r.table.columns = {"month", "count"};
    for (const model::MonthCount& m : rows) r.table.add({m.month.to_string(), m.count});
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

/// A crawl report's known peers, or one address per line.
std::vector<IpAddress> load_ips(const std::string& path)
{
    const std::string text = read_file(path);
    std::vector<IpAddress> ips;
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
        const json doc = json::parse(text);
        const json& peers = doc.is_object() ? doc.at("known_peers") : doc;
        for (const json& p : peers) {
            const std::string s = p.is_object() ? p.at("ip").get<std::string>() : p.get<std::string>();
            const auto ip = IpAddress::parse(s);
            if (!ip) throw Error("invalid address '" + s + "' in " + path);
            ips.push_back(*ip);
        }
        return ips;
    }
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        const auto e = line.find_last_not_of(" \t\r");
        const std::string s = line.substr(b, e - b + 1);
        const auto ip = IpAddress::parse(s);
        if (!ip) throw MalformedRow("invalid address '" + s + "'", n);
        ips.push_back(*ip);
    }
    return ips;
}

void run_countries(Context& ctx, const LedgerArgs& a)
{
    const std::vector<IpAddress> ips = load_ips(a.peers);
    std::ifstream geo(a.geo);
    if (!geo) throw IoError("cannot open " + a.geo);
    const auto rows = report::join_country(ips, report::load_geo(geo));
    report::Report r;
    r.table.columns = {"country", "count"};
    for (const auto& [country, count] : rows) r.table.add({country, count});
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

} // namespace

void register_ledger_commands(CLI::App& app, Context& ctx, Action& action)
{
    auto args = std::make_shared<LedgerArgs>();

    auto* ingest = app.add_subcommand("ingest", "Load an NDJSON block/transaction dump into the store");
    add_chain_option(*ingest, args->chain);
    ingest->add_option("--input", args->input, "NDJSON dump")->required();
    ingest->add_flag("--strict", args->strict, "Abort on the first rejected line");
    ingest->callback([&, args] { action = [&, args] { run_ingest(ctx, *args); }; });

    auto* summarize = app.add_subcommand("summarize", "Block/transaction totals for one chain");
    add_chain_option(*summarize, args->chain);
    summarize->callback([&, args] { action = [&, args] { run_summarize(ctx, *args); }; });

    auto* rep = app.add_subcommand("report", "Cross-chain reports");
    rep->require_subcommand(1);
    auto* monthly = rep->add_subcommand("tx-monthly", "Transactions per UTC month");
    add_chain_option(*monthly, args->chain);
    monthly->callback([&, args] { action = [&, args] { run_tx_monthly(ctx, *args); }; });

    auto* countries = rep->add_subcommand("countries", "Peer addresses per country");
    countries->add_option("--peers", args->peers, "Crawl report JSON or one IP per line")->required();
    countries->add_option("--geo", args->geo, "CSV of cidr_or_ip,country")->required();
    countries->callback([&, args] { action = [&, args] { run_countries(ctx, *args); }; });
}

} // namespace chainlens::cli
