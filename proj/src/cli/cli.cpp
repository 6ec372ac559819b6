// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/cli/cli.hpp>

#include "context.hpp"

#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>
#include <chainlens/model/queries.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#ifndef CHAINLENS_VERSION
#define CHAINLENS_VERSION "unknown"
#endif

namespace chainlens::cli {

model::Store Context::open_store(bool create) const
{
    if (db.empty()) throw UsageError("--db is required");
    if (!create && !std::filesystem::exists(std::filesystem::path(db) / "ledger.sqlite")) {
        throw IoError("no ledger store in " + db);
    }
    return model::Store::open(db);
}

std::optional<std::int64_t> Context::cutoff_height(const model::Store& store, model::ChainKind chain) const
{
    if (cutoff.empty()) return store.resolve_cutoff(chain, std::nullopt);
    return model::apply_cutoff(store, chain, parse_rfc3339(cutoff));
}

void Context::emit(const report::Report& rep, report::Format fallback) const
{
    report::Format f = fallback;
    if (format == "csv") f = report::Format::Csv;
    if (format == "json") f = report::Format::Json;
    report::emit(rep, f, out_path, *out);
    if (stamp) {
        if (out_path.empty() || out_path == "-") throw UsageError("--stamp needs --out <file>");
        report::write_stamp(out_path, argv);
    }
}

CLI::Option* add_chain_option(CLI::App& app, model::ChainKind& chain, bool required)
{
    auto* opt = app.add_option_function<std::string>(
                       "--chain",
                       [&chain](const std::string& code) {
                           const auto c = model::parse_chain(code);
                           if (!c) throw CLI::ValidationError("--chain", "expected eth, nmc or ppc");
                           chain = *c;
                       },
                       "Chain: eth, nmc or ppc")
                    ->check(CLI::IsMember({"eth", "nmc", "ppc"}));
    if (required) opt->required();
    return opt;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Context ctx;
    ctx.out = &out;
    ctx.err = &err;
    for (int i = 0; i < argc; ++i) ctx.argv.emplace_back(argv[i]);

    CLI::App app{"chainlens: blockchain forensics and peer-to-peer measurement toolkit", "chainlens"};
    app.set_version_flag("--version", std::string(CHAINLENS_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--db", ctx.db, "Ledger store directory");
    app.add_option("--out", ctx.out_path, "Output file (default: standard output)");
    app.add_option("--format", ctx.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--cutoff", ctx.cutoff, "Only blocks with a timestamp before this RFC 3339 time");
    app.add_flag("--stamp", ctx.stamp, "Write run metadata to <out>.stamp.json");

    Action action;
    register_ledger_commands(app, ctx, action);
    register_eth_commands(app, ctx, action);
    register_chain_commands(app, ctx, action);
    register_net_commands(app, ctx, action);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitUsage;
    }

    try {
        if (!action) throw UsageError("missing subcommand; see --help");
        action();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "chainlens: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "chainlens: " << e.what() << '\n';
        return kExitData;
    } catch (const nlohmann::json::exception& e) {
        err << "chainlens: invalid JSON input: " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        err << "chainlens: " << e.what() << '\n';
        return kExitData;
    }
}

} // namespace chainlens::cli
