// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CLI_CONTEXT_HPP
#define CHAINLENS_CLI_CONTEXT_HPP

#include <chainlens/model/store.hpp>
#include <chainlens/model/types.hpp>
#include <chainlens/report/table.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chainlens::cli {

/// Bad or missing arguments detected after parsing.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct Context {
    std::ostream* out{nullptr};
    std::ostream* err{nullptr};
    std::vector<std::string> argv;

    std::string db;
    std::string out_path;
    std::string format;
    std::string cutoff;
    bool stamp{false};

    /// Opens --db; `create` allows a fresh directory.
    model::Store open_store(bool create = false) const;
    /// Height from --cutoff when given, else the store's default.
    std::optional<std::int64_t> cutoff_height(const model::Store& store, model::ChainKind chain) const;
    /// Writes the report in --format (or `fallback`) to --out.
    void emit(const report::Report& report, report::Format fallback) const;
};

/// Adds `--chain` to a subcommand, storing into `chain`.
CLI::Option* add_chain_option(CLI::App& app, model::ChainKind& chain, bool required = true);

/// Reads a whole file or throws IoError.
std::string read_file(const std::string& path);

using Action = std::function<void()>;

void register_ledger_commands(CLI::App& app, Context& ctx, Action& action);
void register_eth_commands(CLI::App& app, Context& ctx, Action& action);
void register_chain_commands(CLI::App& app, Context& ctx, Action& action);
void register_net_commands(CLI::App& app, Context& ctx, Action& action);

} // namespace chainlens::cli

#endif // CHAINLENS_CLI_CONTEXT_HPP
