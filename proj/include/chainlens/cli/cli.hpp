// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_CLI_CLI_HPP
#define CHAINLENS_CLI_CLI_HPP

#include <iosfwd>

namespace chainlens::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Runs one `chainlens` command. Data goes to `out` unless --out names a
/// file; diagnostics always go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace chainlens::cli

#endif // CHAINLENS_CLI_CLI_HPP
