// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_COMMON_CSV_HPP
#define CHAINLENS_COMMON_CSV_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::csv {

using Row = std::vector<std::string>;

/// RFC 4180 quoting: a field is quoted when it holds a comma, quote, CR or LF.
std::string escape(std::string_view field);
void write_row(std::ostream& out, const Row& row);
std::string format(const std::vector<Row>& rows);

/// Parses a whole CSV document. Quoted fields may span lines. Throws
/// chainlens::Error on an unterminated quote.
std::vector<Row> parse(std::string_view text);

/// A data row from a hand-edited table, with its 1-based source line.
struct TableRow {
    std::size_t line{0};
    Row fields;
};

/// Reads a simple config table: blank lines and lines starting with '#'
/// are skipped, fields are comma-split and whitespace-trimmed. No quoting.
std::vector<TableRow> read_table(std::istream& in);

} // namespace chainlens::csv

#endif // CHAINLENS_COMMON_CSV_HPP
