// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_REPORT_TABLE_HPP
#define CHAINLENS_REPORT_TABLE_HPP

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chainlens::report {

enum class Format { Csv, Json };

/// A plot-ready table. Cells are JSON scalars; null renders as an empty
/// CSV cell.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;

    void add(std::vector<nlohmann::json> row);
    /// Array of objects keyed by column name.
    nlohmann::json to_json() const;
    /// Header line then one line per row, RFC 4180 quoting.
    std::string to_csv() const;
};

/// A report: the full JSON document plus the table its CSV form shows.
struct Report {
    nlohmann::json document;
    Table table;
};

/// JSON is printed with sorted keys and two-space indentation.
void write_report(std::ostream& out, const Report& report, Format format);

/// Writes to `path`, or to `fallback` when path is empty or "-".
/// Throws IoError.
void emit(const Report& report, Format format, const std::string& path, std::ostream& fallback);

/// Writes `<path>.stamp.json` with run metadata; data files stay free of it.
void write_stamp(const std::filesystem::path& path, const std::vector<std::string>& argv);

} // namespace chainlens::report

#endif // CHAINLENS_REPORT_TABLE_HPP
