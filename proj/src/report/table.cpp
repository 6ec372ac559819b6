// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/report/table.hpp>

#include <chainlens/common/csv.hpp>
#include <chainlens/common/errors.hpp>
#include <chainlens/common/time.hpp>

#include <chrono>
#include <fstream>
#include <ostream>

#ifndef CHAINLENS_VERSION
#define CHAINLENS_VERSION "unknown"
#endif

namespace chainlens::report {

namespace {

std::string cell_text(const nlohmann::json& v)
{
    if (v.is_null()) return {};
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

void Table::add(std::vector<nlohmann::json> row)
{
    if (row.size() != columns.size()) throw Error("report row width does not match its columns");
    rows.push_back(std::move(row));
}

nlohmann::json Table::to_json() const
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        out.push_back(std::move(obj));
    }
    return out;
}

std::string Table::to_csv() const
{
    std::vector<csv::Row> out;
    out.push_back(columns);
    for (const auto& row : rows) {
        csv::Row r;
        for (const auto& v : row) r.push_back(cell_text(v));
        out.push_back(std::move(r));
    }
    return csv::format(out);
}

void write_report(std::ostream& out, const Report& report, Format format)
{
    if (format == Format::Csv) {
        out << report.table.to_csv();
    } else {
        out << report.document.dump(2) << '\n';
    }
}

void emit(const Report& report, Format format, const std::string& path, std::ostream& fallback)
{
    if (path.empty() || path == "-") {
        write_report(fallback, report, format);
        fallback.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_report(out, report, format);
    if (!out.flush()) throw IoError("cannot write " + path);
}

void write_stamp(const std::filesystem::path& path, const std::vector<std::string>& argv)
{
    const auto now = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::system_clock::now().time_since_epoch());
    const nlohmann::json stamp{{"argv", argv}, {"created", format_rfc3339(now.count())}, {"version", CHAINLENS_VERSION}};
    const std::filesystem::path side = path.string() + ".stamp.json";
    std::ofstream out(side, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + side.string() + " for writing");
    out << stamp.dump(2) << '\n';
    if (!out.flush()) throw IoError("cannot write " + side.string());
}

} // namespace chainlens::report
