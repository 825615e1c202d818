#pragma once

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "vol/dates.hpp"
#include "vol/errors.hpp"
#include "vol/timeseries.hpp"

namespace vol::io {

/// Shortest round-trip decimal representation of a double.
inline std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(const std::string& cell, std::size_t line_no) {
    const char* begin = cell.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError("line " + std::to_string(line_no) + ": unparseable number '" +
                         cell + "'");
    return v;
}

/// A parsed CSV of dated columns: header `date,<name>,...`, one row per date.
struct Table {
    std::vector<std::string> dates;       // canonical ISO form
    std::vector<std::string> columns;     // value column names
    std::vector<std::vector<double>> values;  // one vector per column
};

namespace detail {

inline std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(cur);
    for (auto& c : cells) {
        const auto a = c.find_first_not_of(" \t");
        const auto b = c.find_last_not_of(" \t");
        c = (a == std::string::npos) ? std::string{} : c.substr(a, b - a + 1);
    }
    return cells;
}

inline std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace detail

/// Read a dated CSV. The first header cell must be `date`; dates are
/// ISO-8601 or YYYYMMDD. Any row with an unparseable cell raises a
/// line-numbered ParseError.
inline Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Table table;
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line))
        throw ParseError(path + ": empty file");
    ++line_no;
    // Strip a UTF-8 BOM if present.
    if (line.size() >= 3 && line[0] == '\xEF' && line[1] == '\xBB' && line[2] == '\xBF')
        line = line.substr(3);
    auto header = detail::split_row(line);
    if (header.size() < 2 || detail::lower(header[0]) != "date")
        throw ParseError(path + ": header must start with 'date' and name at least one column");
    table.columns.assign(header.begin() + 1, header.end());
    table.values.resize(table.columns.size());
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        auto cells = detail::split_row(line);
        if (cells.size() != header.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " cells, got " +
                             std::to_string(cells.size()));
        std::string date;
        try {
            date = dates::parse_date(cells[0]);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        table.dates.push_back(date);
        for (std::size_t c = 0; c < table.columns.size(); ++c)
            table.values[c].push_back(parse_double(cells[c + 1], line_no));
    }
    return table;
}

/// Pull one column out of a table as a validated series. `percent` divides
/// by 100 (for files that publish returns in percent units).
inline ts::ReturnSeries select_series(const Table& table, const std::string& column,
                                      bool percent = false) {
    std::size_t idx = table.columns.size();
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        if (table.columns[c] == column) idx = c;
    if (idx == table.columns.size())
        throw ConfigError("no column named '" + column + "' in input");
    ts::ReturnSeries s;
    s.label = column;
    s.dates = table.dates;
    s.values = table.values[idx];
    if (percent)
        for (auto& v : s.values) v /= 100.0;
    s.validate();
    return s;
}

inline ts::ReturnSeries load_series(const std::string& path, const std::string& column,
                                    bool percent = false) {
    return select_series(read_table(path), column, percent);
}

/// Write a single dated series in the same schema read_table ingests.
inline void write_series(std::ostream& out, const ts::ReturnSeries& series) {
    out << "date," << (series.label.empty() ? "value" : series.label) << "\n";
    for (std::size_t i = 0; i < series.size(); ++i)
        out << series.dates[i] << "," << format_double(series.values[i]) << "\n";
}

inline void write_series_file(const std::string& path, const ts::ReturnSeries& series) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_series(out, series);
}

}  // namespace vol::io
