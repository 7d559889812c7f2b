#include "skoro/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skoro::csv {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

}  // namespace

std::size_t Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    std::string have;
    for (const auto& c : columns) {
        if (!have.empty()) have += ", ";
        have += c;
    }
    throw std::runtime_error("missing column '" + name + "' (have: " + have + ")");
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

Table read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open");
    Table table;
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw std::runtime_error(path + ":1: missing header");
    ++lineno;
    table.columns = split_fields(line);
    if (table.columns.empty()) throw std::runtime_error(path + ":1: empty header");
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto fields = split_fields(line);
        if (fields.size() != table.columns.size()) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(table.columns.size()) +
                                     " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> row(fields.size());
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const std::string& f = fields[i];
            double value = 0.0;
            const auto res = std::from_chars(f.data(), f.data() + f.size(), value);
            if (res.ec != std::errc{} || res.ptr != f.data() + f.size()) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": invalid number '" + f + "'");
            }
            row[i] = value;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string table_to_string(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_table(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << table_to_string(table);
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace skoro::csv
