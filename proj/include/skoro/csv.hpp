#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace skoro::csv {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    std::size_t column_index(const std::string& name) const;  // throws if absent
};

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// Header row plus numeric rows; parse errors report "<path>:<line>: ...".
Table read_table(const std::string& path);
void write_table(const std::string& path, const Table& table);
std::string table_to_string(const Table& table);

}  // namespace skoro::csv
