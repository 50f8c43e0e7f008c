#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace lattice_forge::cli {

inline constexpr const char* schema_line = "# lattice-forge v1";

using Cell = std::variant<std::monostate, std::string, std::uint64_t, double, bool, std::vector<std::uint64_t>>;
using Row = std::vector<Cell>;

/// Tabular command output. CSV and JSON render the same cells: lists become
/// space-separated in CSV and arrays in JSON; empty cells become null.
struct Table {
    std::string command;
    std::vector<std::string> columns;
    std::vector<Row> rows;
    std::vector<Row> summary;
};

enum class Format { csv, json };

struct OutputOptions {
    Format format = Format::csv;
    bool deterministic = false;
};

void write_table(std::ostream& out, const Table& table, const OutputOptions& options);

/// Matrix outputs (points, features, frames) in CSV with the schema line.
void write_matrix_header(std::ostream& out, const OutputOptions& options);

} // namespace lattice_forge::cli
