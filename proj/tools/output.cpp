#include "output.hpp"

#include "lattice_forge/csv.hpp"

#include "json.hpp"

#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

namespace lattice_forge::cli {

namespace {

std::string timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

std::string csv_cell(const Cell& cell)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::uint64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::vector<std::uint64_t>& v) const
        {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i > 0)
                    s += ' ';
                s += std::to_string(v[i]);
            }
            return s;
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_cell(const Cell& cell)
{
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(const std::string& s) const { return s; }
        nlohmann::ordered_json operator()(std::uint64_t v) const { return v; }
        nlohmann::ordered_json operator()(double v) const { return v; }
        nlohmann::ordered_json operator()(bool v) const { return v; }
        nlohmann::ordered_json operator()(const std::vector<std::uint64_t>& v) const { return v; }
    };
    return std::visit(Visitor{}, cell);
}

void write_csv(std::ostream& out, const Table& table, const OutputOptions& options)
{
    out << schema_line << '\n';
    if (!options.deterministic)
        out << "# generated " << timestamp() << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << (i ? "," : "") << table.columns[i];
    out << '\n';
    auto emit = [&](const Row& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    };
    for (const auto& row : table.rows)
        emit(row);
    for (const auto& row : table.summary)
        emit(row);
}

void write_json(std::ostream& out, const Table& table, const OutputOptions& options)
{
    nlohmann::ordered_json doc;
    doc["schema"] = "lattice-forge v1";
    if (!options.deterministic)
        doc["generated"] = timestamp();
    doc["command"] = table.command;
    auto objects = [&](const std::vector<Row>& rows) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < row.size(); ++i)
                obj[table.columns[i]] = json_cell(row[i]);
            arr.push_back(std::move(obj));
        }
        return arr;
    };
    doc["rows"] = objects(table.rows);
    doc["summary"] = objects(table.summary);
    out << doc.dump(2) << '\n';
}

} // namespace

void write_table(std::ostream& out, const Table& table, const OutputOptions& options)
{
    if (options.format == Format::json)
        write_json(out, table, options);
    else
        write_csv(out, table, options);
}

void write_matrix_header(std::ostream& out, const OutputOptions& options)
{
    out << schema_line << '\n';
    if (!options.deterministic)
        out << "# generated " << timestamp() << '\n';
}

} // namespace lattice_forge::cli
