#include "lattice_forge/csv.hpp"

#include "lattice_forge/errors.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

namespace lattice_forge {

std::string format_double(double value)
{
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.17g", value);
    return std::string(buf, static_cast<std::size_t>(len));
}

void write_csv_matrix(std::ostream& out, const Eigen::Ref<const Eigen::MatrixXd>& m)
{
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0)
                out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

Eigen::MatrixXd read_csv_matrix(std::istream& in)
{
    std::vector<double> values;
    std::size_t width = 0;
    std::size_t rows = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;

        std::size_t fields = 0;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            std::string_view field = rest.substr(0, comma);
            while (!field.empty() && field.front() == ' ')
                field.remove_prefix(1);
            while (!field.empty() && field.back() == ' ')
                field.remove_suffix(1);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
                throw DomainError("csv line " + std::to_string(line_no) + ": cannot parse '" +
                                  std::string(field) + "'");
            values.push_back(v);
            ++fields;
            if (comma == std::string_view::npos)
                break;
            rest.remove_prefix(comma + 1);
        }
        if (rows == 0)
            width = fields;
        else if (fields != width)
            throw DomainError("csv line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                              " fields, got " + std::to_string(fields));
        ++rows;
    }

    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(width));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = values[i * width + j];
    return m;
}

Eigen::MatrixXd read_csv_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw PreconditionError("cannot open data file '" + path + "'");
    return read_csv_matrix(in);
}

} // namespace lattice_forge
