#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <string>

namespace lattice_forge {

/// "%.17g" formatting: round-trips every double exactly.
std::string format_double(double value);

/// One row per line, comma separated, no header.
void write_csv_matrix(std::ostream& out, const Eigen::Ref<const Eigen::MatrixXd>& m);

/// Reads numeric CSV: no header, one sample per row, all rows the same
/// width. Blank lines and lines starting with '#' are skipped. Throws
/// DomainError on ragged rows or unparsable fields.
Eigen::MatrixXd read_csv_matrix(std::istream& in);

Eigen::MatrixXd read_csv_matrix_file(const std::string& path);

} // namespace lattice_forge
