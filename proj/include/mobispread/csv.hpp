#pragma once

// Plain-text output conventions shared by every command: '#' comment
// headers, one CSV header line, '.' decimal separator, shortest round-trip
// formatting for reals, '\n' line endings.

#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mobispread::csv {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly `v`; "nan", "inf" and
/// "-inf" for non-finite values.
std::string format_real(double v);

/// Comma-joined format_real of every value.
std::string join_reals(const std::vector<double>& values);

/// Metadata block written at the top of every output file.
struct Header {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;  ///< written in order

    void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    void write(std::ostream& os) const;
};

struct Table {
    std::map<std::string, std::string> metadata;  ///< `# key=value` lines
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Reads a file produced by this tool. Comment lines of the form
/// `# key=value` populate metadata, other comments are skipped, the first
/// non-comment line is the column header. Throws IoError on ragged rows.
Table read_table(std::istream& is);

double parse_real(std::string_view text);

}  // namespace mobispread::csv
