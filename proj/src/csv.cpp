#include "mobispread/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "mobispread/version.hpp"

namespace mobispread::csv {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string join_reals(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_real(values[i]);
    }
    return out;
}

void Header::write(std::ostream& os) const {
    os << "# mobispread " << version << '\n';
    os << "# command: " << command << '\n';
    for (const auto& [key, value] : fields) os << "# " << key << '=' << value << '\n';
}

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

}  // namespace

Table read_table(std::istream& is) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.front() == '#') {
            const auto eq = line.find('=');
            if (eq != std::string::npos && line.size() > 2 && line[1] == ' ') {
                const std::string key = line.substr(2, eq - 2);
                if (key.find(' ') == std::string::npos)
                    table.metadata[key] = line.substr(eq + 1);
            }
            continue;
        }
        auto cells = split(line);
        if (table.columns.empty()) {
            table.columns = std::move(cells);
        } else if (cells.size() != table.columns.size()) {
            throw IoError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(table.columns.size()) + " fields, found " +
                          std::to_string(cells.size()));
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    if (is.bad()) throw IoError("read failure");
    return table;
}

double parse_real(std::string_view text) {
    if (text == "nan") return std::nan("");
    if (text == "inf") return INFINITY;
    if (text == "-inf") return -INFINITY;
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (res.ec != std::errc{} || res.ptr != end)
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    return v;
}

}  // namespace mobispread::csv
