#include "snchar/table_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace snchar {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) throw std::runtime_error("csv: unterminated quote");
    fields.push_back(cur);
    return fields;
}

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_table_csv(std::ostream& out, const CharTable& table) {
    out << quote("");
    for (const Partition& col : table.cols) out << ',' << quote(col.to_string());
    out << '\n';
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out << quote(table.rows[i].to_string());
        for (const Int& v : table.values[i]) out << ',' << to_decimal(v);
        out << '\n';
    }
}

CharTable read_table_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 2) throw std::runtime_error("csv: header has no class labels");

    CharTable table;
    for (std::size_t j = 1; j < header.size(); ++j)
        table.cols.push_back(Partition::parse(header[j]));
    table.n = table.cols.front().weight();

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw std::runtime_error("csv: row width differs from header");
        table.rows.push_back(Partition::parse(fields[0]));
        std::vector<Int> row;
        for (std::size_t j = 1; j < fields.size(); ++j) row.push_back(parse_decimal(fields[j]));
        table.values.push_back(std::move(row));
    }
    if (table.rows.empty()) throw std::runtime_error("csv: no data rows");
    return table;
}

}  // namespace snchar
