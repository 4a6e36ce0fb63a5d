#include "congestsim/report.hpp"

#include <sstream>

#include "congestsim/errors.hpp"

namespace congest {

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_field(fields[i]);
    }
    out.push_back('\n');
    return out;
}

std::vector<std::vector<std::string>> csv_parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    bool row_open = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"': quoted = true; row_open = true; break;
            case ',':
                row.push_back(field);
                field.clear();
                row_open = true;
                break;
            case '\n':
                if (row_open || !field.empty()) {
                    row.push_back(field);
                    rows.push_back(std::move(row));
                }
                row.clear();
                field.clear();
                row_open = false;
                break;
            case '\r': break;
            default: field.push_back(c); row_open = true; break;
        }
    }
    if (quoted) throw SimError("csv: unterminated quote");
    if (row_open || !field.empty()) {
        row.push_back(field);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace congest
