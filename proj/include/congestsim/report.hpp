#pragma once

#include <string>
#include <vector>

namespace congest {

// Minimal CSV: fields with commas, quotes or newlines are double-quoted.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);
std::vector<std::vector<std::string>> csv_parse(const std::string& text);

}  // namespace congest
