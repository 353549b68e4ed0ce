#pragma once

// Record rendering for the command-line front end. Every floating-point
// value is written with at most 15 significant digits.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace bohr::cli {

enum class Format { json, csv, table };

std::string_view to_string(Format f);
bool parse_format(std::string_view text, Format& out);

// null | integer | real | text | flag
using Value = std::variant<std::monostate, std::int64_t, double, std::string, bool>;

struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  Record& add(std::string name, Value v) {
    fields.emplace_back(std::move(name), std::move(v));
    return *this;
  }
};

// Shortest "%.15g"-style text; non-finite values become "nan", "inf", "-inf".
std::string format_real(double x);

// Rounds x to 15 significant digits.
double round15(double x);

// json: a single object when as_array is false, otherwise an array.
// csv/table: header row from the first record's field names.
std::string render(const std::vector<Record>& records, Format f, bool as_array);

}  // namespace bohr::cli
