#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace bohr::cli {

namespace {

constexpr int kDigits = 15;

std::string cell_text(const Value& v) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, v);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

nlohmann::ordered_json to_json(const Value& v) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(double x) const {
      if (!std::isfinite(x)) return nullptr;
      return round15(x);
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [name, v] : r.fields) obj[name] = to_json(v);
  return obj;
}

std::vector<std::string> header_of(const std::vector<Record>& records) {
  std::vector<std::string> names;
  if (records.empty()) return names;
  for (const auto& f : records.front().fields) names.push_back(f.first);
  return names;
}

void check_shape(const std::vector<Record>& records, const std::vector<std::string>& names) {
  for (const auto& r : records) {
    bool same = r.fields.size() == names.size();
    for (std::size_t i = 0; same && i < names.size(); ++i) same = r.fields[i].first == names[i];
    if (!same) throw std::logic_error("records with differing fields in one table");
  }
}

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::table:
      return "table";
  }
  return "json";
}

bool parse_format(std::string_view text, Format& out) {
  for (Format f : {Format::json, Format::csv, Format::table}) {
    if (text == to_string(f)) {
      out = f;
      return true;
    }
  }
  return false;
}

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, kDigits);
  return std::string(buf, res.ptr);
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  const std::string s = format_real(x);
  double y = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), y);
  return y;
}

std::string render(const std::vector<Record>& records, Format f, bool as_array) {
  const auto names = header_of(records);
  check_shape(records, names);
  std::ostringstream os;
  switch (f) {
    case Format::json: {
      nlohmann::ordered_json doc;
      if (as_array) {
        doc = nlohmann::ordered_json::array();
        for (const auto& r : records) doc.push_back(to_json(r));
      } else {
        doc = records.empty() ? nlohmann::ordered_json::object() : to_json(records.front());
      }
      os << doc.dump(2) << '\n';
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < names.size(); ++i) os << (i ? "," : "") << csv_escape(names[i]);
      os << '\n';
      for (const auto& r : records) {
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
          os << (i ? "," : "") << csv_escape(cell_text(r.fields[i].second));
        }
        os << '\n';
      }
      break;
    }
    case Format::table: {
      std::vector<std::size_t> width(names.size());
      for (std::size_t i = 0; i < names.size(); ++i) width[i] = names[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& r : records) {
        auto& row = cells.emplace_back();
        for (std::size_t i = 0; i < r.fields.size(); ++i) {
          row.push_back(cell_text(r.fields[i].second));
          width[i] = std::max(width[i], row.back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& row) {
        std::string text;
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) text += "  ";
          text += row[i];
          if (i + 1 < row.size()) text.append(width[i] - row[i].size(), ' ');
        }
        os << text << '\n';
      };
      line(names);
      for (const auto& row : cells) line(row);
      break;
    }
  }
  return os.str();
}

}  // namespace bohr::cli
