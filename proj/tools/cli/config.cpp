#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace bohr::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto comma = s.find(',');
    parts.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return parts;
}

}  // namespace

KeyValues parse_config_text(std::string_view text, std::string_view origin) {
  KeyValues kv;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw UsageError(where + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError(where + ": empty key");
    if (!kv.emplace(std::string(key), std::string(value)).second) {
      throw UsageError(where + ": duplicate key '" + std::string(key) + "'");
    }
  }
  return kv;
}

KeyValues read_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      !std::isfinite(v)) {
    throw UsageError(std::string(what) + ": expected a finite number, got '" + std::string(text) +
                     "'");
  }
  return v;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  std::int64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::string Settings::text(std::string_view key) const {
  const auto it = kv_.find(key);
  if (it == kv_.end()) throw UsageError("missing required setting --" + std::string(key));
  return it->second;
}

std::string Settings::text_or(std::string_view key, std::string fallback) const {
  const auto it = kv_.find(key);
  return it == kv_.end() ? fallback : it->second;
}

double Settings::real(std::string_view key) const { return parse_real(text(key), key); }

double Settings::real_or(std::string_view key, double fallback) const {
  return has(key) ? real(key) : fallback;
}

std::int64_t Settings::integer(std::string_view key) const {
  return parse_integer(text(key), key);
}

std::int64_t Settings::integer_or(std::string_view key, std::int64_t fallback) const {
  return has(key) ? integer(key) : fallback;
}

std::vector<std::int64_t> Settings::integer_list_or(std::string_view key,
                                                    std::string fallback) const {
  const std::string raw = text_or(key, std::move(fallback));
  std::vector<std::int64_t> out;
  for (std::string_view part : split_commas(raw)) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_integer(part, key));
      continue;
    }
    const std::int64_t lo = parse_integer(trim(part.substr(0, dots)), key);
    const std::int64_t hi = parse_integer(trim(part.substr(dots + 2)), key);
    if (hi < lo) throw UsageError(std::string(key) + ": empty range '" + std::string(part) + "'");
    if (hi - lo > 100000) throw UsageError(std::string(key) + ": range too long");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> Settings::real_list_or(std::string_view key, std::string fallback) const {
  const std::string raw = text_or(key, std::move(fallback));
  std::vector<double> out;
  for (std::string_view part : split_commas(raw)) out.push_back(parse_real(part, key));
  return out;
}

}  // namespace bohr::cli
