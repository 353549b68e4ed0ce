#pragma once

// Flat key=value settings: one pair per line, '#' starts a comment.
// Command-line flags are layered on top of the file.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bohr::cli {

// Bad flags, config entries or values; maps to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using KeyValues = std::map<std::string, std::string, std::less<>>;

KeyValues parse_config_text(std::string_view text, std::string_view origin);
KeyValues read_config_file(const std::string& path);

class Settings {
 public:
  explicit Settings(KeyValues kv) : kv_(std::move(kv)) {}

  bool has(std::string_view key) const { return kv_.find(key) != kv_.end(); }
  std::string text(std::string_view key) const;
  std::string text_or(std::string_view key, std::string fallback) const;

  double real(std::string_view key) const;
  double real_or(std::string_view key, double fallback) const;
  std::int64_t integer(std::string_view key) const;
  std::int64_t integer_or(std::string_view key, std::int64_t fallback) const;

  // "1,2,5" or "1..6" (inclusive) or a mix: "1,3..5".
  std::vector<std::int64_t> integer_list_or(std::string_view key, std::string fallback) const;
  // "0,0.5,1"
  std::vector<double> real_list_or(std::string_view key, std::string fallback) const;

 private:
  KeyValues kv_;
};

double parse_real(std::string_view text, std::string_view what);
std::int64_t parse_integer(std::string_view text, std::string_view what);

}  // namespace bohr::cli
