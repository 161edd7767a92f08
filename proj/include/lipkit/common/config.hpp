#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace lipkit {

struct ConfigError : std::runtime_error {
  int line, column;
  ConfigError(const std::string& msg, int l, int c)
      : std::runtime_error(msg + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

// Key/value config text. One entry per line:
//   key = value
//   key = [v1, v2, v3]
// Values are numbers, bare words, or quoted strings; '#' starts a comment.
// Dotted keys ("domain.type") are plain keys with dots.
class Config {
 public:
  using Value = std::variant<double, std::string, std::vector<double>,
                             std::vector<std::string>>;

  static Config parse_file(const std::string& path);    // throws ConfigError
  static Config parse_string(const std::string& text);  // throws ConfigError

  bool has(const std::string& key) const { return kv_.count(key) != 0; }
  double number(const std::string& key) const;
  double number_or(const std::string& key, double fallback) const;
  std::string str(const std::string& key) const;
  std::string str_or(const std::string& key, const std::string& fallback) const;
  std::vector<double> numbers(const std::string& key) const;
  std::vector<double> numbers_or(const std::string& key,
                                 std::vector<double> fallback) const;
  std::vector<std::string> keys() const;

  void set(const std::string& key, Value v) { kv_[key] = std::move(v); }

 private:
  std::map<std::string, Value> kv_;
  const Value& get(const std::string& key) const;
};

}  // namespace lipkit
