#include "lipkit/common/config.hpp"

#include "lipkit/common/csv.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lipkit {

namespace {

struct LineParser {
  const std::string& s;
  int lineno;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ConfigError(msg, lineno, int(pos) + 1);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size() || s[pos] == '#';
  }

  std::string key() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                              s[pos] == '_' || s[pos] == '.' || s[pos] == '-'))
      ++pos;
    if (pos == start) fail("expected key");
    return s.substr(start, pos - start);
  }

  // A scalar token: quoted string, or a run up to , ] # or end.
  std::string scalar(char extra_stop) {
    skip_ws();
    if (pos < s.size() && s[pos] == '"') {
      ++pos;
      size_t start = pos;
      while (pos < s.size() && s[pos] != '"') ++pos;
      if (pos >= s.size()) fail("unterminated string");
      std::string v = s.substr(start, pos - start);
      ++pos;
      return v;
    }
    size_t start = pos;
    while (pos < s.size() && s[pos] != '#' && s[pos] != ',' && s[pos] != extra_stop) ++pos;
    size_t end = pos;
    while (end > start && (s[end - 1] == ' ' || s[end - 1] == '\t')) --end;
    if (end == start) fail("expected value");
    return s.substr(start, end - start);
  }
};

bool parse_number(const std::string& tok, double& out) {
  const char* b = tok.c_str();
  char* e = nullptr;
  out = std::strtod(b, &e);
  return e != b && *e == '\0';
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineParser lp{line, lineno};
    if (lp.at_end()) continue;
    std::string key = lp.key();
    lp.skip_ws();
    if (lp.pos >= line.size() || line[lp.pos] != '=') lp.fail("expected '='");
    ++lp.pos;
    lp.skip_ws();
    if (lp.pos < line.size() && line[lp.pos] == '[') {
      ++lp.pos;
      std::vector<std::string> toks;
      bool all_numeric = true;
      std::vector<double> nums;
      lp.skip_ws();
      if (lp.pos < line.size() && line[lp.pos] == ']') {
        ++lp.pos;
      } else {
        for (;;) {
          std::string tok = lp.scalar(']');
          double v;
          if (parse_number(tok, v))
            nums.push_back(v);
          else
            all_numeric = false;
          toks.push_back(tok);
          lp.skip_ws();
          if (lp.pos < line.size() && line[lp.pos] == ',') {
            ++lp.pos;
            continue;
          }
          if (lp.pos < line.size() && line[lp.pos] == ']') {
            ++lp.pos;
            break;
          }
          lp.fail("expected ',' or ']'");
        }
      }
      if (all_numeric && nums.size() == toks.size())
        cfg.kv_[key] = std::move(nums);
      else
        cfg.kv_[key] = std::move(toks);
    } else {
      std::string tok = lp.scalar('\0');
      double v;
      if (parse_number(tok, v))
        cfg.kv_[key] = v;
      else
        cfg.kv_[key] = tok;
    }
    if (!lp.at_end()) lp.fail("unexpected trailing input");
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path, 0, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_string(ss.str());
}

const Config::Value& Config::get(const std::string& key) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) throw ConfigError("missing config key: " + key, 0, 0);
  return it->second;
}

double Config::number(const std::string& key) const {
  auto& v = get(key);
  if (auto* d = std::get_if<double>(&v)) return *d;
  throw ConfigError("config key is not a number: " + key, 0, 0);
}

double Config::number_or(const std::string& key, double fallback) const {
  return has(key) ? number(key) : fallback;
}

std::string Config::str(const std::string& key) const {
  auto& v = get(key);
  if (auto* s = std::get_if<std::string>(&v)) return *s;
  if (auto* d = std::get_if<double>(&v)) return format_double(*d);
  throw ConfigError("config key is not a string: " + key, 0, 0);
}

std::string Config::str_or(const std::string& key, const std::string& fallback) const {
  return has(key) ? str(key) : fallback;
}

std::vector<double> Config::numbers(const std::string& key) const {
  auto& v = get(key);
  if (auto* a = std::get_if<std::vector<double>>(&v)) return *a;
  if (auto* d = std::get_if<double>(&v)) return {*d};
  throw ConfigError("config key is not a numeric array: " + key, 0, 0);
}

std::vector<double> Config::numbers_or(const std::string& key,
                                       std::vector<double> fallback) const {
  return has(key) ? numbers(key) : fallback;
}

std::vector<std::string> Config::keys() const {
  std::vector<std::string> out;
  out.reserve(kv_.size());
  for (auto& [k, v] : kv_) out.push_back(k);
  return out;
}

}  // namespace lipkit
