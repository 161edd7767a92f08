#include "lipkit/common/manifest.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "lipkit/common/csv.hpp"

namespace lipkit {

uint64_t fnv1a64_bytes(const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = 14695981039346656037ull;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot hash missing file: " + path);
  uint64_t h = 14695981039346656037ull;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    std::streamsize got = in.gcount();
    for (std::streamsize i = 0; i < got; ++i) {
      h ^= static_cast<unsigned char>(buf[i]);
      h *= 1099511628211ull;
    }
  }
  return h;
}

std::string hex64(uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void Manifest::set(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void Manifest::set_double(const std::string& key, double value) {
  entries_.emplace_back(key, format_double(value));
}

void Manifest::add_file(const std::string& role, const std::string& path) {
  entries_.emplace_back("file." + role, path);
  entries_.emplace_back("hash." + role, hex64(fnv1a64_file(path)));
}

void Manifest::add_check(const std::string& name, bool pass, const std::string& detail) {
  ++checks_;
  if (!pass) ++failures_;
  entries_.emplace_back("check." + name, std::string(pass ? "PASS" : "FAIL") +
                                             (detail.empty() ? "" : " " + detail));
}

void Manifest::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (auto& [k, v] : entries_) out << k << "=" << v << "\n";
  out << "checks.total=" << checks_ << "\n";
  out << "checks.failed=" << failures_ << "\n";
}

}  // namespace lipkit
