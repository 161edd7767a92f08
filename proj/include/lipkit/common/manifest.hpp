#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace lipkit {

uint64_t fnv1a64_file(const std::string& path);
uint64_t fnv1a64_bytes(const void* data, size_t len);
std::string hex64(uint64_t v);

// Flat key=value manifest. Records inputs/outputs with content hashes plus
// version and check lines; written once at the end of a run.
class Manifest {
 public:
  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
  void add_file(const std::string& role, const std::string& path);  // hashes now
  void add_check(const std::string& name, bool pass, const std::string& detail);
  bool all_passed() const { return failures_ == 0; }
  int failures() const { return failures_; }
  void write(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  int failures_ = 0;
  int checks_ = 0;
};

}  // namespace lipkit
