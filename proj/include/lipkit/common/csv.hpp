#pragma once
#include <fstream>
#include <string>
#include <variant>
#include <vector>

namespace lipkit {

// CSV output: header row, UTF-8, LF endings, doubles formatted with %.12g so
// repeated runs are byte-identical.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  using Cell = std::variant<double, long long, std::string>;
  void row(const std::vector<Cell>& cells);
  void close();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::ofstream out_;
  size_t width_;
};

std::string format_double(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int column(const std::string& name) const;  // -1 if absent
  std::vector<double> numeric_column(const std::string& name) const;
};

CsvTable read_csv(const std::string& path);

}  // namespace lipkit
