#include "lipkit/common/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace lipkit {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary), width_(header.size()) {
  if (!out_) throw std::runtime_error("cannot open for writing: " + path);
  for (size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
  if (cells.size() != width_)
    throw std::logic_error("csv row width mismatch in " + path_);
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    if (auto* d = std::get_if<double>(&cells[i]))
      out_ << format_double(*d);
    else if (auto* n = std::get_if<long long>(&cells[i]))
      out_ << *n;
    else
      out_ << std::get<std::string>(cells[i]);
  }
  out_ << '\n';
}

void CsvWriter::close() { out_.close(); }

int CsvTable::column(const std::string& name) const {
  for (size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return int(i);
  return -1;
}

std::vector<double> CsvTable::numeric_column(const std::string& name) const {
  int c = column(name);
  if (c < 0) throw std::runtime_error("csv column missing: " + name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::stod(r[size_t(c)]));
  return out;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  CsvTable t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (first) {
      t.header = std::move(cells);
      first = false;
    } else {
      t.rows.push_back(std::move(cells));
    }
  }
  return t;
}

}  // namespace lipkit
