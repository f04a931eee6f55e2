#include "minkhyp/io.hpp"

#include <cmath>
#include <fstream>

#include "minkhyp/errors.hpp"

namespace minkhyp {

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header) {
  f_ = std::fopen(path.c_str(), "wb");
  if (!f_) throw Error("cannot open for writing: " + path);
  for (size_t i = 0; i < header.size(); ++i)
    std::fprintf(f_, "%s%s", header[i].c_str(), i + 1 < header.size() ? "," : "\n");
}

CsvWriter::~CsvWriter() {
  if (f_) std::fclose(f_);
}

void CsvWriter::row(const std::vector<double>& values) {
  for (size_t i = 0; i < values.size(); ++i)
    std::fprintf(f_, "%.17g%s", values[i], i + 1 < values.size() ? "," : "\n");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

nlohmann::json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

}  // namespace minkhyp
