#ifndef MINKHYP_IO_HPP
#define MINKHYP_IO_HPP

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace minkhyp {

// Deterministic CSV emission: fixed %.17g formatting, LF line endings.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);
  ~CsvWriter();
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  void row(const std::vector<double>& values);

 private:
  std::FILE* f_ = nullptr;
};

std::string format_double(double v);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

// NaN-tolerant: NaN maps to null.
nlohmann::json json_number(double v);

}  // namespace minkhyp

#endif
