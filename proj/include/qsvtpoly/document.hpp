#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Line-oriented key = value documents used as the interchange format between
// CLI subcommands: numbers, quoted strings and [..] arrays of numbers.
// Numbers are written with 17 significant digits so round-trips are exact.

namespace qsvtpoly {

struct ParseError : std::runtime_error {
  std::size_t line;
  ParseError(std::size_t line_, const std::string& what_)
      : std::runtime_error("parse error at line " + std::to_string(line_) + ": " + what_),
        line(line_) {}
};

using DocValue = std::variant<double, std::string, std::vector<double>>;

struct Document {
  std::map<std::string, DocValue> values;

  bool has(const std::string& key) const { return values.count(key) != 0; }
  double number(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  const std::vector<double>& array(const std::string& key) const;
};

Document parse_document(const std::string& text);

/// 17-significant-digit representation, shortest form.
std::string format_number(double v);

class DocumentWriter {
 public:
  void add(const std::string& key, double v);
  void add(const std::string& key, const std::string& v);
  void add(const std::string& key, const std::vector<double>& v);
  std::string str() const { return out_; }

 private:
  std::string out_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace qsvtpoly
