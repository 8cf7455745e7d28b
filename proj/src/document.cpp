#include "qsvtpoly/document.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace qsvtpoly {

double Document::number(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw std::runtime_error("document: missing key '" + key + "'");
  if (const double* d = std::get_if<double>(&it->second)) return *d;
  throw std::runtime_error("document: key '" + key + "' is not a number");
}

const std::string& Document::text(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw std::runtime_error("document: missing key '" + key + "'");
  if (const std::string* s = std::get_if<std::string>(&it->second)) return *s;
  throw std::runtime_error("document: key '" + key + "' is not a string");
}

const std::vector<double>& Document::array(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw std::runtime_error("document: missing key '" + key + "'");
  if (const auto* a = std::get_if<std::vector<double>>(&it->second)) return *a;
  throw std::runtime_error("document: key '" + key + "' is not an array");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view tok, std::size_t line) {
  std::string buf(tok);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end == buf.c_str() || *end != '\0')
    throw ParseError(line, "invalid number '" + buf + "'");
  return v;
}

std::vector<double> parse_array(std::string_view body, std::size_t line) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view tok = trim(body.substr(pos, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - pos));
    if (!tok.empty()) out.push_back(parse_number(tok, line));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

} // namespace

Document parse_document(const std::string& text) {
  Document doc;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(lineno, "expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    std::string_view val = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(lineno, "empty key");
    if (val.empty()) throw ParseError(lineno, "empty value for '" + key + "'");
    if (val.front() == '"') {
      if (val.size() < 2 || val.back() != '"')
        throw ParseError(lineno, "unterminated string");
      doc.values[key] = std::string(val.substr(1, val.size() - 2));
    } else if (val.front() == '[') {
      if (val.back() != ']') throw ParseError(lineno, "unterminated array");
      doc.values[key] = parse_array(val.substr(1, val.size() - 2), lineno);
    } else {
      doc.values[key] = parse_number(val, lineno);
    }
  }
  return doc;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void DocumentWriter::add(const std::string& key, double v) {
  out_ += key + " = " + format_number(v) + "\n";
}

void DocumentWriter::add(const std::string& key, const std::string& v) {
  out_ += key + " = \"" + v + "\"\n";
}

void DocumentWriter::add(const std::string& key, const std::vector<double>& v) {
  out_ += key + " = [";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out_ += ", ";
    out_ += format_number(v[i]);
  }
  out_ += "]\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
}

} // namespace qsvtpoly
