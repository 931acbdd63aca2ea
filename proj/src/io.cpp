#include "gapmatch/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gapmatch::io {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw std::runtime_error("error reading '" + path + "'");
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("error writing '" + path + "'");
}

std::string strip_fasta(std::string_view contents) {
  std::string out;
  out.reserve(contents.size());
  bool at_line_start = true;
  bool in_header = false;
  for (char c : contents) {
    if (c == '\n') {
      at_line_start = true;
      in_header = false;
      continue;
    }
    if (at_line_start) {
      at_line_start = false;
      in_header = (c == '>' || c == ';');
    }
    if (!in_header && c != '\r') out.push_back(c);
  }
  return out;
}

}  // namespace gapmatch::io
