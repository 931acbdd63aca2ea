#pragma once

#include <string>
#include <string_view>

namespace gapmatch::io {

// Whole file as raw bytes; throws std::runtime_error on failure.
std::string read_file(const std::string& path);

void write_file(const std::string& path, std::string_view contents);

// Drops FASTA header lines (starting with '>' or ';') and every line break,
// leaving the concatenated sequence bytes.
std::string strip_fasta(std::string_view contents);

}  // namespace gapmatch::io
