#pragma once

#include <string>
#include <vector>

namespace bellpulse {

// shortest representation with 12 significant digits; used by every exporter
// so emitted files are byte-stable across runs
std::string fmt_g12(double x);

// write via temp file + rename so readers never observe a partial file
void atomic_write_text(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

// split into lines, dropping trailing '\r'
std::vector<std::string> split_lines(const std::string& text);

// split on a delimiter, trimming surrounding whitespace from each piece
std::vector<std::string> split_trimmed(const std::string& line, char delim);

std::string trim(const std::string& s);

// strict double parse; throws IoError mentioning `what` on failure
double parse_double(const std::string& tok, const std::string& what);

} // namespace bellpulse
