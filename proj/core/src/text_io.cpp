#include "bellpulse/text_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bellpulse/errors.hpp"

namespace bellpulse {

std::string fmt_g12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void atomic_write_text(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + tmp + "' for writing");
        out << content;
        out.flush();
        if (!out)
            throw IoError("write to '" + tmp + "' failed");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw IoError("rename '" + tmp + "' -> '" + path + "' failed: " + ec.message());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r')
            cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

std::string trim(const std::string& s) {
    const char* ws = " \t\n\r\f\v";
    const auto a = s.find_first_not_of(ws);
    if (a == std::string::npos)
        return "";
    const auto b = s.find_last_not_of(ws);
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_trimmed(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream in(line);
    while (std::getline(in, piece, delim))
        out.push_back(trim(piece));
    if (!line.empty() && line.back() == delim)
        out.push_back("");
    return out;
}

double parse_double(const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw IoError("cannot parse '" + tok + "' as a number (" + what + ")");
    }
}

} // namespace bellpulse
