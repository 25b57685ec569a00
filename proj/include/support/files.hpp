#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace support {

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Atomic write: temp file in the same directory, then rename.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    namespace fs = std::filesystem;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("short write: " + tmp.string());
    }
    fs::rename(tmp, path);
}

struct JsonlLine {
    std::string text;
    std::size_t byte_offset = 0;  // offset of the line start within the file
    std::size_t line_number = 0;  // 1-based
};

// Reads a JSONL file keeping byte offsets so load errors can name the spot.
inline std::vector<JsonlLine> read_jsonl_lines(const std::filesystem::path& path) {
    std::string content = read_file(path);
    std::vector<JsonlLine> out;
    std::size_t start = 0, lineno = 1;
    while (start < content.size()) {
        std::size_t nl = content.find('\n', start);
        std::size_t end = (nl == std::string::npos) ? content.size() : nl;
        std::string line = content.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back({line, start, lineno});
        if (nl == std::string::npos) break;
        start = nl + 1;
        ++lineno;
    }
    return out;
}

}  // namespace support
