#include "proglab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "proglab/error.hpp"

namespace proglab {

namespace {

std::string comment_header(const Metadata& meta) {
    std::string out;
    out += "# proglab ";
    out += kToolVersion;
    out += "\n# ";
    out += meta.config;
    out += "\n";
    return out;
}

} // namespace

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open for writing: " + path.string());
    f << content;
    if (!f) throw IoError("write failed: " + path.string());
}

void write_pbm(const std::filesystem::path& path,
               const std::vector<BitRow>& rows, const Metadata& meta) {
    if (rows.empty()) throw ValidationError("refusing to write empty image");
    std::string out = "P1\n";
    out += comment_header(meta);
    out += std::to_string(rows[0].width());
    out += " ";
    out += std::to_string(rows.size());
    out += "\n";
    for (const auto& row : rows) {
        out += row.to_string();
        out += "\n";
    }
    write_text_file(path, out);
}

void write_bit_text(const std::filesystem::path& path,
                    const std::vector<BitRow>& rows, const Metadata& meta) {
    std::string out = comment_header(meta);
    for (const auto& row : rows) {
        out += row.to_string();
        out += "\n";
    }
    write_text_file(path, out);
}

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

WindowFile parse_window_text(const std::string& text,
                             const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::uint32_t width = 0;
    int radius = 0;
    bool have_header = false;
    WindowFile result{ObservationWindow(1), 1};
    std::size_t lineno = 0;

    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        if (!have_header) {
            std::string kw, kr;
            if (!(ls >> kw)) continue;  // blank line before header
            if (!(ls >> width >> kr >> radius) || kw != "width" ||
                kr != "radius")
                throw ValidationError(origin + ":" + std::to_string(lineno) +
                                      ": expected 'width W radius R'");
            if (radius != 1 && radius != 2)
                throw ValidationError(origin + ": radius must be 1 or 2");
            result.window = ObservationWindow(width);
            result.radius = radius;
            have_header = true;
            continue;
        }
        std::int64_t t, x, v;
        if (!(ls >> t)) continue;  // blank or comment-only line
        if (!(ls >> x >> v) || t < 0 || x < 0 || (v != 0 && v != 1))
            throw ValidationError(origin + ":" + std::to_string(lineno) +
                                  ": expected 't x v' with v in {0,1}");
        result.window.add(static_cast<std::uint32_t>(t),
                          static_cast<std::uint32_t>(x), v == 1);
    }
    if (!have_header)
        throw ValidationError(origin + ": missing 'width W radius R' header");
    return result;
}

WindowFile read_window_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open window file: " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_window_text(ss.str(), path.string());
}

} // namespace proglab
