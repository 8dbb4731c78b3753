#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "proglab/bitrow.hpp"
#include "proglab/inference.hpp"

namespace proglab {

inline constexpr const char* kToolVersion = "0.1.0";

// Lines placed as comments at the top of every artifact: tool version plus
// the effective run configuration, never timestamps.
struct Metadata {
    std::string config;  // single "key=value ..." line
};

// P1 ASCII portable bitmap, one diagram row per image row, 1 = black.
void write_pbm(const std::filesystem::path& path,
               const std::vector<BitRow>& rows, const Metadata& meta);

// Plain 0/1 text, one row per line, same comment header.
void write_bit_text(const std::filesystem::path& path,
                    const std::vector<BitRow>& rows, const Metadata& meta);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

// Shortest decimal with 6 significant digits, '.' separator.
std::string format_number(double v);

// Window file: first line "width W radius R", then "t x v" lines,
// '#' starts a comment.
struct WindowFile {
    ObservationWindow window;
    int radius = 1;
};

WindowFile read_window_file(const std::filesystem::path& path);
WindowFile parse_window_text(const std::string& text,
                             const std::string& origin);

} // namespace proglab
