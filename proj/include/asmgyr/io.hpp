#pragma once

// File formats.
//
// Text: a line holding n, then n lines of n entries from {-1,0,1} separated
// by spaces. Several matrices may follow each other, separated by blank
// lines.
//
// JSON (one object per ASM):
//   {"n": 3, "entries": [[0,1,0],[1,-1,1],[0,1,0]],
//    "stats": {"blue": [6,3,2,5,4,1], "green": [...], "cycles": 0}}
// "stats" is optional on input and ignored; blue/green are partner arrays
// over labels 1..2n.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "asmgyr/grid.hpp"
#include "asmgyr/paths.hpp"

namespace asmgyr {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

std::string to_text(const Asm& a);
Asm parse_text_asm(std::string_view text);
std::vector<Asm> parse_text_asms(std::string_view text);

std::string to_json(const Asm& a, const std::optional<PairingStats>& stats = std::nullopt);
Asm parse_json_asm(std::string_view text);

/// Text or JSON, chosen by the first non-blank character.
Asm parse_asm(std::string_view text);

std::string read_file(const std::filesystem::path& path);

/// Write to a temporary sibling, then rename over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace asmgyr
