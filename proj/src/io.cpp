#include "asmgyr/io.hpp"

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "json.hpp"

namespace asmgyr {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         what),
      line_(line),
      column_(column) {}

std::string to_text(const Asm& a) {
    std::ostringstream out;
    const int n = a.order();
    out << n << '\n';
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out << (c ? " " : "") << a.at(r, c);
        out << '\n';
    }
    return out.str();
}

namespace {

struct Token {
    std::string_view text;
    int column;  // 1-based
};

std::vector<Token> tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Parses one matrix starting at lines[pos] (0-based), advancing pos past it.
Asm parse_block(const std::vector<std::string_view>& lines, std::size_t& pos) {
    while (pos < lines.size() && tokens(lines[pos]).empty()) ++pos;
    if (pos >= lines.size()) throw ParseError(static_cast<int>(pos) + 1, 1, "expected the order n");
    const int header_line = static_cast<int>(pos) + 1;
    const auto head = tokens(lines[pos]);
    if (head.size() != 1) {
        throw ParseError(header_line, head.size() > 1 ? head[1].column : 1,
                         "header must hold only the order n");
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(std::string(head[0].text), &used);
        if (used != head[0].text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw ParseError(header_line, head[0].column, "order is not an integer");
    }
    if (n < 1 || n > kMaxOrder) {
        throw ParseError(header_line, head[0].column, "order must be in 1.." + std::to_string(kMaxOrder));
    }
    ++pos;
    std::vector<std::int8_t> entries;
    std::vector<std::vector<int>> columns(n);
    for (int r = 0; r < n; ++r, ++pos) {
        const int line_no = static_cast<int>(pos) + 1;
        if (pos >= lines.size()) throw ParseError(line_no, 1, "expected " + std::to_string(n) + " matrix rows");
        const auto row = tokens(lines[pos]);
        if (static_cast<int>(row.size()) != n) {
            const int col = static_cast<int>(row.size()) > n ? row[n].column
                                                            : static_cast<int>(lines[pos].size()) + 1;
            throw ParseError(line_no, col,
                             "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        }
        for (int c = 0; c < n; ++c) {
            const auto t = row[c].text;
            int v;
            if (t == "0") v = 0;
            else if (t == "1" || t == "+1") v = 1;
            else if (t == "-1") v = -1;
            else throw ParseError(line_no, row[c].column, "entry must be -1, 0 or 1");
            entries.push_back(static_cast<std::int8_t>(v));
            columns[c].push_back(row[c].column);
        }
    }
    if (!Asm::is_valid(n, entries)) {
        for (int r = 0; r < n; ++r) {
            int sum = 0;
            bool ok = true;
            for (int c = 0; c < n; ++c) {
                sum += entries[r * n + c];
                if (sum < 0 || sum > 1) ok = false;
            }
            if (!ok || sum != 1) {
                throw ParseError(header_line + 1 + r, 1, "row " + std::to_string(r + 1) +
                                                             " does not alternate in sign with sum 1");
            }
        }
        for (int c = 0; c < n; ++c) {
            int sum = 0;
            bool ok = true;
            for (int r = 0; r < n; ++r) {
                sum += entries[r * n + c];
                if (sum < 0 || sum > 1) ok = false;
            }
            if (!ok || sum != 1) {
                throw ParseError(header_line + 1, columns[c][0], "column " + std::to_string(c + 1) +
                                                                     " does not alternate in sign with sum 1");
            }
        }
    }
    return Asm(n, std::move(entries));
}

}  // namespace

Asm parse_text_asm(std::string_view text) {
    const auto lines = split_lines(text);
    std::size_t pos = 0;
    Asm a = parse_block(lines, pos);
    while (pos < lines.size()) {
        const auto rest = tokens(lines[pos]);
        if (!rest.empty()) throw ParseError(static_cast<int>(pos) + 1, rest[0].column, "unexpected trailing content");
        ++pos;
    }
    return a;
}

std::vector<Asm> parse_text_asms(std::string_view text) {
    const auto lines = split_lines(text);
    std::vector<Asm> out;
    std::size_t pos = 0;
    while (true) {
        while (pos < lines.size() && tokens(lines[pos]).empty()) ++pos;
        if (pos >= lines.size()) break;
        out.push_back(parse_block(lines, pos));
    }
    return out;
}

std::string to_json(const Asm& a, const std::optional<PairingStats>& stats) {
    nlohmann::ordered_json j;
    j["n"] = a.order();
    auto rows = nlohmann::ordered_json::array();
    for (int r = 0; r < a.order(); ++r) {
        auto row = nlohmann::ordered_json::array();
        for (int c = 0; c < a.order(); ++c) row.push_back(a.at(r, c));
        rows.push_back(row);
    }
    j["entries"] = rows;
    if (stats) {
        j["stats"] = {{"blue", stats->blue.partners()},
                      {"green", stats->green.partners()},
                      {"cycles", stats->cycles}};
    }
    return j.dump();
}

Asm parse_json_asm(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // byte offset -> line/column
        int line = 1;
        int column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, "malformed JSON");
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("entries")) {
        throw ParseError(1, 1, "JSON ASM needs fields n and entries");
    }
    if (!j["n"].is_number_integer()) throw ParseError(1, 1, "n must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1 || n > kMaxOrder) throw ParseError(1, 1, "order out of range");
    const auto& rows = j["entries"];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError(1, 1, "entries must have n rows");
    std::vector<std::int8_t> e;
    for (const auto& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError(1, 1, "each row needs n entries");
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw ParseError(1, 1, "entry must be -1, 0 or 1");
            const int x = v.get<int>();
            if (x < -1 || x > 1) throw ParseError(1, 1, "entry must be -1, 0 or 1");
            e.push_back(static_cast<std::int8_t>(x));
        }
    }
    if (!Asm::is_valid(n, e)) throw ParseError(1, 1, "not an alternating sign matrix");
    return Asm(n, std::move(e));
}

Asm parse_asm(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json_asm(text);
    return parse_text_asm(text);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

}  // namespace asmgyr
