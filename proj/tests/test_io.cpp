#include <filesystem>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/io.hpp"
#include "doctest.h"

using namespace asmgyr;

namespace {

void check_error(std::string_view text, int line, int column) {
    try {
        parse_asm(text);
        FAIL("expected a parse error for: " << text);
    } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
    }
}

}  // namespace

TEST_CASE("text and JSON round trips") {
    for (int n = 1; n <= 4; ++n) {
        for (const Asm& a : all_asms(n)) {
            CHECK(parse_asm(to_text(a)) == a);
            CHECK(parse_asm(to_json(a)) == a);
            CHECK(parse_asm(to_json(a, statistics(a))) == a);
        }
    }
    std::string many;
    for (const Asm& a : all_asms(3)) many += to_text(a) + "\n";
    CHECK(parse_text_asms(many) == all_asms(3));
}

TEST_CASE("text format") {
    const Asm a(3, {0, 1, 0, 1, -1, 1, 0, 1, 0});
    CHECK(to_text(a) == "3\n0 1 0\n1 -1 1\n0 1 0\n");
    CHECK(parse_text_asm("\n  3\n0 +1 0\n1\t-1 1\r\n0 1 0\n\n") == a);
}

TEST_CASE("JSON format") {
    const Asm a = Asm::identity(2);
    CHECK(to_json(a) == R"({"n":2,"entries":[[1,0],[0,1]]})");
    CHECK(to_json(a, statistics(a)) ==
          R"({"n":2,"entries":[[1,0],[0,1]],"stats":{"blue":[2,1,4,3],"green":[2,1,4,3],"cycles":0}})");
}

TEST_CASE("diagnostics carry line and column") {
    check_error("", 1, 1);
    check_error("x\n", 1, 1);
    check_error("2 2\n1 0\n0 1\n", 1, 3);
    check_error("2\n1 0\n0 2\n", 3, 3);
    check_error("2\n1 0\n0\n", 3, 2);
    check_error("2\n1 0 0\n0 1\n", 2, 5);
    check_error("2\n1 0\n", 3, 1);
    check_error("2\n1 0\n1 0\n", 2, 1);
    check_error("2\n1 0\n0 1\n7\n", 4, 1);
    check_error("{\"n\": 2,\n \"entries\": [[1,0],[0,1]]\n", 3, 1);
    check_error("{\"n\": 2, \"entries\": [[1,0],[0,2]]}", 1, 1);
    check_error("{\"n\": 2, \"entries\": [[1,0],[1,0]]}", 1, 1);
    check_error("{\"m\": 2}", 1, 1);
    check_error("70\n", 1, 1);
}

TEST_CASE("atomic writes") {
    const auto dir = std::filesystem::temp_directory_path() / "asmgyr_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.txt";
    write_file_atomic(path, "first\n");
    write_file_atomic(path, "second\n");
    CHECK(read_file(path) == "second\n");
    for (const auto& entry : std::filesystem::directory_iterator(dir)) CHECK(entry.path() == path);
    std::filesystem::remove_all(dir);
    CHECK_THROWS(read_file(dir / "missing"));
}
