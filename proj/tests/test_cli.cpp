#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "app.hpp"
#include "asmgyr/enumeration.hpp"
#include "asmgyr/gyration.hpp"
#include "asmgyr/io.hpp"
#include "doctest.h"
#include "render.hpp"

using namespace asmgyr;

namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "asmgyr");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::path(ASMGYR_TEST_DATA) / "cli_scratch";
    fs::create_directories(dir);
    return dir / name;
}

fs::path write_asm(const std::string& name, const Asm& a) {
    const fs::path p = scratch(name);
    write_file_atomic(p, to_text(a));
    return p;
}

}  // namespace

TEST_CASE("gyrate") {
    SUBCASE("G is the identity at n = 1") {
        const fs::path in = write_asm("one.txt", Asm::identity(1));
        const fs::path out = scratch("one_out.txt");
        CHECK(run_cli({"gyrate", in.string(), "--steps", "5", "--out", out.string()}).code == 0);
        CHECK(read_file(out) == read_file(in));
    }
    SUBCASE("eight steps reproduce an order-4 input") {
        for (const Asm& a : all_asms(4)) {
            const fs::path in = write_asm("four.txt", a);
            const Result r = run_cli({"gyrate", in.string(), "--steps", "8"});
            CHECK(r.code == 0);
            CHECK(r.out == read_file(in));
            CHECK(r.err.find("before\t") != std::string::npos);
        }
    }
    SUBCASE("inverse undoes one step") {
        const Asm a = all_asms(5)[123];
        const fs::path in = write_asm("five.txt", a);
        const fs::path mid = scratch("five_mid.txt");
        const fs::path back = scratch("five_back.txt");
        CHECK(run_cli({"gyrate", in.string(), "--out", mid.string()}).code == 0);
        CHECK(parse_asm(read_file(mid)) == gyrate(a));
        const Result r = run_cli({"gyrate", mid.string(), "--inverse", "--out", back.string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("after\t") != std::string::npos);
        CHECK(read_file(back) == read_file(in));
    }
    SUBCASE("JSON output") {
        const fs::path in = write_asm("two.txt", Asm::identity(2));
        const Result r = run_cli({"gyrate", in.string(), "--steps", "0", "--format", "json"});
        CHECK(r.out == to_json(Asm::identity(2), statistics(Asm::identity(2))) + "\n");
    }
    SUBCASE("malformed input") {
        const fs::path in = scratch("bad.txt");
        write_file_atomic(in, "2\n1 0\n0 2\n");
        const Result r = run_cli({"gyrate", in.string()});
        CHECK(r.code == cli::kInputError);
        CHECK(r.err.find("line 3, column 3") != std::string::npos);
        CHECK(run_cli({"gyrate", scratch("missing.txt").string()}).code == cli::kInputError);
    }
}

TEST_CASE("verify") {
    Result r = run_cli({"verify", "--n", "3", "--suite", "theorem"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gyration statistics: 7 checked") != std::string::npos);
    CHECK(r.out.find("PASS") != std::string::npos);

    r = run_cli({"verify", "--n", "4", "--suite", "lemma"});
    CHECK(r.code == 0);
    CHECK(r.out.find(": 84 checked") != std::string::npos);

    r = run_cli({"verify", "--n", "2", "--suite", "roundtrip"});
    CHECK(r.code == 0);
    CHECK(r.out.find("round trips (ASM x representation): 6 checked") != std::string::npos);

    CHECK(run_cli({"verify", "--n", "4", "--suite", "involutions"}).code == 0);
    CHECK(run_cli({"verify", "--n", "4", "--suite", "bf-symmetry"}).code == 0);
    CHECK(run_cli({"verify", "--n", "4", "--suite", "nonsense"}).code == cli::kInputError);
    CHECK(run_cli({"verify", "--n", "8", "--suite", "theorem"}).code == cli::kCapExceeded);
}

TEST_CASE("orbit") {
    Result r = run_cli({"orbit", "--n", "5", "--map", "G2n"});
    CHECK(r.code == 0);
    CHECK(r.out.find("order\t2\n") != std::string::npos);
    const fs::path out = scratch("orbit6.txt");
    r = run_cli({"orbit", "--n", "6", "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out == "order 210 = 2 * 3 * 5 * 7\n");
    CHECK(read_file(out).find("order\t210\n") != std::string::npos);
    CHECK(run_cli({"orbit", "--n", "4", "--map", "H"}).code == cli::kInputError);
}

TEST_CASE("worker count never changes output") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--n", "5"}, {"orbit", "--n", "5", "--map", "G"}, {"conjecture", "--n", "3"},
             {"verify", "--n", "4", "--suite", "theorem"}}) {
        auto one = args;
        one.insert(one.end(), {"--workers", "1"});
        auto many = args;
        many.insert(many.end(), {"--workers", "4"});
        const Result a = run_cli(one);
        const Result b = run_cli(many);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("enumerate, caps and environment") {
    Result r = run_cli({"enumerate", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(parse_text_asms(r.out) == all_asms(3));
    r = run_cli({"enumerate", "--n", "2", "--format", "json"});
    CHECK(r.out == to_json(all_asms(2)[0], statistics(all_asms(2)[0])) + "\n" +
                       to_json(all_asms(2)[1], statistics(all_asms(2)[1])) + "\n");

    r = run_cli({"enumerate", "--n", "8"});
    CHECK(r.code == cli::kCapExceeded);
    CHECK(r.err.find("10850216") != std::string::npos);

    setenv("ASMGYR_CAP", "10", 1);
    CHECK(run_cli({"classify", "--n", "4"}).code == cli::kCapExceeded);
    CHECK(run_cli({"classify", "--n", "4", "--cap", "42"}).code == 0);
    unsetenv("ASMGYR_CAP");
    CHECK(run_cli({"classify", "--n", "4", "--cap", "0"}).code == cli::kInputError);
    CHECK(run_cli({"conjecture", "--n", "5", "--cap", "1000"}).code == cli::kCapExceeded);
    CHECK(run_cli({"classify", "--n", "4", "--workers", "0"}).code == cli::kInputError);
    CHECK(run_cli({}).code == cli::kInputError);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("torus") {
    Result r = run_cli({"torus", "--rows", "4", "--cols", "6", "--steps", "50", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(run_cli({"torus", "--rows", "3"}).code == cli::kInputError);
}

TEST_CASE("render") {
    SUBCASE("n = 1 has two solid and two dashed edges") {
        const std::string art = cli::render_coloring_ascii(asm_to_coloring(Asm::identity(1)));
        int solid = 0;
        int dashed = 0;
        for (std::size_t i = 0; i < art.size(); ++i) {
            if (art.compare(i, 3, "---") == 0 || art[i] == '|') ++solid;
            if (art.compare(i, 3, "- -") == 0 || art[i] == ':') ++dashed;
        }
        CHECK(solid == 2);
        CHECK(dashed == 2);
        CHECK(std::count(art.begin(), art.end(), 'o') == 1);

        const fs::path in = write_asm("render1.txt", Asm::identity(1));
        const Result r = run_cli({"render", in.string()});
        CHECK(r.code == 0);
        CHECK(r.out == cli::render_ascii(Asm::identity(1)));
    }
    SUBCASE("renders of a and G(a) differ exactly on changed edges") {
        for (const Asm& a : all_asms(4)) {
            const EdgeColoring c = asm_to_coloring(a);
            const EdgeColoring g = gyrate(c);
            std::istringstream sa(cli::render_coloring_ascii(c));
            std::istringstream sg(cli::render_coloring_ascii(g));
            std::set<std::pair<int, int>> differing;
            std::string la;
            std::string lg;
            for (int row = 0; std::getline(sa, la) && std::getline(sg, lg); ++row) {
                la.resize(std::max(la.size(), lg.size()), ' ');
                lg.resize(la.size(), ' ');
                for (std::size_t col = 0; col < la.size(); ++col) {
                    if (la[col] != lg[col]) differing.insert({row, static_cast<int>(col)});
                }
            }
            std::set<std::pair<int, int>> changed;
            for (int e = 0; e < geometry(4).edge_count(); ++e) {
                if (c.color(e) != g.color(e)) changed.insert(cli::ascii_edge_cell(4, e));
            }
            CHECK(differing == changed);
        }
    }
    SUBCASE("SVG is well-formed XML") {
        const fs::path in = write_asm("render3.txt", Asm(3, {0, 1, 0, 1, -1, 1, 0, 1, 0}));
        const fs::path out = scratch("render3.svg");
        CHECK(run_cli({"render", in.string(), "--style", "svg", "--out", out.string()}).code == 0);
        boost::property_tree::ptree tree;
        std::istringstream svg(read_file(out));
        CHECK_NOTHROW(boost::property_tree::read_xml(svg, tree));
        CHECK(tree.get_child("svg").count("g") == 4);
        CHECK(tree.get<std::string>("svg.<xmlattr>.xmlns") == "http://www.w3.org/2000/svg");
    }
}
