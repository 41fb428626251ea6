#include "app.hpp"

#include <chrono>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "asmgyr/conjectures.hpp"
#include "asmgyr/enumeration.hpp"
#include "asmgyr/gyration.hpp"
#include "asmgyr/io.hpp"
#include "asmgyr/orbits.hpp"
#include "asmgyr/torus.hpp"
#include "render.hpp"
#include "suites.hpp"

namespace asmgyr::cli {

namespace {

struct Config {
    int n = 0;
    std::string input;
    std::string out;
    std::string map = "G2n";
    std::uint64_t steps = 1;
    bool inverse = false;
    std::uint64_t cap = kDefaultCap;
    int workers = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 1;
    std::string style = "ascii";
    std::string format = "text";
    std::string suite;
    int k_max = 5;
    int rows = 4;
    int cols = 4;
    int samples = 1000;
};

// Thrown by commands after they have reported the problem.
struct VerificationFailed {};
struct CapRefused {};

class Progress {
public:
    Progress(std::ostream& err, int n, std::string_view what) : err_(err), active_(n >= 7) {
        if (!active_) return;
        start_ = std::chrono::steady_clock::now();
        err_ << "asmgyr: " << what << " over A_" << n << " (" << formula_count(n) << " matrices)..." << std::endl;
    }
    ~Progress() {
        if (!active_) return;
        const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start_;
        err_ << "asmgyr: done in " << took.count() << " s" << std::endl;
    }

private:
    std::ostream& err_;
    bool active_;
    std::chrono::steady_clock::time_point start_;
};

// Writes to --out atomically, or to `out` when no path was given.
void emit(const Config& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
    } else {
        write_file_atomic(cfg.out, text);
    }
}

std::string stats_line(std::string_view label, const PairingStats& s) {
    std::ostringstream line;
    line << label << "\tblue=" << s.blue.to_string() << "\tgreen=" << s.green.to_string()
         << "\tcycles=" << s.cycles << '\n';
    return line.str();
}

void cmd_gyrate(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Asm a = parse_asm(read_file(cfg.input));
    Asm b = a;
    for (std::uint64_t i = 0; i < cfg.steps; ++i) b = cfg.inverse ? gyrate_inverse(b) : gyrate(b);
    const std::string body = cfg.format == "json" ? to_json(b, statistics(b)) + "\n" : to_text(b);
    emit(cfg, out, body);
    std::ostream& report = cfg.out.empty() ? err : out;
    report << stats_line("before", statistics(a)) << stats_line("after", statistics(b));
}

void cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Progress progress(err, cfg.n, "verify " + cfg.suite);
    const SuiteResult r = run_suite(cfg.suite, cfg.n, cfg.workers, cfg.cap);
    out << "verify " << r.suite << " n=" << r.n << '\n';
    for (const auto& [name, count] : r.checks) out << "  " << name << ": " << count << " checked\n";
    if (r.pass) {
        out << "PASS\n";
        return;
    }
    out << "FAIL: " << r.failure << '\n';
    if (r.counterexample) out << "counterexample:\n" << to_text(*r.counterexample);
    throw VerificationFailed{};
}

void cmd_enumerate(const Config& cfg, std::ostream& out, std::ostream& err) {
    require_within_cap(cfg.n, cfg.cap);
    const Progress progress(err, cfg.n, "enumerate");
    std::ostringstream body;
    bool first = true;
    for_each_asm(cfg.n, [&](const Asm& a) {
        if (cfg.format == "json") {
            body << to_json(a, statistics(a)) << '\n';
        } else {
            body << (first ? "" : "\n") << to_text(a);
        }
        first = false;
    });
    emit(cfg, out, body.str());
}

void cmd_classify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Progress progress(err, cfg.n, "classify");
    emit(cfg, out, classify(cfg.n, cfg.workers, cfg.cap).to_tsv());
}

void cmd_orbit(const Config& cfg, std::ostream& out, std::ostream& err) {
    const auto map = parse_map(cfg.map);
    if (!map) throw std::invalid_argument("unknown map '" + cfg.map + "'");
    const Progress progress(err, cfg.n, "orbit " + cfg.map);
    const OrbitReport r = orbit_partition(cfg.n, *map, cfg.workers, cfg.cap);
    emit(cfg, out, r.to_text());
    if (!cfg.out.empty()) out << "order " << r.order << " = " << factorize(r.order) << '\n';
}

void cmd_conjecture(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Progress progress(err, cfg.n + 1, "conjecture");
    const ConjectureReport r = check_conjecture(cfg.n, cfg.k_max, cfg.workers, cfg.cap);
    if (cfg.out.empty()) {
        out << r.to_table();
    } else {
        write_file_atomic(cfg.out, r.to_tsv());
        out << (r.pass() ? "PASS" : r.partial ? "PARTIAL" : "FAIL") << '\n';
    }
    if (r.partial) {
        err << "asmgyr: " << r.partial_reason << '\n';
        throw CapRefused{};
    }
    if (!r.pass()) throw VerificationFailed{};
}

void cmd_render(const Config& cfg, std::ostream& out) {
    const Asm a = parse_asm(read_file(cfg.input));
    emit(cfg, out, cfg.style == "svg" ? render_svg(a) : render_ascii(a));
}

void cmd_torus(const Config& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    for (int s = 0; s < cfg.samples; ++s) {
        const TorusColoring t = random_torus_coloring(cfg.cols, cfg.rows, rng);
        const int before = torus_cycle_count(t);
        const int after = torus_cycle_count(torus_gyrate(t));
        if (before != after) {
            out << "FAIL: sample " << s << " has " << before << " cycles before and " << after << " after\n";
            throw VerificationFailed{};
        }
    }
    out << "torus " << cfg.cols << "x" << cfg.rows << ": " << cfg.samples
        << " samples, cycle count preserved (seed " << cfg.seed << ")\nPASS\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Gyration on alternating sign matrices", "asmgyr"};
    app.require_subcommand(1);

    auto add_n = [&](CLI::App* sub, bool required, std::string help = "order of the matrices") {
        auto* opt = sub->add_option("--n", cfg.n, help)->check(CLI::Range(1, kMaxOrder));
        if (required) opt->required();
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", cfg.cap, "refuse to enumerate A_n with more elements than this")
            ->envname("ASMGYR_CAP")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };
    auto add_workers = [&](CLI::App* sub) {
        sub->add_option("--workers", cfg.workers, "OpenMP worker threads")
            ->envname("ASMGYR_WORKERS")
            ->check(CLI::Range(1, 4096));
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "output file (default stdout)"); };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "ASM file, text or JSON")->required()->check(CLI::ExistingFile);
    };

    auto* gyr = app.add_subcommand("gyrate", "apply G (or its inverse) m times to one ASM");
    add_input(gyr);
    gyr->add_option("--steps", cfg.steps, "number of steps m")->check(CLI::NonNegativeNumber)->capture_default_str();
    gyr->add_flag("--inverse", cfg.inverse, "apply G^-1 instead of G");
    gyr->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    add_out(gyr);

    auto* ver = app.add_subcommand("verify", "run an exhaustive property suite over A_n");
    add_n(ver, true);
    ver->add_option("--suite", cfg.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
    add_cap(ver);
    add_workers(ver);

    auto* enu = app.add_subcommand("enumerate", "list A_n");
    add_n(enu, true);
    enu->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    add_cap(enu);
    add_out(enu);

    auto* cls = app.add_subcommand("classify", "count A_n by (blue pairing, green pairing, cycles)");
    add_n(cls, true);
    add_cap(cls);
    add_workers(cls);
    add_out(cls);

    auto* orb = app.add_subcommand("orbit", "orbit sizes and order of a map on A_n");
    add_n(orb, true);
    orb->add_option("--map", cfg.map, "G, Ginv, G2n, GnRot, refl-odd or refl-even")
        ->check(CLI::IsMember({"G", "Ginv", "G2n", "GnRot", "refl-odd", "refl-even"}))
        ->capture_default_str();
    add_cap(orb);
    add_workers(orb);
    add_out(orb);

    auto* con = app.add_subcommand("conjecture", "compare A(n,k) with B(n+1,k+1)");
    add_n(con, false, "largest n (default 5)");
    con->add_option("--k", cfg.k_max, "largest k")->check(CLI::NonNegativeNumber)->capture_default_str();
    add_cap(con);
    add_workers(con);
    add_out(con);

    auto* ren = app.add_subcommand("render", "draw an ASM as matrix, orientation and coloring");
    add_input(ren);
    ren->add_option("--style", cfg.style, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
    add_out(ren);

    auto* tor = app.add_subcommand("torus", "check cycle counts under torus gyration on random colorings");
    tor->add_option("--rows", cfg.rows, "torus height (even)")->capture_default_str();
    tor->add_option("--cols", cfg.cols, "torus width (even)")->capture_default_str();
    tor->add_option("--steps,--samples", cfg.samples, "number of random samples")->check(CLI::PositiveNumber)->capture_default_str();
    tor->add_option("--seed", cfg.seed, "random seed")->envname("ASMGYR_SEED")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    if (con->parsed() && cfg.n == 0) cfg.n = 5;

    try {
        if (gyr->parsed()) cmd_gyrate(cfg, out, err);
        else if (ver->parsed()) cmd_verify(cfg, out, err);
        else if (enu->parsed()) cmd_enumerate(cfg, out, err);
        else if (cls->parsed()) cmd_classify(cfg, out, err);
        else if (orb->parsed()) cmd_orbit(cfg, out, err);
        else if (con->parsed()) cmd_conjecture(cfg, out, err);
        else if (ren->parsed()) cmd_render(cfg, out);
        else if (tor->parsed()) cmd_torus(cfg, out);
    } catch (const VerificationFailed&) {
        return kVerificationFailed;
    } catch (const CapRefused&) {
        return kCapExceeded;
    } catch (const CapExceeded& e) {
        err << "asmgyr: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const ParseError& e) {
        err << "asmgyr: " << cfg.input << ": " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "asmgyr: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

}  // namespace asmgyr::cli
