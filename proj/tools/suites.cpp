#include "suites.hpp"

#include <functional>
#include <stdexcept>

#include "asmgyr/gyration.hpp"
#include "asmgyr/paths.hpp"

namespace asmgyr::cli {

namespace {

// Returns a failure description, or an empty string when the check holds.
using Check = std::function<std::string(const Asm&)>;

struct NamedCheck {
    std::string name;
    std::uint64_t per_asm = 1;
    Check check;
};

SuiteResult run_checks(std::string_view suite, int n, int workers, std::uint64_t cap,
                       const std::vector<NamedCheck>& checks) {
    const std::vector<Asm> asms = all_asms(n, cap);
    SuiteResult result;
    result.suite = std::string(suite);
    result.n = n;
    for (const auto& c : checks) {
        std::vector<std::string> failures(asms.size());
        const long count = static_cast<long>(asms.size());
#pragma omp parallel for schedule(dynamic, 64) num_threads(workers > 0 ? workers : 1)
        for (long i = 0; i < count; ++i) failures[i] = c.check(asms[i]);
        result.checks[c.name] = c.per_asm * asms.size();
        for (std::size_t i = 0; i < asms.size(); ++i) {
            if (failures[i].empty()) continue;
            result.pass = false;
            result.counterexample = asms[i];
            result.failure = c.name + ": " + failures[i];
            return result;
        }
    }
    return result;
}

std::string theorem(const Asm& a) {
    const PairingStats before = statistics(a);
    const PairingStats after = statistics(gyrate(a));
    if (after.blue != shift_pairing(before.blue, 1)) return "blue pairing did not rotate by +1";
    if (after.green != shift_pairing(before.green, 1)) return "green pairing did not rotate by +1";
    if (after.cycles != before.cycles) return "cycle count changed";
    return {};
}

// Same-component relation on fixed vertices, as a canonical relabelling.
std::vector<int> fixed_classes(const ColorTrace& t, const std::vector<int>& fixed) {
    std::vector<int> classes;
    std::vector<int> seen;
    for (int v : fixed) {
        const int comp = t.component[v];
        int index = 0;
        while (index < static_cast<int>(seen.size()) && seen[index] != comp) ++index;
        if (index == static_cast<int>(seen.size())) seen.push_back(comp);
        classes.push_back(index);
    }
    return classes;
}

std::string lemma(const Asm& a) {
    const EdgeColoring c = asm_to_coloring(a);
    for (Parity k : {Parity::Even, Parity::Odd}) {
        const EdgeColoring d = h_sweep(c, k);
        const std::vector<int> fixed = fixed_vertices(c, k);
        if (fixed != fixed_vertices(d, k)) return "fixed vertices changed under H_k";
        for (Color color : {Color::Blue, Color::Green}) {
            if (fixed_classes(trace_color(c, color), fixed) != fixed_classes(trace_color(d, color), fixed)) {
                return std::string(color == Color::Blue ? "blue" : "green") +
                       " components of fixed vertices changed under H_" + (k == Parity::Odd ? "1" : "0");
            }
        }
    }
    return {};
}

std::string involutions(const Asm& a) {
    const Asm odd = dihedral_generator(a, Parity::Odd);
    const Asm even = dihedral_generator(a, Parity::Even);
    if (dihedral_generator(odd, Parity::Odd) != a) return "H_1 d is not an involution";
    if (dihedral_generator(even, Parity::Even) != a) return "H_0 d is not an involution";
    if (dihedral_generator(odd, Parity::Even) != gyrate(a)) return "H_0 d after H_1 d differs from G";
    if (dihedral_generator(even, Parity::Odd) != gyrate_inverse(a)) return "H_1 d after H_0 d differs from G^-1";
    const PairingStats s = statistics(a);
    if (statistics(odd).blue != apply_dihedral(s.blue, {0, true})) return "H_1 d does not send i to 2n+1-i";
    if (statistics(even).blue != apply_dihedral(s.blue, {1, true})) return "H_0 d does not send i to 2n+2-i";
    if (statistics(odd).cycles != s.cycles || statistics(even).cycles != s.cycles) return "cycle count changed";
    return {};
}

std::string roundtrip(const Asm& a) {
    const IceOrientation ice = asm_to_ice(a);
    if (ice_to_asm(ice) != a) return "matrix -> ice -> matrix";
    const EdgeColoring col = ice_to_coloring(ice);
    if (coloring_to_ice(col) != ice) return "ice -> coloring -> ice";
    if (asm_to_coloring(a) != col) return "direct coloring differs from the ice route";
    if (coloring_to_asm(col) != a) return "matrix -> coloring -> matrix";
    if (height_to_asm(asm_to_height(a)) != a) return "matrix -> height -> matrix";
    return {};
}

std::string height_gyration(const Asm& a) {
    if (height_to_asm(gyrate_height(asm_to_height(a))) != gyrate(a)) return "height flips disagree with G";
    return {};
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"theorem", "lemma", "involutions", "roundtrip", "bf-symmetry"};
    return names;
}

SuiteResult run_suite(std::string_view suite, int n, int workers, std::uint64_t cap) {
    if (suite == "theorem") return run_checks(suite, n, workers, cap, {{"gyration statistics", 1, theorem}});
    if (suite == "lemma") return run_checks(suite, n, workers, cap, {{"fixed vertices (ASM x parity)", 2, lemma}});
    if (suite == "involutions") {
        return run_checks(suite, n, workers, cap, {{"dihedral generators", 1, involutions}});
    }
    if (suite == "roundtrip") {
        return run_checks(suite, n, workers, cap,
                          {{"round trips (ASM x representation)", 3, roundtrip},
                           {"height gyration", 1, height_gyration}});
    }
    if (suite == "bf-symmetry") {
        const SymmetryReport r = bosley_fidkowski_check(n, workers, cap);
        SuiteResult result;
        result.suite = "bf-symmetry";
        result.n = n;
        result.pass = r.pass;
        result.checks["group elements"] = r.group_order;
        result.checks["label-pair comparisons"] = r.checks;
        if (!r.pass && !r.violations.empty()) result.failure = r.violations.front();
        return result;
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace asmgyr::cli
