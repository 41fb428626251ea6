#include "asmgyr/conjectures.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace asmgyr {

bool matches_class(const Pairing& blue, const NestedClassSpec& spec) {
    const int n = blue.size() / 2;
    if (spec.k < 0 || spec.k > n) return false;
    for (int i = 1; i <= 2 * spec.k; ++i) {
        if (blue.partner(i) != 2 * spec.k + 1 - i) return false;
    }
    if (spec.variant == NestedVariant::B) {
        for (int i = spec.k + 1; i <= n; ++i) {
            if (blue.partner(2 * i) != 2 * i - 1) return false;
        }
    }
    return true;
}

bool matches_class(const PairingStats& stats, const NestedClassSpec& spec) {
    return matches_class(stats.blue, spec);
}

NestedCounts nested_counts(int n, int k_max, int workers, std::uint64_t cap) {
    require_within_cap(n, cap);
    const std::size_t cells = static_cast<std::size_t>(k_max) + 1;
    using Acc = std::vector<std::uint64_t>;  // a[0..k_max], then b[0..k_max]
    const auto parts = per_shard<Acc>(n, workers, Acc(2 * cells, 0), [&](const Asm& a, Acc& acc) {
        const Pairing blue = statistics(a).blue;
        for (int k = 0; k <= k_max; ++k) {
            if (matches_class(blue, {n, k, NestedVariant::A})) ++acc[k];
            if (matches_class(blue, {n, k, NestedVariant::B})) ++acc[cells + k];
        }
    });
    NestedCounts out;
    out.n = n;
    out.a.assign(cells, 0);
    out.b.assign(cells, 0);
    for (const auto& part : parts) {
        for (std::size_t k = 0; k < cells; ++k) {
            out.a[k] += part[k];
            out.b[k] += part[cells + k];
        }
    }
    return out;
}

BigInt count_class(const NestedClassSpec& spec, int workers, std::uint64_t cap) {
    const NestedCounts c = nested_counts(spec.n, std::max(spec.k, 0), workers, cap);
    if (spec.k < 0) return 0;
    return spec.variant == NestedVariant::A ? c.a[spec.k] : c.b[spec.k];
}

bool ConjectureReport::pass() const {
    if (partial) return false;
    for (const auto& r : rows) {
        if (!r.equal()) return false;
    }
    return true;
}

std::string ConjectureReport::to_table() const {
    std::ostringstream out;
    out << std::setw(3) << "n" << std::setw(4) << "k" << std::setw(12) << "A(n,k)" << std::setw(14)
        << "B(n+1,k+1)" << "  equal\n";
    for (const auto& r : rows) {
        out << std::setw(3) << r.n << std::setw(4) << r.k << std::setw(12) << r.a << std::setw(14) << r.b
            << "  " << (r.equal() ? "yes" : "NO") << '\n';
    }
    if (partial) out << "PARTIAL: " << partial_reason << '\n';
    out << (pass() ? "PASS" : "FAIL") << '\n';
    return out.str();
}

std::string ConjectureReport::to_tsv() const {
    std::ostringstream out;
    out << "n\tk\tA_n_k\tB_n1_k1\tequal\n";
    for (const auto& r : rows) {
        out << r.n << '\t' << r.k << '\t' << r.a << '\t' << r.b << '\t' << (r.equal() ? 1 : 0) << '\n';
    }
    return out.str();
}

ConjectureReport check_conjecture(int n_max, int k_max, int workers, std::uint64_t cap) {
    ConjectureReport report;
    report.n_max = n_max;
    report.k_max = k_max;
    // B_{n+1,k+1} needs k+1 <= k_max+1 at order n+1.
    NestedCounts current;
    try {
        current = nested_counts(1, k_max + 1, workers, cap);
    } catch (const CapExceeded& e) {
        report.partial = true;
        report.partial_reason = e.what();
        return report;
    }
    for (int n = 1; n <= n_max; ++n) {
        NestedCounts next;
        try {
            next = nested_counts(n + 1, k_max + 1, workers, cap);
        } catch (const CapExceeded& e) {
            report.partial = true;
            report.partial_reason = e.what();
            break;
        }
        for (int k = 0; k <= k_max; ++k) report.rows.push_back({n, k, current.a[k], next.b[k + 1]});
        current = std::move(next);
    }
    return report;
}

}  // namespace asmgyr
