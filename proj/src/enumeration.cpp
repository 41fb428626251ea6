#include "asmgyr/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace asmgyr {

BigInt formula_count(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    auto factorial = [](int k) {
        BigInt f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < n; ++i) {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    return num / den;
}

CapExceeded::CapExceeded(int n, BigInt required)
    : std::runtime_error("order " + std::to_string(n) + " has " + required.str() +
                         " ASMs, above the enumeration cap; rerun with a cap of at least " +
                         required.str()),
      n_(n),
      required_(std::move(required)) {}

void require_within_cap(int n, std::uint64_t cap) {
    BigInt required = formula_count(n);
    if (required > cap) throw CapExceeded(n, std::move(required));
}

// ---------------------------------------------------------------------------

namespace {

Asm heights_to_asm(int n, const std::vector<int>& h) {
    const int m = n + 1;
    auto sigma = [&](int r, int c) { return (r + c - h[r * m + c]) / 2; };
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            e[r * n + c] = static_cast<std::int8_t>(sigma(r + 1, c + 1) - sigma(r, c + 1) -
                                                    sigma(r + 1, c) + sigma(r, c));
        }
    }
    return asm_from_trusted(n, std::move(e));
}

int shard_depth(int n) { return std::min(2, n - 1); }

}  // namespace

// Free cells are (r,c), 1 <= r,c <= n-1, searched row-major; each takes the
// value above it minus one first, then plus one, which gives lexicographic
// order in the height rows.
AsmEnumerator::AsmEnumerator(int n, std::vector<int> prefix) : n_(n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    const int w = n - 1;
    const int m = n + 1;
    end_ = w * w;
    if (prefix.size() % static_cast<std::size_t>(m) != 0 ||
        prefix.size() / m > static_cast<std::size_t>(w)) {
        throw std::invalid_argument("prefix must be whole height rows");
    }
    const int rows = static_cast<int>(prefix.size() / m);
    first_free_ = rows * w;

    h_.assign(static_cast<std::size_t>(m) * m, 0);
    for (int k = 0; k <= n; ++k) {
        h_[k] = k;
        h_[k * m] = k;
        h_[n * m + k] = n - k;
        h_[k * m + n] = n - k;
    }
    for (int r = 1; r <= rows; ++r) {
        for (int c = 0; c <= n; ++c) h_[r * m + c] = prefix[(r - 1) * m + c];
    }
    for (int r = 1; r <= rows && !done_; ++r) {
        if (h_[r * m] != r || h_[r * m + n] != n - r) done_ = true;
        for (int c = 1; c < n && !done_; ++c) {
            if (!fits((r - 1) * w + (c - 1), h_[r * m + c])) done_ = true;
        }
    }
    tried_.assign(std::max(end_, 1), 0);
}

bool AsmEnumerator::fits(int cell, int value) const {
    const int w = n_ - 1;
    const int m = n_ + 1;
    const int r = cell / w + 1;
    const int c = cell % w + 1;
    if (std::abs(value - h_[(r - 1) * m + c]) != 1) return false;
    if (std::abs(value - h_[r * m + c - 1]) != 1) return false;
    if (c == n_ - 1 && std::abs(value - (n_ - r)) != 1) return false;
    if (r == n_ - 1 && std::abs(value - (n_ - c)) != 1) return false;
    return true;
}

bool AsmEnumerator::advance() {
    if (done_) return false;
    int k;
    if (!started_) {
        started_ = true;
        if (first_free_ >= end_) return true;
        k = first_free_;
        tried_[k] = 0;
    } else {
        k = end_ - 1;
    }
    const int w = n_ - 1;
    const int m = n_ + 1;
    while (k >= first_free_) {
        bool placed = false;
        const int at = (k / w + 1) * m + (k % w + 1);
        while (tried_[k] < 2) {
            const int value = h_[at - m] + (tried_[k]++ == 0 ? -1 : 1);
            if (fits(k, value)) {
                h_[at] = value;
                placed = true;
                break;
            }
        }
        if (placed) {
            if (k == end_ - 1) return true;
            ++k;
            tried_[k] = 0;
        } else {
            --k;
        }
    }
    done_ = true;
    return false;
}

std::optional<Asm> AsmEnumerator::next() {
    if (!advance()) return std::nullopt;
    return heights_to_asm(n_, h_);
}

std::vector<std::vector<int>> shard_prefixes(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    const int depth = shard_depth(n);
    if (depth <= 0) return {{}};
    const int m = n + 1;
    AsmEnumerator search(n);
    search.stop_at(depth * (n - 1));
    std::vector<std::vector<int>> out;
    while (search.advance()) {
        const auto& h = search.heights();
        out.emplace_back(h.begin() + m, h.begin() + (depth + 1) * m);
    }
    return out;
}

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
    AsmEnumerator it(n);
    while (auto a = it.next()) visit(*a);
}

BigInt count_asms(int n, int workers) {
    const auto parts = per_shard<std::uint64_t>(n, workers, 0, [](const Asm&, std::uint64_t& acc) { ++acc; });
    BigInt total = 0;
    for (auto p : parts) total += p;
    return total;
}

BigInt count_asms_serial(int n) {
    std::uint64_t total = 0;
    for_each_asm(n, [&](const Asm&) { ++total; });
    return total;
}

std::vector<Asm> all_asms(int n, std::uint64_t cap) {
    require_within_cap(n, cap);
    std::vector<Asm> out;
    for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
    return out;
}

std::string ClassificationTable::to_tsv() const {
    std::ostringstream out;
    out << "blue\tgreen\tcycles\tcount\n";
    for (const auto& [stats, count] : counts) {
        out << stats.blue.to_string() << '\t' << stats.green.to_string() << '\t' << stats.cycles << '\t'
            << count << '\n';
    }
    return out.str();
}

ClassificationTable classify(int n, int workers, std::uint64_t cap) {
    require_within_cap(n, cap);
    using Table = std::map<PairingStats, std::uint64_t>;
    const auto parts =
        per_shard<Table>(n, workers, Table{}, [](const Asm& a, Table& acc) { ++acc[statistics(a)]; });
    ClassificationTable table;
    table.n = n;
    for (const auto& part : parts) {
        for (const auto& [stats, count] : part) {
            table.counts[stats] += count;
            table.total += count;
        }
    }
    return table;
}

SymmetryReport bosley_fidkowski_check(int n, int workers, std::uint64_t cap) {
    require_within_cap(n, cap);
    const int m = 2 * n;
    using Counts = std::vector<std::uint64_t>;
    const auto parts = per_shard<Counts>(n, workers, Counts(static_cast<std::size_t>(m) * m, 0),
                                         [m](const Asm& a, Counts& acc) {
                                             const Pairing blue = statistics(a).blue;
                                             for (int i = 1; i <= m; ++i) {
                                                 ++acc[(i - 1) * m + blue.partner(i) - 1];
                                             }
                                         });
    Counts joined(static_cast<std::size_t>(m) * m, 0);
    for (const auto& part : parts) {
        for (std::size_t k = 0; k < part.size(); ++k) joined[k] += part[k];
    }
    SymmetryReport report;
    report.n = n;
    const auto group = dihedral_group(n);
    report.group_order = group.size();
    for (const auto& s : group) {
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                ++report.checks;
                const std::uint64_t before = joined[(i - 1) * m + j - 1];
                const std::uint64_t after = joined[(s.apply(i, m) - 1) * m + s.apply(j, m) - 1];
                if (before != after) {
                    report.pass = false;
                    std::ostringstream msg;
                    msg << "pair (" << i << "," << j << ") count " << before << " vs image ("
                        << s.apply(i, m) << "," << s.apply(j, m) << ") count " << after;
                    report.violations.push_back(msg.str());
                }
            }
        }
    }
    return report;
}

}  // namespace asmgyr
