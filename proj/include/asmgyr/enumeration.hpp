#pragma once

// Exhaustive generation of A_n by depth-first search over corner-sum height
// rows. Emission order is lexicographic in the height rows. The search tree
// is cut after the first two free rows into shards; the parallel drivers run
// shards independently and merge per-shard results in shard order, so every
// result is independent of the worker count.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asmgyr/grid.hpp"
#include "asmgyr/paths.hpp"

namespace asmgyr {

using BigInt = boost::multiprecision::cpp_int;

/// prod_{i=0}^{n-1} (3i+1)! / (n+i)!
BigInt formula_count(int n);

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(int n, BigInt required);
    int order() const { return n_; }
    const BigInt& required() const { return required_; }

private:
    int n_;
    BigInt required_;
};

/// Throws CapExceeded when |A_n| > cap.
void require_within_cap(int n, std::uint64_t cap);

/// Streams the ASMs of order n whose first height rows match `prefix`
/// (flattened rows 1..d, each of length n+1; empty = no restriction).
class AsmEnumerator {
public:
    explicit AsmEnumerator(int n, std::vector<int> prefix = {});

    std::optional<Asm> next();

    /// Height matrix of the most recently emitted ASM.
    const std::vector<int>& heights() const { return h_; }

private:
    friend std::vector<std::vector<int>> shard_prefixes(int n);

    /// Search only the free cells before `end` (row-major).
    void stop_at(int end) { end_ = end; }
    bool advance();
    bool fits(int cell, int value) const;

    int n_;
    int first_free_ = 0;
    int end_ = 0;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> h_;
    std::vector<std::int8_t> tried_;
};

/// Height rows 1..min(2, n-1), flattened, one entry per shard, in
/// lexicographic order.
std::vector<std::vector<int>> shard_prefixes(int n);

/// Serial reference: every ASM of order n in lexicographic height order.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);

/// Runs `visit(asm, acc)` over each shard with its own accumulator on up to
/// `workers` OpenMP threads; returns the accumulators in shard order.
template <class Acc, class Visit>
std::vector<Acc> per_shard(int n, int workers, const Acc& init, Visit visit) {
    const auto prefixes = shard_prefixes(n);
    std::vector<Acc> out(prefixes.size(), init);
    const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers > 0 ? workers : 1)
    for (long s = 0; s < count; ++s) {
        AsmEnumerator it(n, prefixes[s]);
        while (auto a = it.next()) visit(*a, out[s]);
    }
    return out;
}

BigInt count_asms(int n, int workers = 1);

/// Serial reference count without sharding.
BigInt count_asms_serial(int n);

/// Materialize A_n in serial emission order, after the cap check.
std::vector<Asm> all_asms(int n, std::uint64_t cap = kDefaultCap);

struct ClassificationTable {
    int n = 0;
    std::map<PairingStats, std::uint64_t> counts;
    std::uint64_t total = 0;

    /// Tab-separated: blue partners, green partners, cycles, count.
    std::string to_tsv() const;
};

ClassificationTable classify(int n, int workers = 1, std::uint64_t cap = kDefaultCap);

struct SymmetryReport {
    int n = 0;
    bool pass = true;
    std::size_t group_order = 0;
    std::size_t checks = 0;
    std::vector<std::string> violations;
};

/// For every element s of D_2n and every label pair (i,j), the number of
/// ASMs whose blue pairing joins i and j equals the number joining s(i) and
/// s(j).
SymmetryReport bosley_fidkowski_check(int n, int workers = 1, std::uint64_t cap = kDefaultCap);

}  // namespace asmgyr
