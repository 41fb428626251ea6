#pragma once

// Nested-path classes. A_{n,k}: the blue pairing joins i with 2k+1-i for
// 1 <= i <= 2k. B_{n,k}: additionally 2i with 2i-1 for k < i <= n. The
// conjecture under test is A_{n,k} = B_{n+1,k+1}.

#include <cstdint>
#include <string>
#include <vector>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/paths.hpp"

namespace asmgyr {

enum class NestedVariant { A, B };

struct NestedClassSpec {
    int n = 1;
    int k = 0;
    NestedVariant variant = NestedVariant::A;
};

bool matches_class(const Pairing& blue, const NestedClassSpec& spec);
bool matches_class(const PairingStats& stats, const NestedClassSpec& spec);

BigInt count_class(const NestedClassSpec& spec, int workers = 1, std::uint64_t cap = kDefaultCap);

/// A_{n,k} and B_{n,k} for k = 0..k_max from a single enumeration pass.
struct NestedCounts {
    int n = 0;
    std::vector<std::uint64_t> a;
    std::vector<std::uint64_t> b;
};

NestedCounts nested_counts(int n, int k_max, int workers = 1, std::uint64_t cap = kDefaultCap);

struct ConjectureRow {
    int n = 0;
    int k = 0;
    std::uint64_t a = 0;  // A_{n,k}
    std::uint64_t b = 0;  // B_{n+1,k+1}
    bool equal() const { return a == b; }
};

struct ConjectureReport {
    int n_max = 0;
    int k_max = 0;
    std::vector<ConjectureRow> rows;
    /// Set when an order could not be enumerated under the cap; rows stop
    /// before that order.
    bool partial = false;
    std::string partial_reason;

    bool pass() const;
    std::string to_table() const;
    std::string to_tsv() const;
};

ConjectureReport check_conjecture(int n_max, int k_max = 5, int workers = 1,
                                  std::uint64_t cap = kDefaultCap);

}  // namespace asmgyr
