#include "asmgyr/conjectures.hpp"
#include "doctest.h"

using namespace asmgyr;

namespace {

// Nested arcs 1..2k around the start, then (for B) adjacent pairs after.
bool oracle_a(const Pairing& p, int k) {
    if (2 * k > p.size()) return false;
    for (int i = 1; i <= k; ++i) {
        if (p.partner(i) != 2 * k + 1 - i) return false;
    }
    return true;
}

bool oracle_b(const Pairing& p, int k) {
    if (!oracle_a(p, k)) return false;
    for (int j = 2 * k + 1; j <= p.size(); j += 2) {
        if (p.partner(j) != j + 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("class membership by hand") {
    const Pairing rainbow({6, 5, 4, 3, 2, 1});
    const Pairing adjacent({2, 1, 4, 3, 6, 5});
    CHECK(matches_class(rainbow, {3, 3, NestedVariant::A}));
    CHECK(matches_class(rainbow, {3, 3, NestedVariant::B}));
    CHECK_FALSE(matches_class(rainbow, {3, 1, NestedVariant::A}));
    CHECK(matches_class(adjacent, {3, 1, NestedVariant::B}));
    CHECK(matches_class(adjacent, {3, 0, NestedVariant::B}));
    CHECK_FALSE(matches_class(adjacent, {3, 2, NestedVariant::A}));
    CHECK_FALSE(matches_class(adjacent, {3, 4, NestedVariant::A}));
    CHECK(matches_class(Pairing({2, 1, 6, 5, 4, 3}), {3, 1, NestedVariant::A}));
    CHECK_FALSE(matches_class(Pairing({2, 1, 6, 5, 4, 3}), {3, 1, NestedVariant::B}));
}

TEST_CASE("nested counts agree with an independent recount") {
    for (int n = 1; n <= 5; ++n) {
        const ClassificationTable t = classify(n);
        const NestedCounts c = nested_counts(n, 6, 2);
        for (int k = 0; k <= 6; ++k) {
            std::uint64_t a = 0;
            std::uint64_t b = 0;
            for (const auto& [stats, count] : t.counts) {
                if (oracle_a(stats.blue, k)) a += count;
                if (oracle_b(stats.blue, k)) b += count;
            }
            CHECK(c.a[k] == a);
            CHECK(c.b[k] == b);
            CHECK(count_class({n, k, NestedVariant::A}) == a);
            CHECK(count_class({n, k, NestedVariant::B}) == b);
        }
        CHECK(c.a[0] == formula_count(n));
    }
}

TEST_CASE("conjecture holds for small n") {
    const ConjectureReport r = check_conjecture(4, 4, 2);
    CHECK(r.pass());
    CHECK(r.rows.size() == 4U * 5U);
    CHECK(r.to_tsv().rfind("n\tk\tA_n_k\tB_n1_k1\tequal\n", 0) == 0);
    CHECK(r.to_table().find("PASS") != std::string::npos);
}

TEST_CASE("conjecture report marks partial runs") {
    const ConjectureReport r = check_conjecture(5, 2, 1, 500);
    CHECK(r.partial);
    CHECK_FALSE(r.pass());
    CHECK(r.rows.size() == 4U * 3U);  // n = 1..4 need orders up to 5
    CHECK(r.partial_reason.find("7436") != std::string::npos);
}
