#include <numeric>
#include <set>

#include "asmgyr/gyration.hpp"
#include "asmgyr/orbits.hpp"
#include "doctest.h"

using namespace asmgyr;

TEST_CASE("map names") {
    for (NamedMap m : {NamedMap::G, NamedMap::Ginv, NamedMap::G2n, NamedMap::GnRot, NamedMap::ReflOdd,
                       NamedMap::ReflEven}) {
        CHECK(parse_map(map_name(m)) == m);
    }
    CHECK_FALSE(parse_map("H").has_value());
}

TEST_CASE("factorize") {
    CHECK(factorize(1) == "1");
    CHECK(factorize(2) == "2");
    CHECK(factorize(210) == "2 * 3 * 5 * 7");
    CHECK(factorize(263340) == "2^2 * 3^2 * 5 * 7 * 11 * 19");
    CHECK_THROWS(factorize(0));
}

TEST_CASE("kernel maps agree with the Asm-level maps") {
    for (int n = 1; n <= 4; ++n) {
        for (NamedMap m : {NamedMap::G, NamedMap::Ginv, NamedMap::G2n, NamedMap::GnRot, NamedMap::ReflOdd,
                           NamedMap::ReflEven}) {
            // Orbit sizes from repeated apply_map.
            std::map<std::uint64_t, std::uint64_t> sizes;
            std::set<Asm> seen;
            for (const Asm& a : all_asms(n)) {
                if (seen.count(a)) continue;
                const OrbitTrace t = orbit_of(a, m, 100000);
                REQUIRE(t.period.has_value());
                CHECK(t.orbit.size() == *t.period);
                seen.insert(t.orbit.begin(), t.orbit.end());
                ++sizes[*t.period];
            }
            const OrbitReport r = orbit_partition(n, m);
            CHECK(r.size_multiplicity == sizes);
            CHECK(r == orbit_partition_serial(n, m));
            CHECK(r == orbit_partition(n, m, 3));
        }
    }
}

TEST_CASE("orders of G^2n on small orders") {
    CHECK(order_of(1, NamedMap::G2n) == 1);
    CHECK(order_of(2, NamedMap::G2n) == 1);
    CHECK(order_of(3, NamedMap::G2n) == 1);
    CHECK(order_of(4, NamedMap::G2n) == 1);
    CHECK(order_of(5, NamedMap::G2n) == 2);
    CHECK(order_of(6, NamedMap::G2n, 2) == 210);
}

TEST_CASE("orbit sizes of G determine the order of G^2n") {
    for (int n = 2; n <= 6; ++n) {
        const OrbitReport g = orbit_partition(n, NamedMap::G);
        BigInt expected = 1;
        for (const auto& [size, count] : g.size_multiplicity) {
            expected = boost::multiprecision::lcm(expected, BigInt(size / std::gcd(size, std::uint64_t(2 * n))));
        }
        CHECK(order_of(n, NamedMap::G2n) == expected);
        CHECK(order_of(n, NamedMap::Ginv) == g.order);
        CHECK(order_of(n, NamedMap::ReflOdd) <= 2);
        CHECK(order_of(n, NamedMap::ReflEven) <= 2);
    }
}

TEST_CASE("report text") {
    const OrbitReport r = orbit_partition(4, NamedMap::G);
    const std::string text = r.to_text();
    CHECK(text.rfind("# n=4 map=G elements=42\n", 0) == 0);
    CHECK(text.find("order\t8\n") != std::string::npos);
    CHECK(text.find("factored\t2^3\n") != std::string::npos);
}

TEST_CASE("orbit_of stops at the bound") {
    const Asm a = all_asms(5).back();
    const OrbitTrace t = orbit_of(a, NamedMap::G, 3);
    if (!t.period) CHECK(t.orbit.size() == 4);
    CHECK(orbit_of(Asm::identity(1), NamedMap::G, 5).period == 1U);
}
