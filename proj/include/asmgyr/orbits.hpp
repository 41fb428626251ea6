#pragma once

// Orbit structure and exact order of gyration-derived bijections on A_n.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/grid.hpp"

namespace asmgyr {

enum class NamedMap {
    G,         // gyration
    Ginv,      // inverse gyration
    G2n,       // G applied 2n times
    GnRot,     // G applied n times, then rotation by pi
    ReflOdd,   // H_1 d
    ReflEven,  // H_0 d
};

std::string_view map_name(NamedMap m);
std::optional<NamedMap> parse_map(std::string_view name);

/// Apply a named map to one ASM.
Asm apply_map(const Asm& a, NamedMap m);

struct OrbitReport {
    int n = 0;
    NamedMap map = NamedMap::G;
    std::uint64_t elements = 0;
    std::map<std::uint64_t, std::uint64_t> size_multiplicity;
    BigInt order = 1;

    /// Orbit-size/multiplicity table, then the order and its factorization.
    std::string to_text() const;
    bool operator==(const OrbitReport&) const = default;
};

/// "2^2 * 3^2 * 5"; "1" for one.
std::string factorize(const BigInt& value);

/// Reference: walk each orbit from the first unvisited element in
/// enumeration order. Throws std::logic_error if the map is not a bijection
/// on A_n.
OrbitReport orbit_partition_serial(int n, NamedMap m, std::uint64_t cap = kDefaultCap);

/// Computes the image of every element on `workers` OpenMP threads, then
/// decomposes the permutation into cycles. Same report as the serial path.
OrbitReport orbit_partition(int n, NamedMap m, int workers = 1, std::uint64_t cap = kDefaultCap);

BigInt order_of(int n, NamedMap m, int workers = 1, std::uint64_t cap = kDefaultCap);

struct OrbitTrace {
    std::vector<Asm> orbit;            // a, f(a), f^2(a), ... up to the period or the bound
    std::optional<std::uint64_t> period;  // empty when the bound was hit first
};

OrbitTrace orbit_of(const Asm& a, NamedMap m, std::uint64_t max_steps);

}  // namespace asmgyr
