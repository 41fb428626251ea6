#pragma once

// In-place sweeps over packed coloring words. These are the hot loops behind
// gyration; the value-semantic API in gyration.hpp wraps them.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "asmgyr/grid.hpp"

namespace asmgyr::kernel {

using Words = std::span<std::uint64_t>;

inline bool bit(std::span<const std::uint64_t> w, int e) { return (w[e >> 6] >> (e & 63)) & 1U; }
inline void flip(Words w, int e) { w[e >> 6] ^= std::uint64_t{1} << (e & 63); }

/// Edge quadruples (bottom, top, left, right) of the squares of one parity,
/// row-major in (j, i). Squares with missing edges carry kNoEdge.
struct SweepPlan {
    int n = 0;
    std::array<std::vector<std::array<int, 4>>, 2> interior;
    std::array<std::vector<std::array<int, 4>>, 2> all;
    std::vector<std::uint64_t> valid_mask;
};

const SweepPlan& plan(int n);

/// Two parallel edges one color, the other two the other color.
inline bool alternating(std::span<const std::uint64_t> w, const std::array<int, 4>& sq) {
    const bool b = bit(w, sq[0]);
    const bool t = bit(w, sq[1]);
    const bool l = bit(w, sq[2]);
    const bool r = bit(w, sq[3]);
    return b == t && l == r && b != l;
}

/// G_S on one square: flip all four edges when they alternate.
inline void local_g(Words w, const std::array<int, 4>& sq) {
    if (!alternating(w, sq)) return;
    for (int e : sq) flip(w, e);
}

/// H_S on one square: reverse every present edge unless the square is
/// interior and alternating. A single H_S does not preserve validity; only
/// the full parity sweep does.
inline void local_h(Words w, const std::array<int, 4>& sq) {
    const bool complete = sq[0] != kNoEdge && sq[1] != kNoEdge && sq[2] != kNoEdge && sq[3] != kNoEdge;
    if (complete && alternating(w, sq)) return;
    for (int e : sq) {
        if (e != kNoEdge) flip(w, e);
    }
}

void g_sweep(Words w, const SweepPlan& p, Parity k);
void h_sweep(Words w, const SweepPlan& p, Parity k);
void reverse(Words w, const SweepPlan& p);

/// Odd sweep, then even sweep.
inline void gyrate(Words w, const SweepPlan& p) {
    g_sweep(w, p, Parity::Odd);
    g_sweep(w, p, Parity::Even);
}

inline void gyrate_inverse(Words w, const SweepPlan& p) {
    g_sweep(w, p, Parity::Even);
    g_sweep(w, p, Parity::Odd);
}

}  // namespace asmgyr::kernel
