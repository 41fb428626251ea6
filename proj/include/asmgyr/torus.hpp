#pragma once

// Gyration on a p x q torus with both dimensions even. Every square is
// interior, so the two parity sweeps use the plain G_S rule and there are no
// paths, only monochromatic cycles.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "asmgyr/grid.hpp"

namespace asmgyr {

/// Horizontal edge (x,y)-(x+1,y) has index y*p + x; vertical edge
/// (x,y)-(x,y+1) has index p*q + y*p + x, coordinates taken mod (p,q).
class TorusColoring {
public:
    TorusColoring(int p, int q, std::vector<std::uint64_t> words);

    int width() const { return p_; }
    int height() const { return q_; }
    int edge_count() const { return 2 * p_ * q_; }
    int horizontal(int x, int y) const { return wrap_y(y) * p_ + wrap_x(x); }
    int vertical(int x, int y) const { return p_ * q_ + wrap_y(y) * p_ + wrap_x(x); }
    Color color(int e) const {
        return ((words_[e >> 6] >> (e & 63)) & 1U) ? Color::Blue : Color::Green;
    }
    std::span<const std::uint64_t> words() const { return words_; }

    static bool is_valid(int p, int q, std::span<const std::uint64_t> words);

    auto operator<=>(const TorusColoring&) const = default;

private:
    int wrap_x(int x) const { return ((x % p_) + p_) % p_; }
    int wrap_y(int y) const { return ((y % q_) + q_) % q_; }

    int p_;
    int q_;
    std::vector<std::uint64_t> words_;
};

TorusColoring torus_gyrate(const TorusColoring& t);
TorusColoring torus_sweep(const TorusColoring& t, Parity k);

/// Number of monochromatic cycles, both colors together.
int torus_cycle_count(const TorusColoring& t);

/// Every valid coloring of a small torus, by exhaustive filtering.
std::vector<TorusColoring> all_torus_colorings(int p, int q);

/// A seeded random valid coloring: random alternating-cycle flips starting
/// from horizontal edges blue, vertical edges green.
TorusColoring random_torus_coloring(int p, int q, std::mt19937_64& rng);

}  // namespace asmgyr
