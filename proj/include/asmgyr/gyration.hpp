#pragma once

// Gyration and its pieces on ASM colorings: the local involutions G_S, the
// parity sweeps G_0 (even squares) and G_1 (odd squares), color reversal R,
// the half-steps H_k = R G_k through the color-reversed boundary, the
// diagonal reflection d, and the two dihedral generators H_1 d and H_0 d.

#include "asmgyr/grid.hpp"

namespace asmgyr {

/// Identity on boundary squares and on interior squares whose edges do not
/// alternate; otherwise all four colors flip.
EdgeColoring g_local(const EdgeColoring& c, SquareRef s);

/// Composition of g_local over every square of parity k (row-major).
EdgeColoring g_sweep(const EdgeColoring& c, Parity k);

EdgeColoring reverse_colors(const EdgeColoring& c);

/// Reverse every edge of each parity-k square except interior alternating
/// ones. Equal to reverse_colors(g_sweep(c, k)); toggles the boundary.
EdgeColoring h_sweep(const EdgeColoring& c, Parity k);

/// Reflection across y = x. Toggles the boundary.
EdgeColoring reflect_d(const EdgeColoring& c);

/// G = G_0 G_1 on a standard coloring.
EdgeColoring gyrate(const EdgeColoring& c);
EdgeColoring gyrate_inverse(const EdgeColoring& c);

Asm gyrate(const Asm& a);
Asm gyrate_inverse(const Asm& a);

/// Odd: H_1 d. Even: H_0 d. Both are involutions on A_n, and
/// gyrate = dihedral_generator(., Even) o dihedral_generator(., Odd).
Asm dihedral_generator(const Asm& a, Parity which);

/// 180 degree rotation of the matrix.
Asm rotate_pi(const Asm& a);

/// Flip sweep on the height function: an interior entry whose four
/// neighbours share the value v becomes 2v - h. Odd squares first, then
/// even squares, as in gyrate.
HeightFunction gyrate_height(const HeightFunction& h);
HeightFunction height_sweep(const HeightFunction& h, Parity k);

/// Interior vertices whose two blue edges lie in distinct parity-k squares,
/// as sorted vertex ids.
std::vector<int> fixed_vertices(const EdgeColoring& c, Parity k);

}  // namespace asmgyr
