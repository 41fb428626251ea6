#pragma once

// ASCII and SVG drawings of an ASM as a matrix, a square-ice orientation and
// a blue/green coloring. Blue edges are solid, green edges dashed.

#include <string>
#include <utility>

#include "asmgyr/grid.hpp"

namespace asmgyr::cli {

std::string render_matrix_ascii(const Asm& a);
std::string render_orientation_ascii(const IceOrientation& o);
std::string render_coloring_ascii(const EdgeColoring& c);

/// The three panels, one below the other, each under a title line.
std::string render_ascii(const Asm& a);

/// (row, column) in render_coloring_ascii output of the character that
/// distinguishes a solid edge from a dashed one.
std::pair<int, int> ascii_edge_cell(int n, int e);

/// The three panels side by side as a standalone SVG document.
std::string render_svg(const Asm& a);

}  // namespace asmgyr::cli
