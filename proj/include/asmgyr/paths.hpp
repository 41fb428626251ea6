#pragma once

// Monochromatic paths and cycles of a coloring, endpoint labels, the induced
// pairings and the (blue pairing, green pairing, cycle count) statistic.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asmgyr/grid.hpp"

namespace asmgyr {

/// Fixed-point-free involution on labels 1..2n. partner()[i-1] is the
/// partner of label i.
class Pairing {
public:
    explicit Pairing(std::vector<int> partner);

    int size() const { return static_cast<int>(partner_.size()); }
    int partner(int label) const { return partner_[label - 1]; }
    const std::vector<int>& partners() const { return partner_; }

    /// No two pairs {a,b}, {c,d} interleave around the circle of labels.
    bool noncrossing() const;

    /// Partner array as comma-separated labels, e.g. "2,1,4,3".
    std::string to_string() const;
    static Pairing parse(const std::string& text);

    auto operator<=>(const Pairing&) const = default;

private:
    std::vector<int> partner_;
};

/// Blue labels run clockwise from (0,1) over the blue endpoints; green label
/// i sits at the mirror image across y = x of blue label i.
struct EndpointLabeling {
    int n = 0;
    std::vector<Vertex> blue;   // blue[i-1] = position of blue label i
    std::vector<Vertex> green;  // green[i-1] = position of green label i
    std::vector<int> label_at;  // vertex id -> label of that endpoint, 0 if none
};

const EndpointLabeling& label_endpoints(int n);

struct ColorTrace {
    /// Pairs of endpoint vertex ids joined by paths of the traced color.
    std::vector<std::pair<int, int>> paths;
    int cycles = 0;
    /// Vertex id -> component id (smallest vertex id in the component);
    /// -1 for corner ids, which are not vertices of L_n.
    std::vector<int> component;
};

/// Decompose the subgraph of one color into paths, cycles and isolated
/// endpoints of the other color.
ColorTrace trace_color(const EdgeColoring& c, Color color);

struct PairingStats {
    Pairing blue;
    Pairing green;
    int cycles = 0;

    auto operator<=>(const PairingStats&) const = default;
};

/// Pairing by labels for the paths of one color. Each endpoint carries the
/// label of whichever label set sits there, so on a reversed coloring the
/// blue paths are read in green labels and vice versa.
Pairing pairing_of(int n, const ColorTrace& trace);

PairingStats statistics(const EdgeColoring& c);
PairingStats statistics(const Asm& a);

/// i -> i + delta, taken mod 2n into 1..2n.
Pairing shift_pairing(const Pairing& p, int delta);

/// Dihedral element on labels 1..2n: optional reflection i -> 2n+1-i first,
/// then rotation by `rotation`.
struct DihedralElement {
    int rotation = 0;
    bool reflect = false;

    int apply(int label, int two_n) const;
};

Pairing apply_dihedral(const Pairing& p, DihedralElement s);

/// D_2n as generated by i -> 2n+1-i and i -> 2n+2-i (mod 2n), listed in
/// breadth-first order from the identity.
std::vector<DihedralElement> dihedral_group(int n);

}  // namespace asmgyr
