#pragma once

// Grid geometry L_n and the four equivalent encodings of an alternating sign
// matrix: the matrix itself, a square-ice orientation, a blue/green edge
// coloring and a corner-sum height function.
//
// Coordinates: vertex (x,y), x to the right, y upward. Interior vertices have
// 1 <= x,y <= n; endpoints have one coordinate in {0, n+1}. Matrix entry
// a(r,c) (row r from the top, column c from the left, both 0-based) sits on
// vertex (c+1, n-r).

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asmgyr {

class InvalidConfiguration : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Vertex {
    int x = 0;
    int y = 0;
    auto operator<=>(const Vertex&) const = default;
};

enum class Color : std::uint8_t { Green = 0, Blue = 1 };

constexpr Color opposite(Color c) { return c == Color::Blue ? Color::Green : Color::Blue; }

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

/// Which endpoint colors a coloring carries: the ASM convention, or the
/// color-reversed convention that appears between the two half-steps of
/// gyration.
enum class Boundary : std::uint8_t { Standard, Reversed };

constexpr Boundary toggled(Boundary b) {
    return b == Boundary::Standard ? Boundary::Reversed : Boundary::Standard;
}

/// Unit square with lower-left corner (i,j), 0 <= i,j <= n.
struct SquareRef {
    int i = 0;
    int j = 0;

    Parity parity() const { return ((i + j) & 1) ? Parity::Odd : Parity::Even; }
    bool interior(int n) const { return i >= 1 && j >= 1 && i <= n - 1 && j <= n - 1; }
    auto operator<=>(const SquareRef&) const = default;
};

inline constexpr int kNoEdge = -1;

/// Edge and vertex indexing for L_n.
///
/// Horizontal edge (x,y)-(x+1,y), 0 <= x <= n, 1 <= y <= n, has index
/// (y-1)(n+1)+x. Vertical edge (x,y)-(x,y+1), 1 <= x <= n, 0 <= y <= n, has
/// index n(n+1) + (x-1)(n+1) + y.
class GridGeometry {
public:
    struct SquareEdges {
        int bottom = kNoEdge;
        int top = kNoEdge;
        int left = kNoEdge;
        int right = kNoEdge;
    };

    explicit GridGeometry(int n);

    int order() const { return n_; }
    int edge_count() const { return 2 * n_ * (n_ + 1); }
    int horizontal_count() const { return n_ * (n_ + 1); }
    int interior_vertex_count() const { return n_ * n_; }
    int endpoint_count() const { return 4 * n_; }

    bool is_interior(Vertex v) const { return v.x >= 1 && v.y >= 1 && v.x <= n_ && v.y <= n_; }
    bool is_endpoint(Vertex v) const;

    int horizontal(int x, int y) const { return (y - 1) * (n_ + 1) + x; }
    int vertical(int x, int y) const { return horizontal_count() + (x - 1) * (n_ + 1) + y; }
    bool is_horizontal(int e) const { return e < horizontal_count(); }

    /// The two vertices of an edge, lower/left one first.
    std::pair<Vertex, Vertex> ends(int e) const;

    /// Incident edges of a vertex in the order left, right, down, up;
    /// absent edges are kNoEdge.
    std::array<int, 4> incident(Vertex v) const;

    /// The one edge incident to an endpoint.
    int endpoint_edge(Vertex v) const;

    /// Edges of S(i,j) that lie in L_n.
    const SquareEdges& square(SquareRef s) const { return squares_[s.i * (n_ + 1) + s.j]; }

    /// The square of the given parity that contains edge e.
    SquareRef square_of(int e, Parity p) const;

    /// Endpoints in clockwise order starting at (0,1): up the left side,
    /// across the top, down the right side, back along the bottom.
    const std::vector<Vertex>& boundary_cycle() const { return boundary_; }

    /// Dense vertex id on the (n+2)x(n+2) grid, used for component maps.
    int vertex_id(Vertex v) const { return v.y * (n_ + 2) + v.x; }
    Vertex vertex_at(int id) const { return {id % (n_ + 2), id / (n_ + 2)}; }
    int vertex_id_count() const { return (n_ + 2) * (n_ + 2); }

    /// Standard-boundary color of the edge at an endpoint, from the rule
    /// that edges directed odd to even are blue.
    Color endpoint_color(Vertex v) const;

private:
    int n_;
    std::vector<SquareEdges> squares_;
    std::vector<Vertex> boundary_;
};

inline constexpr int kMaxOrder = 64;

/// Shared immutable geometry per order, 1 <= n <= kMaxOrder.
const GridGeometry& geometry(int n);

class Asm {
public:
    /// Validates the alternating-sign condition in every row and column.
    Asm(int n, std::vector<std::int8_t> entries);

    static Asm identity(int n);

    int order() const { return n_; }
    int at(int r, int c) const { return entries_[r * n_ + c]; }
    std::span<const std::int8_t> entries() const { return entries_; }

    static bool is_valid(int n, std::span<const std::int8_t> entries);

    auto operator<=>(const Asm&) const = default;

private:
    struct Trusted {};
    Asm(int n, std::vector<std::int8_t> entries, Trusted) : n_(n), entries_(std::move(entries)) {}
    friend Asm asm_from_trusted(int n, std::vector<std::int8_t> entries);

    int n_;
    std::vector<std::int8_t> entries_;
};

/// Skips validation; for producers that construct valid matrices by design
/// (enumeration, conversions from validated representations).
Asm asm_from_trusted(int n, std::vector<std::int8_t> entries);

/// One bit per edge of L_n: horizontal edges 1 = points right, vertical
/// edges 1 = points up.
class IceOrientation {
public:
    IceOrientation(int n, std::vector<bool> forward);

    int order() const { return n_; }
    bool forward(int e) const { return forward_[e]; }
    const std::vector<bool>& bits() const { return forward_; }

    /// Whether edge e points into vertex v (v must be an end of e).
    bool points_into(int e, Vertex v) const;

    auto operator<=>(const IceOrientation&) const = default;

private:
    int n_;
    std::vector<bool> forward_;
};

/// Packed blue/green coloring of the edges of L_n (bit set = Blue).
class EdgeColoring {
public:
    /// Validates the 2-blue/2-green condition at interior vertices and the
    /// endpoint colors implied by `boundary`.
    EdgeColoring(int n, std::vector<std::uint64_t> words, Boundary boundary);

    int order() const { return n_; }
    Boundary boundary() const { return boundary_; }
    Color color(int e) const {
        return ((words_[e >> 6] >> (e & 63)) & 1U) ? Color::Blue : Color::Green;
    }
    std::span<const std::uint64_t> words() const { return words_; }

    static bool is_valid(int n, std::span<const std::uint64_t> words, Boundary boundary);

    auto operator<=>(const EdgeColoring&) const = default;

private:
    struct Trusted {};
    EdgeColoring(int n, std::vector<std::uint64_t> words, Boundary boundary, Trusted)
        : n_(n), boundary_(boundary), words_(std::move(words)) {}
    friend EdgeColoring coloring_from_trusted(int, std::vector<std::uint64_t>, Boundary);

    int n_;
    Boundary boundary_;
    std::vector<std::uint64_t> words_;
};

EdgeColoring coloring_from_trusted(int n, std::vector<std::uint64_t> words, Boundary boundary);

inline std::size_t word_count(int edges) { return (static_cast<std::size_t>(edges) + 63) / 64; }

/// Corner-sum height matrix, (n+1)x(n+1). Entry (r,c) lies on the face
/// between matrix rows r-1,r and columns c-1,c, which is the unit square
/// S(c, n-r). Boundary: h(0,c)=c, h(r,0)=r, h(n,c)=n-c, h(r,n)=n-r.
class HeightFunction {
public:
    HeightFunction(int n, std::vector<int> entries);

    int order() const { return n_; }
    int at(int r, int c) const { return entries_[r * (n_ + 1) + c]; }
    std::span<const int> entries() const { return entries_; }

    static SquareRef square_of_entry(int n, int r, int c) { return {c, n - r}; }
    static bool is_valid(int n, std::span<const int> entries);

    auto operator<=>(const HeightFunction&) const = default;

private:
    int n_;
    std::vector<int> entries_;
};

IceOrientation asm_to_ice(const Asm& a);
Asm ice_to_asm(const IceOrientation& o);
EdgeColoring ice_to_coloring(const IceOrientation& o);
/// Rejects colorings with reversed boundary; they have no ASM preimage.
IceOrientation coloring_to_ice(const EdgeColoring& c);
HeightFunction asm_to_height(const Asm& a);
Asm height_to_asm(const HeightFunction& h);

EdgeColoring asm_to_coloring(const Asm& a);
Asm coloring_to_asm(const EdgeColoring& c);

}  // namespace asmgyr
