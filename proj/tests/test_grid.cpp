#include <functional>
#include <set>

#include "asmgyr/enumeration.hpp"
#include "asmgyr/grid.hpp"
#include "asmgyr/paths.hpp"
#include "doctest.h"

using namespace asmgyr;

namespace {

// Direct reading of the definition: partial sums along every row and column
// stay in {0,1} and the totals are 1.
bool oracle_is_asm(int n, const std::vector<std::int8_t>& e) {
    for (int i = 0; i < n; ++i) {
        int row = 0;
        int col = 0;
        for (int j = 0; j < n; ++j) {
            row += e[i * n + j];
            col += e[j * n + i];
            if (row < 0 || row > 1 || col < 0 || col > 1) return false;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

std::set<Asm> as_set(const std::vector<Asm>& v) { return {v.begin(), v.end()}; }

// Interior edges: both ends interior.
std::vector<int> interior_edges(int n) {
    const GridGeometry& g = geometry(n);
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.ends(e);
        if (g.is_interior(a) && g.is_interior(b)) out.push_back(e);
    }
    return out;
}

// Domain-wall boundary: horizontal boundary edges point inward, vertical
// ones outward.
bool boundary_forward(int n, int e) {
    const GridGeometry& g = geometry(n);
    const auto [a, b] = g.ends(e);
    if (g.is_horizontal(e)) return a.x == 0;
    return b.y == n + 1;
}

int in_degree(const GridGeometry& g, const std::vector<bool>& fwd, Vertex v) {
    int in = 0;
    for (int e : g.incident(v)) {
        if (e == kNoEdge) continue;
        const auto [a, b] = g.ends(e);
        if ((fwd[e] && b == v) || (!fwd[e] && a == v)) ++in;
    }
    return in;
}

}  // namespace

TEST_CASE("brute force over {-1,0,1} matrices finds exactly A_n") {
    for (int n = 1; n <= 3; ++n) {
        const int cells = n * n;
        int total = 1;
        for (int i = 0; i < cells; ++i) total *= 3;
        std::set<Asm> found;
        for (int code = 0; code < total; ++code) {
            std::vector<std::int8_t> e(cells);
            int c = code;
            for (int i = 0; i < cells; ++i, c /= 3) e[i] = static_cast<std::int8_t>(c % 3 - 1);
            CHECK(Asm::is_valid(n, e) == oracle_is_asm(n, e));
            if (oracle_is_asm(n, e)) found.insert(Asm(n, e));
        }
        CHECK(found == as_set(all_asms(n)));
    }
}

TEST_CASE("brute force over ice orientations matches A_n") {
    for (int n = 2; n <= 3; ++n) {
        const GridGeometry& g = geometry(n);
        const auto inner = interior_edges(n);
        std::set<Asm> found;
        for (std::uint32_t mask = 0; mask < (1U << inner.size()); ++mask) {
            std::vector<bool> fwd(g.edge_count());
            for (int e = 0; e < g.edge_count(); ++e) fwd[e] = boundary_forward(n, e);
            for (std::size_t i = 0; i < inner.size(); ++i) fwd[inner[i]] = (mask >> i) & 1U;
            bool ok = true;
            for (int y = 1; y <= n && ok; ++y) {
                for (int x = 1; x <= n && ok; ++x) ok = in_degree(g, fwd, {x, y}) == 2;
            }
            if (!ok) continue;
            const IceOrientation ice(n, fwd);
            const Asm a = ice_to_asm(ice);
            CHECK(found.insert(a).second);
            CHECK(asm_to_ice(a) == ice);
        }
        CHECK(found == as_set(all_asms(n)));
    }
}

TEST_CASE("brute force over height functions matches A_n") {
    for (int n = 1; n <= 4; ++n) {
        std::vector<int> h((n + 1) * (n + 1));
        auto at = [&](int r, int c) -> int& { return h[r * (n + 1) + c]; };
        for (int i = 0; i <= n; ++i) {
            at(0, i) = i;
            at(i, 0) = i;
            at(n, i) = n - i;
            at(i, n) = n - i;
        }
        std::set<Asm> found;
        const int free = (n - 1) * (n - 1);
        std::function<void(int)> fill = [&](int cell) {
            if (cell == free) {
                // Right and bottom neighbours of the last free row/column.
                for (int r = 1; r < n; ++r) {
                    if (std::abs(at(r, n - 1) - at(r, n)) != 1) return;
                    if (std::abs(at(n - 1, r) - at(n, r)) != 1) return;
                }
                const HeightFunction hf(n, h);
                CHECK(found.insert(height_to_asm(hf)).second);
                CHECK(asm_to_height(height_to_asm(hf)) == hf);
                return;
            }
            const int r = 1 + cell / (n - 1);
            const int c = 1 + cell % (n - 1);
            for (int v = 0; v <= n; ++v) {
                if (std::abs(v - at(r - 1, c)) != 1 || std::abs(v - at(r, c - 1)) != 1) continue;
                at(r, c) = v;
                fill(cell + 1);
            }
        };
        fill(0);
        CHECK(found == as_set(all_asms(n)));
    }
}

TEST_CASE("brute force over edge colorings matches A_n") {
    // Endpoint colors from the rule: an edge directed from an odd vertex to
    // an even vertex is blue.
    for (int n = 1; n <= 3; ++n) {
        const GridGeometry& g = geometry(n);
        const auto inner = interior_edges(n);
        std::vector<std::uint64_t> base(word_count(g.edge_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto [a, b] = g.ends(e);
            if (g.is_interior(a) && g.is_interior(b)) continue;
            const Vertex tail = boundary_forward(n, e) ? a : b;
            if ((tail.x + tail.y) % 2 == 1) base[e / 64] |= 1ULL << (e % 64);
        }
        std::set<Asm> found;
        for (std::uint32_t mask = 0; mask < (1U << inner.size()); ++mask) {
            auto w = base;
            for (std::size_t i = 0; i < inner.size(); ++i) {
                if ((mask >> i) & 1U) w[inner[i] / 64] |= 1ULL << (inner[i] % 64);
            }
            bool ok = true;
            for (int y = 1; y <= n && ok; ++y) {
                for (int x = 1; x <= n && ok; ++x) {
                    int blue = 0;
                    for (int e : g.incident({x, y})) blue += (w[e / 64] >> (e % 64)) & 1U;
                    ok = blue == 2;
                }
            }
            CHECK(EdgeColoring::is_valid(n, w, Boundary::Standard) == ok);
            if (!ok) continue;
            const EdgeColoring c(n, w, Boundary::Standard);
            CHECK(found.insert(coloring_to_asm(c)).second);
            CHECK(asm_to_coloring(coloring_to_asm(c)) == c);
        }
        CHECK(found == as_set(all_asms(n)));
    }
}

TEST_CASE("round trips are exact on A_n for n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const Asm& a : all_asms(n)) {
            const IceOrientation ice = asm_to_ice(a);
            CHECK(ice_to_asm(ice) == a);
            const EdgeColoring c = ice_to_coloring(ice);
            CHECK(c == asm_to_coloring(a));
            CHECK(coloring_to_ice(c) == ice);
            CHECK(coloring_to_asm(c) == a);
            CHECK(height_to_asm(asm_to_height(a)) == a);
        }
    }
}

TEST_CASE("height boundary values") {
    const HeightFunction h = asm_to_height(Asm::identity(4));
    for (int i = 0; i <= 4; ++i) {
        CHECK(h.at(0, i) == i);
        CHECK(h.at(i, 0) == i);
        CHECK(h.at(4, i) == 4 - i);
        CHECK(h.at(i, 4) == 4 - i);
    }
    CHECK(HeightFunction::square_of_entry(4, 1, 2) == SquareRef{2, 3});
}

TEST_CASE("constructors reject invalid configurations") {
    CHECK_THROWS_AS(Asm(2, {1, 1, 0, 0}), InvalidConfiguration);
    CHECK_THROWS_AS(Asm(2, {1, 0, 0}), InvalidConfiguration);
    CHECK_THROWS_AS(Asm(3, {0, 1, 0, 1, 0, 0, 0, 1, 0}), InvalidConfiguration);
    CHECK_THROWS_AS(Asm(3, {-1, 1, 1, 1, 0, 0, 1, 0, 0}), InvalidConfiguration);

    const GridGeometry& g = geometry(2);
    std::vector<bool> all_forward(g.edge_count(), true);
    CHECK_THROWS_AS(IceOrientation(2, all_forward), InvalidConfiguration);

    std::vector<std::uint64_t> words(word_count(g.edge_count()), 0);
    CHECK_THROWS_AS(EdgeColoring(2, words, Boundary::Standard), InvalidConfiguration);
    auto high = asm_to_coloring(Asm::identity(2)).words();
    std::vector<std::uint64_t> padded(high.begin(), high.end());
    padded[0] |= 1ULL << 63;
    CHECK_THROWS_AS(EdgeColoring(2, padded, Boundary::Standard), InvalidConfiguration);

    CHECK_THROWS_AS(HeightFunction(2, {0, 1, 2, 1, 1, 1, 2, 1, 0}), InvalidConfiguration);

    const EdgeColoring c = asm_to_coloring(Asm::identity(3));
    std::vector<std::uint64_t> reversed(c.words().begin(), c.words().end());
    CHECK_FALSE(EdgeColoring::is_valid(3, reversed, Boundary::Reversed));
}

TEST_CASE("geometry indexing") {
    const int n = 3;
    const GridGeometry& g = geometry(n);
    CHECK(g.edge_count() == 24);
    CHECK(g.horizontal(0, 1) == 0);
    CHECK(g.vertical(1, 0) == n * (n + 1));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.ends(e);
        if (g.is_horizontal(e)) {
            CHECK(b == Vertex{a.x + 1, a.y});
            CHECK(g.horizontal(a.x, a.y) == e);
        } else {
            CHECK(b == Vertex{a.x, a.y + 1});
            CHECK(g.vertical(a.x, a.y) == e);
        }
    }
    CHECK(g.boundary_cycle().size() == 4U * n);
    CHECK(g.boundary_cycle().front() == Vertex{0, 1});
}

TEST_CASE("n=3 blue endpoints in label order") {
    const auto& lab = label_endpoints(3);
    const std::vector<Vertex> expected{{0, 1}, {0, 3}, {2, 4}, {4, 3}, {4, 1}, {2, 0}};
    CHECK(lab.blue == expected);
    for (std::size_t i = 0; i < lab.blue.size(); ++i) CHECK(lab.green[i] == Vertex{lab.blue[i].y, lab.blue[i].x});
    const EdgeColoring c = asm_to_coloring(Asm::identity(3));
    const GridGeometry& g = geometry(3);
    for (const Vertex v : lab.blue) CHECK(c.color(g.endpoint_edge(v)) == Color::Blue);
    for (const Vertex v : lab.green) CHECK(c.color(g.endpoint_edge(v)) == Color::Green);
}
