#include "asmgyr/grid.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <string>

namespace asmgyr {

namespace {

bool lower_vertex_even(Vertex v) { return ((v.x + v.y) & 1) == 0; }

void set_bit(std::vector<std::uint64_t>& words, int e) { words[e >> 6] |= std::uint64_t{1} << (e & 63); }

}  // namespace

GridGeometry::GridGeometry(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    squares_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            SquareEdges& s = squares_[i * (n + 1) + j];
            if (j >= 1) s.bottom = horizontal(i, j);
            if (j + 1 <= n) s.top = horizontal(i, j + 1);
            if (i >= 1) s.left = vertical(i, j);
            if (i + 1 <= n) s.right = vertical(i + 1, j);
        }
    }
    for (int y = 1; y <= n; ++y) boundary_.push_back({0, y});
    for (int x = 1; x <= n; ++x) boundary_.push_back({x, n + 1});
    for (int y = n; y >= 1; --y) boundary_.push_back({n + 1, y});
    for (int x = n; x >= 1; --x) boundary_.push_back({x, 0});
}

bool GridGeometry::is_endpoint(Vertex v) const {
    const bool x_side = (v.x == 0 || v.x == n_ + 1) && v.y >= 1 && v.y <= n_;
    const bool y_side = (v.y == 0 || v.y == n_ + 1) && v.x >= 1 && v.x <= n_;
    return x_side || y_side;
}

std::pair<Vertex, Vertex> GridGeometry::ends(int e) const {
    if (is_horizontal(e)) {
        const int x = e % (n_ + 1);
        const int y = e / (n_ + 1) + 1;
        return {{x, y}, {x + 1, y}};
    }
    const int k = e - horizontal_count();
    const int x = k / (n_ + 1) + 1;
    const int y = k % (n_ + 1);
    return {{x, y}, {x, y + 1}};
}

std::array<int, 4> GridGeometry::incident(Vertex v) const {
    std::array<int, 4> out{kNoEdge, kNoEdge, kNoEdge, kNoEdge};
    if (v.y >= 1 && v.y <= n_) {
        if (v.x >= 1 && v.x <= n_ + 1) out[0] = horizontal(v.x - 1, v.y);
        if (v.x >= 0 && v.x <= n_) out[1] = horizontal(v.x, v.y);
    }
    if (v.x >= 1 && v.x <= n_) {
        if (v.y >= 1 && v.y <= n_ + 1) out[2] = vertical(v.x, v.y - 1);
        if (v.y >= 0 && v.y <= n_) out[3] = vertical(v.x, v.y);
    }
    return out;
}

int GridGeometry::endpoint_edge(Vertex v) const {
    if (v.x == 0) return horizontal(0, v.y);
    if (v.x == n_ + 1) return horizontal(n_, v.y);
    if (v.y == 0) return vertical(v.x, 0);
    return vertical(v.x, n_);
}

SquareRef GridGeometry::square_of(int e, Parity p) const {
    const auto [a, b] = ends(e);
    SquareRef first{a.x, a.y};
    SquareRef second = is_horizontal(e) ? SquareRef{a.x, a.y - 1} : SquareRef{a.x - 1, a.y};
    return first.parity() == p ? first : second;
}

Color GridGeometry::endpoint_color(Vertex v) const {
    // Forced orientation: horizontal boundary edges point inward, vertical
    // ones outward; blue iff the edge leaves an odd vertex.
    if (v.x == 0) return (v.y & 1) ? Color::Blue : Color::Green;
    if (v.x == n_ + 1) return ((n_ + v.y) & 1) == 0 ? Color::Blue : Color::Green;
    if (v.y == 0) return (v.x & 1) == 0 ? Color::Blue : Color::Green;
    return ((v.x + n_) & 1) ? Color::Blue : Color::Green;
}

const GridGeometry& geometry(int n) {
    if (n < 1 || n > kMaxOrder) {
        throw std::invalid_argument("order " + std::to_string(n) + " outside 1.." +
                                    std::to_string(kMaxOrder));
    }
    static std::array<std::once_flag, kMaxOrder + 1> once;
    static std::array<std::unique_ptr<GridGeometry>, kMaxOrder + 1> cache;
    std::call_once(once[n], [n] { cache[n] = std::make_unique<GridGeometry>(n); });
    return *cache[n];
}

// ---------------------------------------------------------------------------

bool Asm::is_valid(int n, std::span<const std::int8_t> entries) {
    if (n < 1 || entries.size() != static_cast<std::size_t>(n) * n) return false;
    for (auto v : entries) {
        if (v < -1 || v > 1) return false;
    }
    // Partial sums stay in {0,1} and end at 1 exactly when the nonzeros
    // alternate starting and ending with +1.
    for (int r = 0; r < n; ++r) {
        int sum = 0;
        for (int c = 0; c < n; ++c) {
            sum += entries[r * n + c];
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    for (int c = 0; c < n; ++c) {
        int sum = 0;
        for (int r = 0; r < n; ++r) {
            sum += entries[r * n + c];
            if (sum < 0 || sum > 1) return false;
        }
        if (sum != 1) return false;
    }
    return true;
}

Asm::Asm(int n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries)) {
    if (!is_valid(n_, entries_)) throw InvalidConfiguration("not an alternating sign matrix");
}

Asm Asm::identity(int n) {
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = 1;
    return Asm(n, std::move(e));
}

Asm asm_from_trusted(int n, std::vector<std::int8_t> entries) {
    return Asm(n, std::move(entries), Asm::Trusted{});
}

// ---------------------------------------------------------------------------

IceOrientation::IceOrientation(int n, std::vector<bool> forward) : n_(n), forward_(std::move(forward)) {
    const GridGeometry& g = geometry(n_);
    if (forward_.size() != static_cast<std::size_t>(g.edge_count())) {
        throw InvalidConfiguration("orientation has wrong edge count");
    }
    for (int y = 1; y <= n_; ++y) {
        if (!forward_[g.horizontal(0, y)] || forward_[g.horizontal(n_, y)]) {
            throw InvalidConfiguration("horizontal boundary edge not directed inward");
        }
    }
    for (int x = 1; x <= n_; ++x) {
        if (forward_[g.vertical(x, 0)] || !forward_[g.vertical(x, n_)]) {
            throw InvalidConfiguration("vertical boundary edge not directed outward");
        }
    }
    for (int y = 1; y <= n_; ++y) {
        for (int x = 1; x <= n_; ++x) {
            int in = 0;
            for (int e : g.incident({x, y})) in += points_into(e, {x, y}) ? 1 : 0;
            if (in != 2) throw InvalidConfiguration("interior vertex without in-degree 2");
        }
    }
}

bool IceOrientation::points_into(int e, Vertex v) const {
    const auto [lo, hi] = geometry(n_).ends(e);
    return forward_[e] ? v == hi : v == lo;
}

// ---------------------------------------------------------------------------

bool EdgeColoring::is_valid(int n, std::span<const std::uint64_t> words, Boundary boundary) {
    const GridGeometry& g = geometry(n);
    const int edges = g.edge_count();
    if (words.size() != word_count(edges)) return false;
    if (edges % 64 != 0 && (words.back() >> (edges % 64)) != 0) return false;
    auto blue = [&](int e) { return ((words[e >> 6] >> (e & 63)) & 1U) != 0; };
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            int count = 0;
            for (int e : g.incident({x, y})) count += blue(e) ? 1 : 0;
            if (count != 2) return false;
        }
    }
    for (Vertex v : g.boundary_cycle()) {
        Color want = g.endpoint_color(v);
        if (boundary == Boundary::Reversed) want = opposite(want);
        if (blue(g.endpoint_edge(v)) != (want == Color::Blue)) return false;
    }
    return true;
}

EdgeColoring::EdgeColoring(int n, std::vector<std::uint64_t> words, Boundary boundary)
    : n_(n), boundary_(boundary), words_(std::move(words)) {
    if (!is_valid(n_, words_, boundary_)) throw InvalidConfiguration("not a valid edge coloring");
}

EdgeColoring coloring_from_trusted(int n, std::vector<std::uint64_t> words, Boundary boundary) {
    return EdgeColoring(n, std::move(words), boundary, EdgeColoring::Trusted{});
}

// ---------------------------------------------------------------------------

bool HeightFunction::is_valid(int n, std::span<const int> h) {
    const int m = n + 1;
    if (n < 1 || h.size() != static_cast<std::size_t>(m) * m) return false;
    for (int k = 0; k <= n; ++k) {
        if (h[k] != k || h[k * m] != k) return false;
        if (h[n * m + k] != n - k || h[k * m + n] != n - k) return false;
    }
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) {
            if (c < n && std::abs(h[r * m + c] - h[r * m + c + 1]) != 1) return false;
            if (r < n && std::abs(h[r * m + c] - h[(r + 1) * m + c]) != 1) return false;
        }
    }
    return true;
}

HeightFunction::HeightFunction(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
    if (!is_valid(n_, entries_)) throw InvalidConfiguration("not a valid height function");
}

// ---------------------------------------------------------------------------

IceOrientation asm_to_ice(const Asm& a) {
    const int n = a.order();
    const GridGeometry& g = geometry(n);
    std::vector<bool> fwd(g.edge_count());
    // Horizontal edges point right until the row's partial sum reaches 1;
    // vertical edges point up until the column's partial sum from the top
    // reaches 1.
    for (int r = 0; r < n; ++r) {
        const int y = n - r;
        int sum = 0;
        for (int x = 0; x <= n; ++x) {
            fwd[g.horizontal(x, y)] = (sum == 0);
            if (x < n) sum += a.at(r, x);
        }
    }
    for (int c = 0; c < n; ++c) {
        const int x = c + 1;
        int sum = 0;
        for (int y = n; y >= 0; --y) {
            fwd[g.vertical(x, y)] = (sum == 0);
            if (y >= 1) sum += a.at(n - y, c);
        }
    }
    return IceOrientation(n, std::move(fwd));
}

Asm ice_to_asm(const IceOrientation& o) {
    const int n = o.order();
    const GridGeometry& g = geometry(n);
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const auto inc = g.incident({x, y});
            const bool left_in = o.forward(inc[0]);
            const bool right_in = !o.forward(inc[1]);
            const bool down_out = !o.forward(inc[2]);
            const bool up_out = o.forward(inc[3]);
            std::int8_t v = 0;
            if (left_in && right_in && down_out && up_out) v = 1;
            else if (!left_in && !right_in && !down_out && !up_out) v = -1;
            e[(n - y) * n + (x - 1)] = v;
        }
    }
    return asm_from_trusted(n, std::move(e));
}

// Blue iff the edge leaves an odd vertex: color bit = forward XOR (lower
// vertex is even).
EdgeColoring ice_to_coloring(const IceOrientation& o) {
    const int n = o.order();
    const GridGeometry& g = geometry(n);
    std::vector<std::uint64_t> words(word_count(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (o.forward(e) != lower_vertex_even(g.ends(e).first)) set_bit(words, e);
    }
    return coloring_from_trusted(n, std::move(words), Boundary::Standard);
}

IceOrientation coloring_to_ice(const EdgeColoring& c) {
    if (c.boundary() != Boundary::Standard) {
        throw InvalidConfiguration("color-reversed boundary has no square-ice preimage");
    }
    const int n = c.order();
    const GridGeometry& g = geometry(n);
    std::vector<bool> fwd(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        fwd[e] = (c.color(e) == Color::Blue) != lower_vertex_even(g.ends(e).first);
    }
    return IceOrientation(n, std::move(fwd));
}

HeightFunction asm_to_height(const Asm& a) {
    const int n = a.order();
    const int m = n + 1;
    std::vector<int> sigma(static_cast<std::size_t>(m) * m, 0);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            sigma[r * m + c] = a.at(r - 1, c - 1) + sigma[(r - 1) * m + c] + sigma[r * m + c - 1] -
                               sigma[(r - 1) * m + c - 1];
        }
    }
    std::vector<int> h(sigma.size());
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) h[r * m + c] = r + c - 2 * sigma[r * m + c];
    }
    return HeightFunction(n, std::move(h));
}

Asm height_to_asm(const HeightFunction& h) {
    const int n = h.order();
    auto sigma = [&](int r, int c) { return (r + c - h.at(r, c)) / 2; };
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            e[r * n + c] = static_cast<std::int8_t>(sigma(r + 1, c + 1) - sigma(r, c + 1) -
                                                    sigma(r + 1, c) + sigma(r, c));
        }
    }
    return Asm(n, std::move(e));
}

EdgeColoring asm_to_coloring(const Asm& a) {
    const int n = a.order();
    const GridGeometry& g = geometry(n);
    std::vector<std::uint64_t> words(word_count(g.edge_count()), 0);
    for (int r = 0; r < n; ++r) {
        const int y = n - r;
        int sum = 0;
        for (int x = 0; x <= n; ++x) {
            if ((sum == 0) != (((x + y) & 1) == 0)) set_bit(words, g.horizontal(x, y));
            if (x < n) sum += a.at(r, x);
        }
    }
    for (int c = 0; c < n; ++c) {
        const int x = c + 1;
        int sum = 0;
        for (int y = n; y >= 0; --y) {
            if ((sum == 0) != (((x + y) & 1) == 0)) set_bit(words, g.vertical(x, y));
            if (y >= 1) sum += a.at(n - y, c);
        }
    }
    return coloring_from_trusted(n, std::move(words), Boundary::Standard);
}

Asm coloring_to_asm(const EdgeColoring& c) {
    if (c.boundary() != Boundary::Standard) {
        throw InvalidConfiguration("color-reversed boundary has no ASM preimage");
    }
    const int n = c.order();
    const GridGeometry& g = geometry(n);
    auto forward = [&](int e) {
        return (c.color(e) == Color::Blue) != lower_vertex_even(g.ends(e).first);
    };
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n, 0);
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const auto inc = g.incident({x, y});
            const bool left_right = forward(inc[0]);
            const bool right_right = forward(inc[1]);
            // Horizontal direction flips at +1 (right then left) and at -1.
            std::int8_t v = 0;
            if (left_right && !right_right) v = 1;
            else if (!left_right && right_right) v = -1;
            e[(n - y) * n + (x - 1)] = v;
        }
    }
    return asm_from_trusted(n, std::move(e));
}

}  // namespace asmgyr
