#include "asmgyr/gyration.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "asmgyr/kernels.hpp"

namespace asmgyr {

namespace kernel {

const SweepPlan& plan(int n) {
    const GridGeometry& g = geometry(n);
    static std::array<std::once_flag, kMaxOrder + 1> once;
    static std::array<std::unique_ptr<SweepPlan>, kMaxOrder + 1> cache;
    std::call_once(once[n], [&g, n] {
        auto p = std::make_unique<SweepPlan>();
        p->n = n;
        for (int j = 0; j <= n; ++j) {
            for (int i = 0; i <= n; ++i) {
                const SquareRef s{i, j};
                const auto& e = g.square(s);
                const std::array<int, 4> quad{e.bottom, e.top, e.left, e.right};
                const int k = static_cast<int>(s.parity());
                p->all[k].push_back(quad);
                if (s.interior(n)) p->interior[k].push_back(quad);
            }
        }
        p->valid_mask.assign(word_count(g.edge_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e) p->valid_mask[e >> 6] |= std::uint64_t{1} << (e & 63);
        cache[n] = std::move(p);
    });
    return *cache[n];
}

void g_sweep(Words w, const SweepPlan& p, Parity k) {
    for (const auto& sq : p.interior[static_cast<int>(k)]) local_g(w, sq);
}

void h_sweep(Words w, const SweepPlan& p, Parity k) {
    for (const auto& sq : p.all[static_cast<int>(k)]) local_h(w, sq);
}

void reverse(Words w, const SweepPlan& p) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] ^= p.valid_mask[i];
}

}  // namespace kernel

namespace {

std::vector<std::uint64_t> copy_words(const EdgeColoring& c) {
    return {c.words().begin(), c.words().end()};
}

}  // namespace

EdgeColoring g_local(const EdgeColoring& c, SquareRef s) {
    if (!s.interior(c.order())) return c;
    const auto& e = geometry(c.order()).square(s);
    auto w = copy_words(c);
    kernel::local_g(w, {e.bottom, e.top, e.left, e.right});
    return coloring_from_trusted(c.order(), std::move(w), c.boundary());
}

EdgeColoring g_sweep(const EdgeColoring& c, Parity k) {
    auto w = copy_words(c);
    kernel::g_sweep(w, kernel::plan(c.order()), k);
    return coloring_from_trusted(c.order(), std::move(w), c.boundary());
}

EdgeColoring reverse_colors(const EdgeColoring& c) {
    auto w = copy_words(c);
    kernel::reverse(w, kernel::plan(c.order()));
    return coloring_from_trusted(c.order(), std::move(w), toggled(c.boundary()));
}

EdgeColoring h_sweep(const EdgeColoring& c, Parity k) {
    auto w = copy_words(c);
    kernel::h_sweep(w, kernel::plan(c.order()), k);
    return coloring_from_trusted(c.order(), std::move(w), toggled(c.boundary()));
}

EdgeColoring reflect_d(const EdgeColoring& c) {
    const int n = c.order();
    const GridGeometry& g = geometry(n);
    std::vector<std::uint64_t> w(word_count(g.edge_count()), 0);
    for (int y = 1; y <= n; ++y) {
        for (int x = 0; x <= n; ++x) {
            const int h = g.horizontal(x, y);
            const int v = g.vertical(y, x);
            if (c.color(h) == Color::Blue) kernel::flip(w, v);
            if (c.color(v) == Color::Blue) kernel::flip(w, h);
        }
    }
    return coloring_from_trusted(n, std::move(w), toggled(c.boundary()));
}

EdgeColoring gyrate(const EdgeColoring& c) {
    auto w = copy_words(c);
    kernel::gyrate(w, kernel::plan(c.order()));
    return coloring_from_trusted(c.order(), std::move(w), c.boundary());
}

EdgeColoring gyrate_inverse(const EdgeColoring& c) {
    auto w = copy_words(c);
    kernel::gyrate_inverse(w, kernel::plan(c.order()));
    return coloring_from_trusted(c.order(), std::move(w), c.boundary());
}

Asm gyrate(const Asm& a) { return coloring_to_asm(gyrate(asm_to_coloring(a))); }

Asm gyrate_inverse(const Asm& a) { return coloring_to_asm(gyrate_inverse(asm_to_coloring(a))); }

Asm dihedral_generator(const Asm& a, Parity which) {
    return coloring_to_asm(h_sweep(reflect_d(asm_to_coloring(a)), which));
}

Asm rotate_pi(const Asm& a) {
    const int n = a.order();
    std::vector<std::int8_t> e(a.entries().rbegin(), a.entries().rend());
    return asm_from_trusted(n, std::move(e));
}

HeightFunction height_sweep(const HeightFunction& h, Parity k) {
    const int n = h.order();
    const int m = n + 1;
    std::vector<int> e(h.entries().begin(), h.entries().end());
    for (int r = 1; r < n; ++r) {
        for (int c = 1; c < n; ++c) {
            if (HeightFunction::square_of_entry(n, r, c).parity() != k) continue;
            // Neighbours of a parity-k entry all have the other parity, so
            // in-place updates cannot interfere.
            const int up = e[(r - 1) * m + c];
            if (e[(r + 1) * m + c] == up && e[r * m + c - 1] == up && e[r * m + c + 1] == up) {
                e[r * m + c] = 2 * up - e[r * m + c];
            }
        }
    }
    return HeightFunction(n, std::move(e));
}

HeightFunction gyrate_height(const HeightFunction& h) {
    return height_sweep(height_sweep(h, Parity::Odd), Parity::Even);
}

std::vector<int> fixed_vertices(const EdgeColoring& c, Parity k) {
    const int n = c.order();
    const GridGeometry& g = geometry(n);
    std::vector<int> out;
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            std::array<SquareRef, 2> sq{};
            int found = 0;
            for (int e : g.incident({x, y})) {
                if (c.color(e) == Color::Blue && found < 2) sq[found++] = g.square_of(e, k);
            }
            if (found == 2 && sq[0] != sq[1]) out.push_back(g.vertex_id({x, y}));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace asmgyr
