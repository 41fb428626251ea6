#include "asmgyr/torus.hpp"

#include <numeric>
#include <stdexcept>

#include "asmgyr/kernels.hpp"

namespace asmgyr {

namespace {

std::size_t torus_words(int p, int q) { return word_count(2 * p * q); }

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Vertex ids of the two ends of edge e on a p x q torus.
std::pair<int, int> torus_ends(int p, int q, int e) {
    if (e < p * q) {
        const int x = e % p;
        const int y = e / p;
        return {y * p + x, y * p + (x + 1) % p};
    }
    const int k = e - p * q;
    const int x = k % p;
    const int y = k / p;
    return {y * p + x, ((y + 1) % q) * p + x};
}

}  // namespace

bool TorusColoring::is_valid(int p, int q, std::span<const std::uint64_t> words) {
    if (p < 2 || q < 2 || p % 2 != 0 || q % 2 != 0) return false;
    const int edges = 2 * p * q;
    if (words.size() != torus_words(p, q)) return false;
    if (edges % 64 != 0 && (words.back() >> (edges % 64)) != 0) return false;
    std::vector<int> blue(static_cast<std::size_t>(p) * q, 0);
    for (int e = 0; e < edges; ++e) {
        if (!kernel::bit(words, e)) continue;
        const auto [a, b] = torus_ends(p, q, e);
        ++blue[a];
        ++blue[b];
    }
    for (int d : blue) {
        if (d != 2) return false;
    }
    return true;
}

TorusColoring::TorusColoring(int p, int q, std::vector<std::uint64_t> words)
    : p_(p), q_(q), words_(std::move(words)) {
    if (p_ < 2 || q_ < 2 || p_ % 2 != 0 || q_ % 2 != 0) {
        throw InvalidConfiguration("torus dimensions must both be even and at least 2");
    }
    if (!is_valid(p_, q_, words_)) throw InvalidConfiguration("not a valid torus coloring");
}

TorusColoring torus_sweep(const TorusColoring& t, Parity k) {
    std::vector<std::uint64_t> w(t.words().begin(), t.words().end());
    for (int j = 0; j < t.height(); ++j) {
        for (int i = 0; i < t.width(); ++i) {
            if (((i + j) & 1) != static_cast<int>(k)) continue;
            kernel::local_g(w, {t.horizontal(i, j), t.horizontal(i, j + 1), t.vertical(i, j),
                                t.vertical(i + 1, j)});
        }
    }
    return TorusColoring(t.width(), t.height(), std::move(w));
}

TorusColoring torus_gyrate(const TorusColoring& t) {
    return torus_sweep(torus_sweep(t, Parity::Odd), Parity::Even);
}

int torus_cycle_count(const TorusColoring& t) {
    const int p = t.width();
    const int q = t.height();
    int total = 0;
    for (Color color : {Color::Blue, Color::Green}) {
        Dsu dsu(p * q);
        for (int e = 0; e < t.edge_count(); ++e) {
            if (t.color(e) != color) continue;
            const auto [a, b] = torus_ends(p, q, e);
            dsu.unite(a, b);
        }
        for (int v = 0; v < p * q; ++v) total += dsu.find(v) == v ? 1 : 0;
    }
    return total;
}

std::vector<TorusColoring> all_torus_colorings(int p, int q) {
    const int edges = 2 * p * q;
    if (edges > 32) throw std::invalid_argument("torus too large for exhaustive listing");
    std::vector<TorusColoring> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges); ++mask) {
        std::vector<std::uint64_t> w{mask};
        if (TorusColoring::is_valid(p, q, w)) out.emplace_back(p, q, std::move(w));
    }
    return out;
}

TorusColoring random_torus_coloring(int p, int q, std::mt19937_64& rng) {
    if (p < 2 || q < 2 || p % 2 != 0 || q % 2 != 0) {
        throw InvalidConfiguration("torus dimensions must both be even and at least 2");
    }
    const int vertices = p * q;
    const int edges = 2 * p * q;
    // Start from horizontal edges blue, vertical green, then flip random
    // alternating cycles. Any two valid colorings differ by a disjoint union
    // of alternating cycles, so every valid coloring is reachable.
    std::vector<std::uint64_t> w(torus_words(p, q), 0);
    for (int e = 0; e < p * q; ++e) kernel::flip(w, e);

    std::vector<std::array<int, 4>> incident(vertices);
    {
        std::vector<int> fill(vertices, 0);
        for (int e = 0; e < edges; ++e) {
            const auto [a, b] = torus_ends(p, q, e);
            incident[a][fill[a]++] = e;
            incident[b][fill[b]++] = e;
        }
    }
    auto other_end = [&](int e, int v) {
        const auto [a, b] = torus_ends(p, q, e);
        return a == v ? b : a;
    };
    std::uniform_int_distribution<int> pick_vertex(0, vertices - 1);
    std::bernoulli_distribution coin(0.5);

    std::vector<int> position(vertices, -1);  // index of a vertex on the walk
    std::vector<int> walk;                     // vertices
    std::vector<int> steps;                    // edges, steps[i] leaves walk[i]
    for (int round = 0; round < 20 * vertices; ++round) {
        const int start = pick_vertex(rng);
        walk.assign(1, start);
        steps.clear();
        position[start] = 0;
        bool need_blue = coin(rng);
        while (true) {
            const int v = walk.back();
            std::array<int, 2> options{};
            int count = 0;
            for (int e : incident[v]) {
                if (kernel::bit(w, e) == need_blue && count < 2) options[count++] = e;
            }
            const int e = options[coin(rng) ? 1 : 0];
            const int u = other_end(e, v);
            if (position[u] < 0) {
                steps.push_back(e);
                position[u] = static_cast<int>(walk.size());
                walk.push_back(u);
                need_blue = !need_blue;
                continue;
            }
            // The torus is bipartite, so the closed walk has even length and
            // alternates in color at u as well.
            for (std::size_t k = position[u]; k < steps.size(); ++k) kernel::flip(w, steps[k]);
            kernel::flip(w, e);
            break;
        }
        for (int v : walk) position[v] = -1;
    }
    return TorusColoring(p, q, std::move(w));
}

}  // namespace asmgyr
