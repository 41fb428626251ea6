#include "asmgyr/paths.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace asmgyr {

Pairing::Pairing(std::vector<int> partner) : partner_(std::move(partner)) {
    const int m = static_cast<int>(partner_.size());
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("pairing needs an even positive label count");
    for (int i = 1; i <= m; ++i) {
        const int j = partner_[i - 1];
        if (j < 1 || j > m || j == i || partner_[j - 1] != i) {
            throw std::invalid_argument("partner array is not a fixed-point-free involution");
        }
    }
}

bool Pairing::noncrossing() const {
    const int m = size();
    for (int a = 1; a <= m; ++a) {
        const int b = partner(a);
        if (b < a) continue;
        for (int c = a + 1; c < b; ++c) {
            const int d = partner(c);
            if (d < a || d > b) return false;
        }
    }
    return true;
}

std::string Pairing::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < partner_.size(); ++i) out << (i ? "," : "") << partner_[i];
    return out.str();
}

Pairing Pairing::parse(const std::string& text) {
    std::vector<int> v;
    std::istringstream in(text);
    std::string field;
    while (std::getline(in, field, ',')) v.push_back(std::stoi(field));
    return Pairing(std::move(v));
}

const EndpointLabeling& label_endpoints(int n) {
    const GridGeometry& g = geometry(n);
    static std::array<std::once_flag, kMaxOrder + 1> once;
    static std::array<std::unique_ptr<EndpointLabeling>, kMaxOrder + 1> cache;
    std::call_once(once[n], [&g, n] {
        auto lab = std::make_unique<EndpointLabeling>();
        lab->n = n;
        lab->label_at.assign(g.vertex_id_count(), 0);
        for (Vertex v : g.boundary_cycle()) {
            if (g.endpoint_color(v) == Color::Blue) lab->blue.push_back(v);
        }
        for (std::size_t i = 0; i < lab->blue.size(); ++i) {
            const Vertex b = lab->blue[i];
            const Vertex mirror{b.y, b.x};
            lab->green.push_back(mirror);
            lab->label_at[g.vertex_id(b)] = static_cast<int>(i) + 1;
            lab->label_at[g.vertex_id(mirror)] = static_cast<int>(i) + 1;
        }
        cache[n] = std::move(lab);
    });
    return *cache[n];
}

ColorTrace trace_color(const EdgeColoring& c, Color color) {
    const int n = c.order();
    const GridGeometry& g = geometry(n);
    ColorTrace out;
    out.component.assign(g.vertex_id_count(), -1);

    // Follow the color from vertex `start` along edge `first`, marking every
    // vertex with the smallest id seen. Returns the last vertex reached.
    std::vector<int> walk;
    auto follow = [&](Vertex start, int first) {
        walk.assign(1, g.vertex_id(start));
        Vertex v = start;
        int via = first;
        while (true) {
            const auto [a, b] = g.ends(via);
            const Vertex u = (a == v) ? b : a;
            const int uid = g.vertex_id(u);
            if (uid == walk.front()) break;  // closed a cycle
            walk.push_back(uid);
            if (!g.is_interior(u)) break;
            int next = kNoEdge;
            for (int e : g.incident(u)) {
                if (e != via && c.color(e) == color) {
                    next = e;
                    break;
                }
            }
            v = u;
            via = next;
        }
        const int id = *std::min_element(walk.begin(), walk.end());
        for (int w : walk) out.component[w] = id;
        return walk.back();
    };

    for (Vertex v : g.boundary_cycle()) {
        const int vid = g.vertex_id(v);
        if (out.component[vid] >= 0) continue;
        const int e = g.endpoint_edge(v);
        if (c.color(e) != color) {
            out.component[vid] = vid;
            continue;
        }
        const int end = follow(v, e);
        out.paths.emplace_back(std::min(vid, end), std::max(vid, end));
    }
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x) {
            const Vertex v{x, y};
            if (out.component[g.vertex_id(v)] >= 0) continue;
            int first = kNoEdge;
            for (int e : g.incident(v)) {
                if (c.color(e) == color) {
                    first = e;
                    break;
                }
            }
            follow(v, first);
            ++out.cycles;
        }
    }
    std::sort(out.paths.begin(), out.paths.end());
    return out;
}

Pairing pairing_of(int n, const ColorTrace& trace) {
    const EndpointLabeling& lab = label_endpoints(n);
    std::vector<int> partner(2 * static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : trace.paths) {
        const int la = lab.label_at[a];
        const int lb = lab.label_at[b];
        partner[la - 1] = lb;
        partner[lb - 1] = la;
    }
    return Pairing(std::move(partner));
}

PairingStats statistics(const EdgeColoring& c) {
    const ColorTrace blue = trace_color(c, Color::Blue);
    const ColorTrace green = trace_color(c, Color::Green);
    return {pairing_of(c.order(), blue), pairing_of(c.order(), green), blue.cycles + green.cycles};
}

PairingStats statistics(const Asm& a) { return statistics(asm_to_coloring(a)); }

Pairing shift_pairing(const Pairing& p, int delta) {
    const int m = p.size();
    auto shift = [m, delta](int i) { return ((i - 1 + delta) % m + m) % m + 1; };
    std::vector<int> out(m);
    for (int i = 1; i <= m; ++i) out[shift(i) - 1] = shift(p.partner(i));
    return Pairing(std::move(out));
}

int DihedralElement::apply(int label, int two_n) const {
    const int reflected = reflect ? two_n + 1 - label : label;
    return ((reflected - 1 + rotation) % two_n + two_n) % two_n + 1;
}

Pairing apply_dihedral(const Pairing& p, DihedralElement s) {
    const int m = p.size();
    std::vector<int> out(m);
    for (int i = 1; i <= m; ++i) out[s.apply(i, m) - 1] = s.apply(p.partner(i), m);
    return Pairing(std::move(out));
}

std::vector<DihedralElement> dihedral_group(int n) {
    const int m = 2 * n;
    // Elements are normalized to rotation in [0, m); as permutations they
    // may coincide for m = 2, so closure runs over permutation images.
    auto image = [m](DihedralElement s) {
        std::vector<int> v(m);
        for (int i = 1; i <= m; ++i) v[i - 1] = s.apply(i, m);
        return v;
    };
    const std::array<DihedralElement, 2> gens{DihedralElement{0, true}, DihedralElement{1, true}};
    auto compose = [m](DihedralElement outer, DihedralElement inner) {
        // outer(inner(i)): reflections compose to a rotation.
        const bool reflect = outer.reflect != inner.reflect;
        const int r = outer.reflect ? outer.rotation - inner.rotation : outer.rotation + inner.rotation;
        return DihedralElement{((r % m) + m) % m, reflect};
    };
    std::vector<DihedralElement> group{DihedralElement{0, false}};
    std::set<std::vector<int>> seen{image(group.front())};
    for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto& gen : gens) {
            const DihedralElement next = compose(gen, group[head]);
            if (seen.insert(image(next)).second) group.push_back(next);
        }
    }
    return group;
}

}  // namespace asmgyr
