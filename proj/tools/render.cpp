#include "render.hpp"

#include <sstream>
#include <vector>

namespace asmgyr::cli {

namespace {

// Vertex (x,y) sits at row 2(n+1-y), column 4x.
struct Canvas {
    explicit Canvas(int n) : n(n), rows(2 * (n + 1) + 1, std::string(4 * (n + 1) + 1, ' ')) {}

    int row(int y) const { return 2 * (n + 1 - y); }
    static int col(int x) { return 4 * x; }

    void put(int r, int c, std::string_view s) { rows[r].replace(c, s.size(), s); }

    void vertices(const GridGeometry& g) {
        for (int y = 0; y <= n + 1; ++y) {
            for (int x = 0; x <= n + 1; ++x) {
                const Vertex v{x, y};
                if (g.is_interior(v)) put(row(y), col(x), "o");
                else if (g.is_endpoint(v)) put(row(y), col(x), "*");
            }
        }
    }

    std::string str() const {
        std::string out;
        for (const auto& r : rows) {
            const auto end = r.find_last_not_of(' ');
            out += r.substr(0, end == std::string::npos ? 0 : end + 1);
            out += '\n';
        }
        return out;
    }

    int n;
    std::vector<std::string> rows;
};

template <class Draw>
std::string draw_edges(int n, Draw draw) {
    const GridGeometry& g = geometry(n);
    Canvas canvas(n);
    canvas.vertices(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [a, b] = g.ends(e);
        if (g.is_horizontal(e)) {
            canvas.put(canvas.row(a.y), Canvas::col(a.x) + 1, draw(e, true));
        } else {
            canvas.put(canvas.row(a.y) - 1, Canvas::col(a.x), draw(e, false));
        }
    }
    return canvas.str();
}

}  // namespace

std::string render_matrix_ascii(const Asm& a) {
    std::ostringstream out;
    for (int r = 0; r < a.order(); ++r) {
        for (int c = 0; c < a.order(); ++c) {
            const int v = a.at(r, c);
            out << (c ? " " : "") << (v == 1 ? " 1" : v == -1 ? "-1" : " 0");
        }
        out << '\n';
    }
    return out.str();
}

std::string render_orientation_ascii(const IceOrientation& o) {
    return draw_edges(o.order(), [&](int e, bool horizontal) -> std::string {
        if (horizontal) return o.forward(e) ? "-->" : "<--";
        return o.forward(e) ? "^" : "v";
    });
}

std::string render_coloring_ascii(const EdgeColoring& c) {
    return draw_edges(c.order(), [&](int e, bool horizontal) -> std::string {
        const bool blue = c.color(e) == Color::Blue;
        if (horizontal) return blue ? "---" : "- -";
        return blue ? "|" : ":";
    });
}

std::pair<int, int> ascii_edge_cell(int n, int e) {
    const GridGeometry& g = geometry(n);
    const auto [a, b] = g.ends(e);
    const Canvas canvas(n);
    if (g.is_horizontal(e)) return {canvas.row(a.y), Canvas::col(a.x) + 2};
    return {canvas.row(a.y) - 1, Canvas::col(a.x)};
}

std::string render_ascii(const Asm& a) {
    std::string out = "matrix\n" + render_matrix_ascii(a);
    out += "\norientation\n" + render_orientation_ascii(asm_to_ice(a));
    out += "\ncoloring (solid = blue, dashed = green)\n" + render_coloring_ascii(asm_to_coloring(a));
    return out;
}

std::string render_svg(const Asm& a) {
    const int n = a.order();
    const GridGeometry& g = geometry(n);
    const IceOrientation ice = asm_to_ice(a);
    const EdgeColoring col = asm_to_coloring(a);
    constexpr int unit = 40;
    const int panel = unit * (n + 2);
    const int title = 24;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * panel << "\" height=\"" << panel + title
        << "\" viewBox=\"0 0 " << 3 * panel << ' ' << panel + title << "\">\n"
        << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
           "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker></defs>\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const char* titles[] = {"matrix", "orientation", "coloring"};
    for (int p = 0; p < 3; ++p) {
        out << "  <text x=\"" << p * panel + panel / 2 << "\" y=\"16\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"14\">" << titles[p] << "</text>\n";
    }
    auto px = [&](int panel_index, int x) { return panel_index * panel + unit * x + unit / 2; };
    auto py = [&](int y) { return title + unit * (n + 1 - y) + unit / 2; };

    out << "  <g font-family=\"monospace\" font-size=\"16\" text-anchor=\"middle\">\n";
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            out << "    <text x=\"" << px(0, c + 1) << "\" y=\"" << py(n - r) + 5 << "\">" << a.at(r, c)
                << "</text>\n";
        }
    }
    out << "  </g>\n";

    out << "  <g stroke=\"black\" stroke-width=\"2\">\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [s, t] = g.ends(e);
        if (!ice.forward(e)) std::swap(s, t);
        out << "    <line x1=\"" << px(1, s.x) << "\" y1=\"" << py(s.y) << "\" x2=\"" << px(1, t.x) << "\" y2=\""
            << py(t.y) << "\" marker-end=\"url(#arrow)\"/>\n";
    }
    out << "  </g>\n";

    out << "  <g stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [s, t] = g.ends(e);
        const bool blue = col.color(e) == Color::Blue;
        out << "    <line x1=\"" << px(2, s.x) << "\" y1=\"" << py(s.y) << "\" x2=\"" << px(2, t.x) << "\" y2=\""
            << py(t.y) << "\" stroke=\"" << (blue ? "#1f5fbf" : "#2e9e3e") << '"'
            << (blue ? "" : " stroke-dasharray=\"6,5\"") << "/>\n";
    }
    out << "  </g>\n";

    out << "  <g fill=\"black\">\n";
    for (int p = 1; p < 3; ++p) {
        for (int y = 1; y <= n; ++y) {
            for (int x = 1; x <= n; ++x) {
                out << "    <circle cx=\"" << px(p, x) << "\" cy=\"" << py(y) << "\" r=\"3\"/>\n";
            }
        }
    }
    out << "  </g>\n</svg>\n";
    return out.str();
}

}  // namespace asmgyr::cli
