#include "planar/render.hpp"

#include <algorithm>
#include <sstream>

namespace planar {

namespace {

bool hole_edge(const Witness* w, int u, int v) {
    if (!w) return false;
    const auto& h = w->hole;
    const int len = static_cast<int>(h.size());
    for (int i = 0; i < len; ++i) {
        int a = h[i], b = h[(i + 1) % len];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

bool in(const std::vector<int>& xs, int v) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
}

}  // namespace

std::string to_dot(const PlaneGraph& g, const Witness* witness) {
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (witness && in(witness->kernel.vertices, v))
            out << " [style=filled, fillcolor=red]";
        else if (witness && in(witness->hole, v))
            out << " [style=filled, fillcolor=lightblue]";
        out << ";\n";
    }
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.rotation[u]) {
            if (u > v) continue;
            out << "  " << u << " -- " << v;
            if (hole_edge(witness, u, v)) out << " [color=blue, penwidth=2]";
            out << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const PlaneGraph& g, const GridEmbedding& e, const Witness* witness) {
    const int canvas = 800, margin = 40;
    int max_c = 1;
    for (const auto& p : e.coords) max_c = std::max({max_c, p.x, p.y});
    auto sx = [&](int x) { return margin + x * (canvas - 2 * margin) / max_c; };
    auto sy = [&](int y) { return canvas - margin - y * (canvas - 2 * margin) / max_c; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas << "\" height=\""
        << canvas << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n";
    out << "<style>line{stroke:#999;stroke-width:1.5} line.hole{stroke:#1565c0;stroke-width:4} "
           "circle{fill:#bbb} circle.hole{fill:#1565c0} circle.kernel{fill:#c62828} "
           "text{font:12px sans-serif}</style>\n";
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.rotation[u]) {
            if (u > v) continue;
            out << "<line";
            if (hole_edge(witness, u, v)) out << " class=\"hole\"";
            out << " x1=\"" << sx(e.coords[u].x) << "\" y1=\"" << sy(e.coords[u].y) << "\" x2=\""
                << sx(e.coords[v].x) << "\" y2=\"" << sy(e.coords[v].y) << "\"/>\n";
        }
    }
    for (int v = 0; v < g.n; ++v) {
        out << "<circle";
        if (witness && in(witness->kernel.vertices, v))
            out << " class=\"kernel\"";
        else if (witness && in(witness->hole, v))
            out << " class=\"hole\"";
        out << " cx=\"" << sx(e.coords[v].x) << "\" cy=\"" << sy(e.coords[v].y) << "\" r=\"7\"/>\n";
        out << "<text x=\"" << sx(e.coords[v].x) + 9 << "\" y=\"" << sy(e.coords[v].y) - 9 << "\">"
            << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace planar
