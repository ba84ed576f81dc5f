#include "tropcount/svg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tropcount {

namespace {

struct Frame {
    Rat xmin, xmax, ymin, ymax;
    Rat scale;
    int canvas;

    std::string px(const Rat& x, const Rat& y) const {
        // y axis flipped for screen coordinates
        Rat sx = (x - xmin) * scale;
        Rat sy = Rat(canvas) - (y - ymin) * scale;
        return decimal_string(sx, 2) + "," + decimal_string(sy, 2);
    }
};

void expand(Rat& mn, Rat& mx, const Rat& v) {
    mn = std::min(mn, v);
    mx = std::max(mx, v);
}

} // namespace

std::string render_svg(const TropicalCurve& curve, const RenderOptions& options) {
    // Bounding box over vertices and markings, padded by a third.
    Rat xmin(0), xmax(1), ymin(0), ymax(1);
    bool first = true;
    auto see = [&](const QVec& p) {
        if (first) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            first = false;
        } else {
            expand(xmin, xmax, p.x);
            expand(ymin, ymax, p.y);
        }
    };
    for (const auto& v : curve.vertices) see(v);
    for (const auto& m : curve.markings) see(m.point);
    Rat w = xmax - xmin, h = ymax - ymin;
    if (w == 0) w = 1;
    if (h == 0) h = 1;
    Rat pad = std::max(w, h) / 3;
    xmin -= pad; xmax += pad; ymin -= pad; ymax += pad;
    Frame fr{xmin, xmax, ymin, ymax, Rat(options.canvas) / std::max(xmax - xmin, ymax - ymin),
             options.canvas};
    Rat ray_reach = 2 * std::max(xmax - xmin, ymax - ymin);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.canvas << "\" height=\""
        << options.canvas << "\" viewBox=\"0 0 " << options.canvas << " " << options.canvas
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // special features
    auto edge_color = [&](const TropicalCurve::Edge& e) {
        if (e.b >= 0 && e.weight == 2) return "#d62728";  // bounded weight-2
        return "#1f77b4";
    };

    for (const auto& e : curve.edges) {
        QVec a = curve.vertices[e.a];
        QVec b = e.b >= 0 ? curve.vertices[e.b] : a + ray_reach * QVec(e.dir);
        svg << "<line x1=\"" << decimal_string((a.x - fr.xmin) * fr.scale, 2) << "\" y1=\""
            << decimal_string(Rat(fr.canvas) - (a.y - fr.ymin) * fr.scale, 2) << "\" x2=\""
            << decimal_string((b.x - fr.xmin) * fr.scale, 2) << "\" y2=\""
            << decimal_string(Rat(fr.canvas) - (b.y - fr.ymin) * fr.scale, 2) << "\" stroke=\""
            << edge_color(e) << "\" stroke-width=\"" << (e.weight >= 2 ? 3 : 1) << "\"/>\n";
        if (options.label_weights && e.weight >= 2) {
            QVec mid = Rat(1, 2) * (a + b);
            svg << "<text x=\"" << decimal_string((mid.x - fr.xmin) * fr.scale + 4, 2)
                << "\" y=\"" << decimal_string(Rat(fr.canvas) - (mid.y - fr.ymin) * fr.scale - 4, 2)
                << "\" font-size=\"12\" fill=\"#d62728\">" << e.weight << "</text>\n";
        }
    }

    for (int v = 0; v < (int)curve.vertices.size(); ++v) {
        const QVec& p = curve.vertices[v];
        bool special = false;
        if (curve.crossing(v)) special = true;
        if (curve.valence(v) == 3) {
            long long m = vertex_multiplicity(curve, v);
            if (m >= 3) special = true;
        }
        svg << "<circle cx=\"" << decimal_string((p.x - fr.xmin) * fr.scale, 2) << "\" cy=\""
            << decimal_string(Rat(fr.canvas) - (p.y - fr.ymin) * fr.scale, 2) << "\" r=\""
            << (special ? 5 : 2) << "\" fill=\"" << (special ? "#d62728" : "#1f77b4") << "\""
            << (curve.crossing(v) ? " fill-opacity=\"0.4\"" : "") << "/>\n";
    }

    for (const auto& m : curve.markings) {
        Rat cx = (m.point.x - fr.xmin) * fr.scale;
        Rat cy = Rat(fr.canvas) - (m.point.y - fr.ymin) * fr.scale;
        svg << "<path d=\"M " << decimal_string(cx - 4, 2) << " " << decimal_string(cy - 4, 2)
            << " L " << decimal_string(cx + 4, 2) << " " << decimal_string(cy + 4, 2) << " M "
            << decimal_string(cx - 4, 2) << " " << decimal_string(cy + 4, 2) << " L "
            << decimal_string(cx + 4, 2) << " " << decimal_string(cy - 4, 2)
            << "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }

    if (options.newton_inset) {
        // dual subdivision in the top-right corner
        long long pxmin = 0, pxmax = 1, pymin = 0, pymax = 1;
        bool f2 = true;
        for (IVec v : curve.polygon.vertices()) {
            if (f2) {
                pxmin = pxmax = v.x;
                pymin = pymax = v.y;
                f2 = false;
            }
            pxmin = std::min(pxmin, v.x); pxmax = std::max(pxmax, v.x);
            pymin = std::min(pymin, v.y); pymax = std::max(pymax, v.y);
        }
        Rat span = make_rat(std::max(pxmax - pxmin, pymax - pymin));
        if (span == 0) span = 1;
        Rat inset = Rat(options.canvas, 4);
        Rat sc = inset / span;
        Rat ox = Rat(options.canvas) - inset - 10;
        Rat oy = 10;
        auto ipt = [&](IVec u) {
            Rat sx = ox + make_rat(u.x - pxmin) * sc;
            Rat sy = oy + (inset - make_rat(u.y - pymin) * sc);
            return decimal_string(sx, 2) + "," + decimal_string(sy, 2);
        };
        std::set<Seg> marked;
        for (const auto& m : curve.markings) marked.insert(curve.edges[m.edge].dual);
        for (const auto& c : curve.dual.cells) {
            svg << "<polygon points=\"";
            for (IVec u : c.verts) svg << ipt(u) << " ";
            svg << "\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"1\"/>\n";
        }
        for (const Seg& s : marked)
            svg << "<line x1=\"" << ipt(s.a).substr(0, ipt(s.a).find(',')) << "\" y1=\""
                << ipt(s.a).substr(ipt(s.a).find(',') + 1) << "\" x2=\""
                << ipt(s.b).substr(0, ipt(s.b).find(',')) << "\" y2=\""
                << ipt(s.b).substr(ipt(s.b).find(',') + 1)
                << "\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

} // namespace tropcount
