#include "tropcount/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

void Cell::canonicalize() {
    if (verts.size() < 3) throw ValidationError("cell needs at least 3 vertices");
    long long area2 = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        area2 += cross(verts[i], verts[(i + 1) % verts.size()]);
    if (area2 == 0) throw ValidationError("degenerate cell");
    if (area2 < 0) std::reverse(verts.begin(), verts.end());
    auto mn = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), mn, verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        IVec a = verts[i], b = verts[(i + 1) % verts.size()], c = verts[(i + 2) % verts.size()];
        if (cross(b - a, c - b) <= 0) throw ValidationError("cell is not strictly convex");
    }
}

long long Cell::doubled_area() const {
    long long area2 = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        area2 += cross(verts[i], verts[(i + 1) % verts.size()]);
    return area2;
}

bool Cell::is_parallelogram() const {
    return verts.size() == 4 && verts[1] - verts[0] == verts[2] - verts[3];
}

bool Cell::contains(IVec p) const {
    for (std::size_t i = 0; i < verts.size(); ++i) {
        IVec a = verts[i], b = verts[(i + 1) % verts.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

void NewtonSubdivision::canonicalize() {
    for (auto& c : cells) c.canonicalize();
    std::sort(cells.begin(), cells.end());
}

std::string NewtonSubdivision::canonical_key() const {
    std::ostringstream os;
    for (const auto& c : cells) {
        for (IVec v : c.verts) os << v.x << "," << v.y << ";";
        os << "|";
    }
    return os.str();
}

std::vector<IVec> NewtonSubdivision::subdivision_vertices() const {
    std::set<IVec> vs;
    for (const auto& c : cells)
        for (IVec v : c.verts) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::vector<NewtonSubdivision::EdgeRecord> NewtonSubdivision::edge_records() const {
    std::map<Seg, std::vector<int>> incidence;
    for (int ci = 0; ci < (int)cells.size(); ++ci) {
        const auto& vs = cells[ci].verts;
        for (std::size_t i = 0; i < vs.size(); ++i)
            incidence[Seg(vs[i], vs[(i + 1) % vs.size()])].push_back(ci);
    }
    std::vector<EdgeRecord> out;
    for (const auto& [seg, inc] : incidence) {
        EdgeRecord r;
        r.seg = seg;
        r.cell_a = inc[0];
        if (inc.size() == 2)
            r.cell_b = inc[1];
        else if (inc.size() > 2)
            throw InternalError("edge shared by more than two cells");
        out.push_back(r);
    }
    return out;
}

DualTopology dual_topology(const NewtonSubdivision& sub) {
    // Strand nodes: one per triangle-ish cell, two per parallelogram. An
    // edge of a parallelogram belongs to the strand of its opposite pair.
    const auto& cells = sub.cells;
    std::vector<int> node_base(cells.size());
    int nodes = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        node_base[i] = nodes;
        nodes += cells[i].is_parallelogram() ? 2 : 1;
    }
    auto strand_of = [&](int ci, const Seg& seg) {
        const Cell& c = cells[ci];
        if (!c.is_parallelogram()) return node_base[ci];
        // sides 0/2 pair with strand 0, sides 1/3 with strand 1
        for (int i = 0; i < 4; ++i) {
            Seg s(c.verts[i], c.verts[(i + 1) % 4]);
            if (s == seg) return node_base[ci] + (i % 2);
        }
        throw InternalError("segment not a side of its parallelogram");
    };

    std::vector<int> parent(nodes);
    for (int i = 0; i < nodes; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };

    int bounded_edges = 0;
    for (const auto& er : sub.edge_records()) {
        if (!er.interior()) continue;
        ++bounded_edges;
        int a = find(strand_of(er.cell_a, er.seg));
        int b = find(strand_of(er.cell_b, er.seg));
        if (a != b) parent[a] = b;
    }
    // Both strands of a crossing belong to one curve only if linked through
    // the complex elsewhere; they are distinct graph vertices regardless.
    std::set<int> comps;
    for (int i = 0; i < nodes; ++i) comps.insert(find(i));
    DualTopology t;
    t.connected = comps.size() <= 1;
    t.genus = bounded_edges - nodes + (int)comps.size();
    return t;
}

namespace {

struct Affine {
    // z = (ax + by + c) / d with d > 0
    Int a, b, c, d;
    Rat at(IVec p) const {
        Rat r(a * make_int(p.x) + b * make_int(p.y) + c, d);
        r.canonicalize();
        return r;
    }
};

std::optional<Affine> affine_through(IVec u0, const Rat& z0, IVec u1, const Rat& z1, IVec u2,
                                     const Rat& z2) {
    long long det = cross(u1 - u0, u2 - u0);
    if (det == 0) return std::nullopt;
    // Solve for gradient (gx, gy): <ui - u0, g> = zi - z0.
    Rat dz1 = z1 - z0, dz2 = z2 - z0;
    Rat gx = (dz1 * make_int((u2 - u0).y) - dz2 * make_int((u1 - u0).y)) / make_int(det);
    Rat gy = (dz2 * make_int((u1 - u0).x) - dz1 * make_int((u2 - u0).x)) / make_int(det);
    // Common denominator form.
    Int den = gx.get_den() * gy.get_den() / gcd(gx.get_den(), gy.get_den());
    Rat cc = z0 - gx * make_int(u0.x) - gy * make_int(u0.y);
    den = den * cc.get_den() / gcd(den, cc.get_den());
    Affine f;
    f.d = den;
    f.a = gx.get_num() * (den / gx.get_den());
    f.b = gy.get_num() * (den / gy.get_den());
    f.c = cc.get_num() * (den / cc.get_den());
    return f;
}

Cell hull_of(std::vector<IVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) throw InternalError("hull of fewer than 3 points");
    // Monotone chain.
    auto half = [&](bool lower) {
        std::vector<IVec> h;
        for (IVec p : pts) {
            while (h.size() >= 2) {
                long long c = cross(h[h.size() - 1] - h[h.size() - 2], p - h[h.size() - 2]);
                if (lower ? c <= 0 : c >= 0)
                    h.pop_back();
                else
                    break;
            }
            h.push_back(p);
        }
        return h;
    };
    auto lo = half(true);
    auto hi = half(false);
    std::vector<IVec> hull(lo.begin(), lo.end() - 1);
    for (auto it = hi.rbegin(); it != hi.rend() - 1; ++it) hull.push_back(*it);
    Cell c;
    c.verts = hull;
    c.canonicalize();
    return c;
}

} // namespace

std::vector<Cell> induced_subdivision(const LatticePolygon& polygon, const Lifting& lifting) {
    for (IVec v : polygon.vertices())
        if (!lifting.count(v))
            throw ValidationError("lifting must be defined on all polygon vertices");
    std::vector<IVec> dom;
    for (const auto& kv : lifting) {
        if (!polygon.contains(kv.first))
            throw ValidationError("lifting point outside polygon: " + to_string(kv.first));
        dom.push_back(kv.first);
    }

    std::set<Cell> cells;
    const std::size_t n = dom.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                auto f = affine_through(dom[i], lifting.at(dom[i]), dom[j], lifting.at(dom[j]),
                                        dom[k], lifting.at(dom[k]));
                if (!f) continue;
                bool lower = true;
                std::vector<IVec> face;
                for (IVec u : dom) {
                    Rat fz = f->at(u);
                    const Rat& z = lifting.at(u);
                    if (fz > z) {
                        lower = false;
                        break;
                    }
                    if (fz == z) face.push_back(u);
                }
                if (!lower || face.size() < 3) continue;
                // Skip collinear supports (1-dimensional faces).
                bool twodim = false;
                for (std::size_t a = 0; a + 2 < face.size() && !twodim; ++a)
                    for (std::size_t b = a + 1; b + 1 < face.size() && !twodim; ++b)
                        for (std::size_t c = b + 1; c < face.size() && !twodim; ++c)
                            if (cross(face[b] - face[a], face[c] - face[a]) != 0) twodim = true;
                if (!twodim) continue;
                cells.insert(hull_of(face));
            }

    std::vector<Cell> out(cells.begin(), cells.end());
    long long total = 0;
    for (const auto& c : out) total += c.doubled_area();
    if (total != polygon.doubled_area())
        throw InternalError("induced subdivision does not tile the polygon");
    return out;
}

std::optional<std::string> regularity_violation(const NewtonSubdivision& sub) {
    std::vector<Cell> induced;
    try {
        induced = induced_subdivision(sub.polygon, sub.lifting);
    } catch (const ValidationError& e) {
        return std::string(e.what());
    }
    std::vector<Cell> given = sub.cells;
    std::sort(given.begin(), given.end());
    if (induced == given) return std::nullopt;
    // Name a violating pair: a given cell and the induced cell overlapping it.
    for (const auto& g : given) {
        if (std::binary_search(induced.begin(), induced.end(), g)) continue;
        for (const auto& ic : induced) {
            if (ic.contains(g.verts[0])) {
                std::ostringstream os;
                os << "lifting does not induce cell {";
                for (IVec v : g.verts) os << to_string(v);
                os << "}; induced cell there is {";
                for (IVec v : ic.verts) os << to_string(v);
                os << "}";
                return os.str();
            }
        }
    }
    return std::string("induced subdivision differs from the given cells");
}

Json NewtonSubdivision::to_json() const {
    Json j;
    Json cs = Json::array();
    for (const auto& c : cells) {
        Json cj = Json::array();
        for (IVec v : c.verts) cj.push_back({v.x, v.y});
        cs.push_back(cj);
    }
    j["cells"] = cs;
    Json lf = Json::array();
    for (const auto& [u, z] : lifting) lf.push_back({u.x, u.y, to_string(z)});
    j["lifting"] = lf;
    return j;
}

NewtonSubdivision NewtonSubdivision::from_json(const Json& j, const LatticePolygon& polygon) {
    NewtonSubdivision s{polygon, {}, {}};
    if (!j.contains("cells") || !j["cells"].is_array())
        throw ValidationError("subdivision JSON needs a cells array");
    for (const auto& cj : j["cells"]) {
        Cell c;
        for (const auto& vj : cj)
            c.verts.push_back(IVec{vj[0].get<long long>(), vj[1].get<long long>()});
        c.canonicalize();
        s.cells.push_back(c);
    }
    if (j.contains("lifting"))
        for (const auto& lj : j["lifting"])
            s.lifting[IVec{lj[0].get<long long>(), lj[1].get<long long>()}] =
                rat_from_string(lj[2].get<std::string>());
    s.canonicalize();
    return s;
}

} // namespace tropcount
