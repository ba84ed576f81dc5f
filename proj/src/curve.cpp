#include "tropcount/curve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

// Gradient-dual position of a cell: the point v with lift(u) + <u,v>
// constant over the cell's vertices.
QVec cell_position(const Cell& cell, const Lifting& lift) {
    IVec u0 = cell.verts[0];
    // pick two directions spanning the plane
    IVec d1 = cell.verts[1] - u0;
    IVec d2 = cell.verts[2] - u0;
    long long det = cross(d1, d2);
    if (det == 0) throw InternalError("degenerate cell in position solve");
    Rat r1 = lift.at(u0) - lift.at(cell.verts[1]);
    Rat r2 = lift.at(u0) - lift.at(cell.verts[2]);
    // Solve <d1, v> = r1, <d2, v> = r2.
    Rat vx = (r1 * make_int(d2.y) - r2 * make_int(d1.y)) / make_int(det);
    Rat vy = (r2 * make_int(d1.x) - r1 * make_int(d2.x)) / make_int(det);
    return {vx, vy};
}

// The inner normal of the polygon side containing a boundary segment.
IVec side_inner_normal(const LatticePolygon& poly, const Seg& seg) {
    const auto& vs = poly.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        IVec a = vs[i], b = vs[(i + 1) % vs.size()];
        if (cross(b - a, seg.a - a) == 0 && cross(b - a, seg.b - a) == 0)
            return rot90(primitive(b - a));
    }
    throw InternalError("segment not on the polygon boundary");
}

} // namespace

TropicalCurve curve_from_subdivision(const NewtonSubdivision& sub) {
    if (auto bad = regularity_violation(sub))
        throw ValidationError("non-regular subdivision: " + *bad);

    NewtonSubdivision s = sub;
    s.canonicalize();

    TropicalCurve curve{s.polygon, s, {}, {}, {}};
    for (const auto& c : s.cells) curve.vertices.push_back(cell_position(c, s.lifting));

    for (const auto& er : s.edge_records()) {
        TropicalCurve::Edge e;
        e.weight = er.seg.lattice_length();
        e.dual = er.seg;
        if (er.interior()) {
            e.a = er.cell_a;
            e.b = er.cell_b;
            QVec d = curve.vertices[e.b] - curve.vertices[e.a];
            if (d.x == 0 && d.y == 0)
                throw ValidationError("non-regular subdivision: adjacent cells share a position");
            // primitive integer direction of the rational segment
            IVec dd = primitive(rot90(er.seg.b - er.seg.a));
            if (dot(dd, d) < 0) dd = -dd;
            if (cross(QVec(dd), d) != 0)
                throw InternalError("dual edge is not orthogonal to its subdivision edge");
            e.dir = dd;
        } else {
            e.a = er.cell_a;
            e.b = -1;
            e.dir = side_inner_normal(s.polygon, er.seg);
        }
        curve.edges.push_back(e);
    }
    std::sort(curve.edges.begin(), curve.edges.end(),
              [](const TropicalCurve::Edge& x, const TropicalCurve::Edge& y) {
                  return std::tie(x.dual.a, x.dual.b) < std::tie(y.dual.a, y.dual.b);
              });
    return curve;
}

int TropicalCurve::valence(int vertex) const {
    int v = 0;
    for (const auto& e : edges)
        if (e.a == vertex || e.b == vertex) ++v;
    return v;
}

std::string TropicalCurve::canonical_key() const {
    std::ostringstream os;
    os << dual.canonical_key() << "#m:";
    for (const auto& m : markings) {
        const Seg& sg = edges[m.edge].dual;
        os << sg.a.x << "," << sg.a.y << "-" << sg.b.x << "," << sg.b.y << ";";
    }
    return os.str();
}

std::vector<BalanceViolation> check_balanced(const TropicalCurve& curve) {
    std::vector<BalanceViolation> out;
    for (int v = 0; v < (int)curve.vertices.size(); ++v) {
        IVec sum{0, 0};
        for (const auto& e : curve.edges) {
            if (e.a == v) sum = sum + e.weight * e.dir;
            if (e.b == v) sum = sum + e.weight * (-e.dir);
        }
        if (!(sum == IVec{0, 0})) out.push_back({v, sum});
    }
    return out;
}

int curve_genus(const TropicalCurve& curve) {
    for (int v = 0; v < (int)curve.vertices.size(); ++v) {
        int val = curve.valence(v);
        if (val == 4 && !curve.crossing(v))
            throw ValidationError("4-valent vertex is not a transverse crossing");
        if (val > 4 || (val == 4 && !curve.crossing(v)))
            throw ValidationError("curve is not simple at vertex " + std::to_string(v));
    }
    auto t = dual_topology(curve.dual);
    if (!t.connected)
        throw ValidationError("curve parameterization is disconnected");
    return t.genus;
}

long long vertex_multiplicity(const TropicalCurve& curve, int vertex) {
    std::vector<IVec> weighted;
    for (const auto& e : curve.edges) {
        if (e.a == vertex) weighted.push_back(e.weight * e.dir);
        if (e.b == vertex) weighted.push_back(e.weight * (-e.dir));
    }
    if (weighted.size() != 3)
        throw ValidationError("vertex multiplicity requires a trivalent vertex");
    long long m = std::llabs(cross(weighted[0], weighted[1]));
    if (m == 0) throw InternalError("degenerate trivalent vertex");
    return m;
}

std::vector<std::string> validate_curve(const TropicalCurve& curve) {
    std::vector<std::string> bad;
    // cells tile the polygon
    long long area = 0;
    for (const auto& c : curve.dual.cells) area += c.doubled_area();
    if (area != curve.polygon.doubled_area()) bad.push_back("dual cells do not tile the polygon");
    if (curve.vertices.size() != curve.dual.cells.size())
        bad.push_back("vertex count differs from dual cell count");

    for (std::size_t i = 0; i < curve.edges.size(); ++i) {
        const auto& e = curve.edges[i];
        std::string tag = "edge " + std::to_string(i) + ": ";
        if (e.weight != e.dual.lattice_length())
            bad.push_back(tag + "weight differs from dual lattice length");
        if (e.weight <= 0) bad.push_back(tag + "nonpositive weight");
        if (dot(e.dir, QVec(e.dual.b - e.dual.a)) != 0)
            bad.push_back(tag + "direction not orthogonal to dual edge");
        if (!(primitive(e.dir) == e.dir)) bad.push_back(tag + "direction not primitive");
        if (e.a < 0 || e.a >= (int)curve.vertices.size()) {
            bad.push_back(tag + "bad tail index");
            continue;
        }
        if (e.b >= (int)curve.vertices.size()) {
            bad.push_back(tag + "bad head index");
            continue;
        }
        if (e.b >= 0) {
            QVec d = curve.vertices[e.b] - curve.vertices[e.a];
            if (cross(QVec(e.dir), d) != 0 || dot(e.dir, d) <= 0)
                bad.push_back(tag + "endpoints not aligned with direction");
        }
    }

    for (const auto& v : check_balanced(curve))
        bad.push_back("balancing fails at vertex " + std::to_string(v.vertex) + " with residual " +
                      to_string(v.residual));

    // unbounded directions with multiplicity must match the polygon degree
    std::map<IVec, long long> rays;
    for (const auto& e : curve.edges)
        if (e.b < 0) rays[e.dir] += e.weight;
    if (rays != degree_directions(curve.polygon))
        bad.push_back("unbounded directions do not match the polygon degree");

    for (std::size_t i = 0; i < curve.markings.size(); ++i) {
        const auto& m = curve.markings[i];
        std::string tag = "marking " + std::to_string(i) + ": ";
        if (m.edge < 0 || m.edge >= (int)curve.edges.size()) {
            bad.push_back(tag + "bad edge index");
            continue;
        }
        const auto& e = curve.edges[m.edge];
        QVec expect = curve.vertices[e.a] + m.param * QVec(e.dir);
        if (!(expect == m.point)) bad.push_back(tag + "point is not on its edge at param");
        if (m.param < 0) bad.push_back(tag + "negative edge parameter");
        if (e.b >= 0) {
            QVec d = curve.vertices[e.b] - curve.vertices[e.a];
            // param runs in lattice steps of dir; the edge ends where
            // a + t*dir = b.
            Rat tmax = (e.dir.x != 0) ? d.x / make_rat(e.dir.x) : d.y / make_rat(e.dir.y);
            if (m.param > tmax) bad.push_back(tag + "parameter beyond the far endpoint");
        }
    }
    return bad;
}

Json TropicalCurve::to_json() const {
    Json j;
    j["polygon"] = polygon.to_json();
    Json vs = Json::array();
    for (const auto& v : vertices) vs.push_back({to_string(v.x), to_string(v.y)});
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto& e : edges) {
        Json ej;
        ej["ends"] = {e.a, e.b};
        ej["weight"] = e.weight;
        ej["dir"] = {e.dir.x, e.dir.y};
        ej["dual"] = {{e.dual.a.x, e.dual.a.y}, {e.dual.b.x, e.dual.b.y}};
        es.push_back(ej);
    }
    j["edges"] = es;
    j["dual_cells"] = dual.to_json()["cells"];
    Json lf = Json::array();
    for (const auto& [u, z] : dual.lifting) lf.push_back({u.x, u.y, to_string(z)});
    j["lifting"] = lf;
    Json ms = Json::array();
    for (const auto& m : markings) {
        Json mj;
        mj["point"] = {to_string(m.point.x), to_string(m.point.y)};
        mj["edge"] = m.edge;
        mj["param"] = to_string(m.param);
        ms.push_back(mj);
    }
    j["markings"] = ms;
    return j;
}

TropicalCurve TropicalCurve::from_json(const Json& j) {
    LatticePolygon poly = LatticePolygon::from_json(j.at("polygon"));
    Json subj;
    subj["cells"] = j.at("dual_cells");
    if (j.contains("lifting")) subj["lifting"] = j["lifting"];
    NewtonSubdivision sub = NewtonSubdivision::from_json(subj, poly);
    TropicalCurve c{poly, sub, {}, {}, {}};
    for (const auto& vj : j.at("vertices"))
        c.vertices.push_back(
            QVec(rat_from_string(vj[0].get<std::string>()), rat_from_string(vj[1].get<std::string>())));
    for (const auto& ej : j.at("edges")) {
        TropicalCurve::Edge e;
        e.a = ej.at("ends")[0].get<int>();
        e.b = ej.at("ends")[1].get<int>();
        e.weight = ej.at("weight").get<long long>();
        e.dir = IVec{ej.at("dir")[0].get<long long>(), ej.at("dir")[1].get<long long>()};
        e.dual = Seg(IVec{ej.at("dual")[0][0].get<long long>(), ej.at("dual")[0][1].get<long long>()},
                     IVec{ej.at("dual")[1][0].get<long long>(), ej.at("dual")[1][1].get<long long>()});
        c.edges.push_back(e);
    }
    if (j.contains("markings"))
        for (const auto& mj : j["markings"]) {
            TropicalCurve::Marking m;
            m.point = QVec(rat_from_string(mj.at("point")[0].get<std::string>()),
                           rat_from_string(mj.at("point")[1].get<std::string>()));
            m.edge = mj.at("edge").get<int>();
            m.param = rat_from_string(mj.at("param").get<std::string>());
            c.markings.push_back(m);
        }
    return c;
}

} // namespace tropcount
