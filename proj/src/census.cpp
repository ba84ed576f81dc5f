#include "tropcount/census.hpp"

#include <set>

#include "tropcount/errors.hpp"

namespace tropcount {

std::string to_string(CaseId c) {
    switch (c) {
        case CaseId::FourValent: return "FourValent";
        case CaseId::Weight2Marked: return "Weight2Marked";
        case CaseId::Weight2Unmarked: return "Weight2Unmarked";
        case CaseId::Mult3Vertex: return "Mult3Vertex";
        case CaseId::Smooth: return "Smooth";
    }
    throw InternalError("bad case id");
}

CaseId case_from_string(const std::string& s) {
    if (s == "FourValent") return CaseId::FourValent;
    if (s == "Weight2Marked") return CaseId::Weight2Marked;
    if (s == "Weight2Unmarked") return CaseId::Weight2Unmarked;
    if (s == "Mult3Vertex") return CaseId::Mult3Vertex;
    if (s == "Smooth") return CaseId::Smooth;
    throw ValidationError("unknown census case: " + s);
}

Json FaceCensus::to_json() const {
    Json j;
    j["case"] = to_string(case_id);
    Json cj = Json::object();
    for (const auto& [k, v] : counts) cj[k] = v;
    j["counts"] = cj;
    j["doubled_area"] = doubled_area;
    j["interior_points"] = interior_points;
    return j;
}

FaceCensus face_census(const TropicalCurve& curve, int delta) {
    if (delta != 0 && delta != 1)
        throw ValidationError("face census supports delta in {0,1}");

    PolygonStats st = polygon_stats(curve.polygon);

    // Collect features.
    std::vector<int> crossings;
    std::vector<int> weight2_bounded;  // edge indices
    std::vector<int> mult3;            // vertex indices
    long long bounded = 0, unbounded = 0;
    std::set<int> marked_edges;
    for (const auto& m : curve.markings) marked_edges.insert(m.edge);

    for (int e = 0; e < (int)curve.edges.size(); ++e) {
        const auto& ed = curve.edges[e];
        if (ed.b < 0) {
            ++unbounded;
            if (ed.weight != 1)
                throw GenericityError("unbounded edge of weight " + std::to_string(ed.weight) +
                                      "; configuration is not generic");
        } else {
            ++bounded;
            if (ed.weight == 2)
                weight2_bounded.push_back(e);
            else if (ed.weight > 2)
                throw GenericityError("bounded edge of weight " + std::to_string(ed.weight) +
                                      " is outside the one-node classification");
        }
    }

    std::vector<long long> mult(curve.vertices.size(), 0);
    for (int v = 0; v < (int)curve.vertices.size(); ++v) {
        int val = curve.valence(v);
        if (val == 4) {
            if (!curve.crossing(v))
                throw GenericityError("4-valent vertex without a crossing");
            crossings.push_back(v);
        } else if (val == 3) {
            mult[v] = vertex_multiplicity(curve, v);
            if (mult[v] == 3) mult3.push_back(v);
            if (mult[v] > 3 || (mult[v] == 2 && weight2_bounded.empty()))
                throw GenericityError("vertex multiplicity " + std::to_string(mult[v]) +
                                      " is outside the one-node classification");
        } else {
            throw GenericityError("vertex of valence " + std::to_string(val));
        }
    }

    FaceCensus census;
    census.doubled_area = st.doubled_area;
    census.interior_points = st.interior_points;

    int specials = (int)crossings.size() + (int)weight2_bounded.size() + (int)mult3.size();

    if (delta == 0) {
        if (specials != 0)
            throw GenericityError("smooth case expected but special features present");
        long long triv = 0;
        for (int v = 0; v < (int)curve.vertices.size(); ++v) {
            if (mult[v] != 1)
                throw GenericityError("smooth case expects unimodular vertices");
            ++triv;
        }
        census.case_id = CaseId::Smooth;
        census.counts["bounded_edges"] = bounded;
        census.counts["unbounded_edges"] = unbounded;
        census.counts["trivalent_vertices"] = triv;
        return census;
    }

    if (specials != 1)
        throw GenericityError("expected exactly one special feature for delta=1, found " +
                              std::to_string(specials));

    if (!crossings.empty()) {
        census.case_id = CaseId::FourValent;
        census.counts["bounded_edges"] = bounded;
        census.counts["unbounded_edges"] = unbounded;
        census.counts["trivalent_vertices"] = (long long)curve.vertices.size() - 1;
        census.counts["fourvalent_vertices"] = 1;
        for (int v = 0; v < (int)curve.vertices.size(); ++v)
            if (mult[v] > 1)
                throw GenericityError("crossing case expects unimodular trivalent vertices");
    } else if (!weight2_bounded.empty()) {
        int we = weight2_bounded[0];
        bool marked = marked_edges.count(we) > 0;
        census.case_id = marked ? CaseId::Weight2Marked : CaseId::Weight2Unmarked;
        const auto& ed = curve.edges[we];
        long long on_edge = 0, off_edge = 0;
        for (int v = 0; v < (int)curve.vertices.size(); ++v) {
            if (v == ed.a || v == ed.b) {
                if (mult[v] != 2)
                    throw GenericityError("weight-2 edge endpoint of multiplicity " +
                                          std::to_string(mult[v]));
                ++on_edge;
            } else {
                if (mult[v] != 1)
                    throw GenericityError("weight-2 case expects unimodular off-edge vertices");
                ++off_edge;
            }
        }
        census.counts["bounded_weight1_edges"] = bounded - 1;
        census.counts["unbounded_edges"] = unbounded;
        census.counts["off_edge_vertices"] = off_edge;
        census.counts["on_edge_vertices"] = on_edge;
        census.counts["weight2_edges"] = 1;
    } else {
        census.case_id = CaseId::Mult3Vertex;
        long long ordinary = 0;
        for (int v = 0; v < (int)curve.vertices.size(); ++v) {
            if (mult[v] == 1) ++ordinary;
            else if (mult[v] != 3)
                throw GenericityError("multiplicity-3 case expects unimodular ordinary vertices");
        }
        census.counts["bounded_edges"] = bounded;
        census.counts["unbounded_edges"] = unbounded;
        census.counts["ordinary_vertices"] = ordinary;
        census.counts["special_vertices"] = 1;
    }
    return census;
}

FaceCensus census_from_formulas(CaseId case_id, long long A, long long g) {
    FaceCensus c;
    c.case_id = case_id;
    c.doubled_area = A;
    c.interior_points = g;
    switch (case_id) {
        case CaseId::FourValent:
            c.counts["bounded_edges"] = A - 2 + g;
            c.counts["unbounded_edges"] = A + 2 - 2 * g;
            c.counts["trivalent_vertices"] = A - 2;
            c.counts["fourvalent_vertices"] = 1;
            break;
        case CaseId::Weight2Marked:
        case CaseId::Weight2Unmarked:
            c.counts["bounded_weight1_edges"] = A - 5 + g;
            c.counts["unbounded_edges"] = A + 2 - 2 * g;
            c.counts["off_edge_vertices"] = A - 4;
            c.counts["on_edge_vertices"] = 2;
            c.counts["weight2_edges"] = 1;
            break;
        case CaseId::Mult3Vertex:
            c.counts["bounded_edges"] = A - 4 + g;
            c.counts["unbounded_edges"] = A + 2 - 2 * g;
            c.counts["ordinary_vertices"] = A - 3;
            c.counts["special_vertices"] = 1;
            break;
        case CaseId::Smooth:
            throw ValidationError("no closed formulas for the smooth case");
    }
    return c;
}

bool census_matches_formulas(const FaceCensus& census) {
    if (census.case_id == CaseId::Smooth) return true;
    FaceCensus expect =
        census_from_formulas(census.case_id, census.doubled_area, census.interior_points);
    return expect.counts == census.counts;
}

} // namespace tropcount
