#include "tropcount/verify.hpp"

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

MotivicClass Lm(long long c) { return MotivicClass::L() - MotivicClass(c); }

std::vector<TableRow> build_table() {
    using C = CaseId;
    std::vector<TableRow> t;
    auto row = [&](C cid, const char* face, int layer, MotivicClass cls, int dim, int rec) {
        t.push_back({cid, face, layer, {std::move(cls), dim, rec}});
    };

    // crossing case: single layer
    row(C::FourValent, "bounded_edges", 0, Lm(1) * Lm(1), 1, 0);
    row(C::FourValent, "unbounded_edges", 0, Lm(1) * Lm(1), 1, 1);
    row(C::FourValent, "trivalent_vertices", 0, Lm(1) * Lm(2), 0, 0);
    row(C::FourValent, "fourvalent_vertices", 0, L_poly({{2, 1}, {1, -3}, {0, 3}}), 0, 0);

    row(C::Weight2Marked, "bounded_weight1_edges", 0, Lm(1) * Lm(2), 1, 0);
    row(C::Weight2Marked, "bounded_weight1_edges", 1, Lm(1) * Lm(1), 2, 1);
    row(C::Weight2Marked, "unbounded_edges", 0, Lm(1) * Lm(2), 1, 1);
    row(C::Weight2Marked, "unbounded_edges", 1, Lm(1) * Lm(1), 2, 2);
    row(C::Weight2Marked, "off_edge_vertices", 0, Lm(2) * Lm(2), 0, 0);
    row(C::Weight2Marked, "off_edge_vertices", 1, Lm(1) * Lm(2), 1, 1);
    row(C::Weight2Marked, "on_edge_vertices", 0, L_poly({{2, 1}, {1, -4}, {0, 7}}), 0, 0);
    row(C::Weight2Marked, "on_edge_vertices", 1, Lm(1) * Lm(3), 1, 1);
    row(C::Weight2Marked, "weight2_edges", 0, L_poly({{2, 1}, {1, -6}, {0, 5}}), 1, 0);
    row(C::Weight2Marked, "weight2_edges", 1, (Lm(1) * Lm(1)).scaled(2), 2, 1);

    row(C::Weight2Unmarked, "bounded_weight1_edges", 0, Lm(1) * Lm(1), 1, 0);
    row(C::Weight2Unmarked, "bounded_weight1_edges", 1, Lm(1) * Lm(1), 2, 1);
    row(C::Weight2Unmarked, "unbounded_edges", 0, Lm(1) * Lm(1), 1, 1);
    row(C::Weight2Unmarked, "unbounded_edges", 1, Lm(1) * Lm(1), 2, 2);
    row(C::Weight2Unmarked, "off_edge_vertices", 0, Lm(1) * Lm(2), 0, 0);
    row(C::Weight2Unmarked, "off_edge_vertices", 1, Lm(1) * Lm(2), 1, 1);
    row(C::Weight2Unmarked, "on_edge_vertices", 0, L_poly({{2, 1}, {1, -3}, {0, 4}}), 0, 0);
    row(C::Weight2Unmarked, "on_edge_vertices", 1, Lm(1) * Lm(3), 1, 1);
    row(C::Weight2Unmarked, "weight2_edges", 0, Lm(3) * Lm(1), 1, 0);
    row(C::Weight2Unmarked, "weight2_edges", 1, (Lm(1) * Lm(1)).scaled(2), 2, 1);

    row(C::Mult3Vertex, "bounded_edges", 0, Lm(1) * Lm(1), 1, 0);
    row(C::Mult3Vertex, "bounded_edges", 1, Lm(1) * Lm(1), 2, 1);
    row(C::Mult3Vertex, "unbounded_edges", 0, Lm(1) * Lm(1), 1, 1);
    row(C::Mult3Vertex, "unbounded_edges", 1, Lm(1) * Lm(1), 2, 2);
    row(C::Mult3Vertex, "ordinary_vertices", 0, Lm(1) * Lm(2), 0, 0);
    row(C::Mult3Vertex, "ordinary_vertices", 1, Lm(1) * Lm(2), 1, 1);
    // torus complement of a genus-1 curve with three punctures
    row(C::Mult3Vertex, "special_vertices", 0,
        Lm(1) * Lm(1) - MotivicClass::curve_atom(1, 3), 0, 0);
    row(C::Mult3Vertex, "special_vertices", 1, Lm(1) * MotivicClass::curve_atom(1, 3), 1, 1);
    return t;
}

std::vector<CellDatum> build_base(CaseId cid) {
    switch (cid) {
        case CaseId::FourValent:
            return {{Lm(1), 0, 0}};
        case CaseId::Weight2Marked:
            return {{Lm(2), 0, 0}, {Lm(1), 1, 1}};
        case CaseId::Weight2Unmarked:
        case CaseId::Mult3Vertex:
            return {{Lm(1), 0, 0}, {Lm(1), 1, 1}};
        case CaseId::Smooth:
            break;
    }
    throw ValidationError("no linear-series cells for the smooth case");
}

} // namespace

const std::vector<TableRow>& contribution_table() {
    static const std::vector<TableRow> table = build_table();
    return table;
}

const std::vector<CellDatum>& base_cells(CaseId case_id) {
    static const std::vector<CellDatum> four = build_base(CaseId::FourValent);
    static const std::vector<CellDatum> w2m = build_base(CaseId::Weight2Marked);
    static const std::vector<CellDatum> w2u = build_base(CaseId::Weight2Unmarked);
    static const std::vector<CellDatum> m3 = build_base(CaseId::Mult3Vertex);
    switch (case_id) {
        case CaseId::FourValent: return four;
        case CaseId::Weight2Marked: return w2m;
        case CaseId::Weight2Unmarked: return w2u;
        case CaseId::Mult3Vertex: return m3;
        case CaseId::Smooth: break;
    }
    throw ValidationError("no linear-series cells for the smooth case");
}

HalfLaurent chi_universal_curve(const FaceCensus& census, long long g) {
    if (census.case_id == CaseId::Smooth)
        throw ValidationError("the universal-curve sum needs a one-node case");
    if (g < 1) throw ValidationError("the universal-curve sum needs g >= 1");
    if (census.interior_points != g)
        throw ValidationError("census interior count disagrees with g");
    if (!census_matches_formulas(census))
        throw ValidationError("census counts are inconsistent with the face-count formulas");

    HalfLaurent total;
    for (const auto& row : contribution_table()) {
        if (row.case_id != census.case_id) continue;
        auto it = census.counts.find(row.face_type);
        if (it == census.counts.end())
            throw InternalError("census lacks face type " + row.face_type);
        HalfLaurent chi = cell_volume(row.datum, VolumeVariant::closure).chi_y();
        total += chi.scaled(make_int(it->second));
    }
    return total;
}

HalfLaurent chi_linear_series(CaseId case_id) {
    if (case_id == CaseId::Smooth)
        throw ValidationError("the linear-series value needs a one-node case");
    HalfLaurent total;
    for (const auto& cell : base_cells(case_id))
        total += cell_volume(cell, VolumeVariant::closure).chi_y();
    return total;
}

Json ConjectureReport::to_json() const {
    Json j;
    j["census"] = census.to_json();
    j["refined"] = refined.to_json();
    j["n_delta"] = n_delta.to_json();
    j["shifted"] = shifted.to_json();
    j["equal"] = equal;
    return j;
}

ConjectureReport conjecture_check(const TropicalCurve& curve, long long g, int delta) {
    if (delta != 0 && delta != 1)
        throw ValidationError("conjecture check supports delta in {0,1}");
    ConjectureReport rep;
    rep.census = face_census(curve, delta);
    rep.refined = refined_multiplicity(curve).refined;
    if (delta == 0) {
        rep.n_delta = HalfLaurent(1);
        rep.shifted = rep.n_delta;
    } else {
        HalfLaurent universe = chi_universal_curve(rep.census, g);
        HalfLaurent series = chi_linear_series(rep.census.case_id);
        HalfLaurent gfactor = half_laurent({{0, 1}, {2, 1}}).scaled(make_int(g - 1));  // (g-1)(1+y)
        rep.n_delta = universe + gfactor * series;
        rep.shifted = rep.n_delta.shifted_half(-2 * delta);
    }
    rep.equal = rep.shifted == rep.refined;
    return rep;
}

} // namespace tropcount
