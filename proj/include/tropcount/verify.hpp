#ifndef TROPCOUNT_VERIFY_HPP
#define TROPCOUNT_VERIFY_HPP

#include <vector>

#include "tropcount/census.hpp"
#include "tropcount/motvol.hpp"
#include "tropcount/multiplicity.hpp"

namespace tropcount {

// Initial-degeneration classes per face type for the one-node cases. The
// two layers cover the face itself and the face swept along the ray in the
// series direction; the crossing case has the single layer.
struct TableRow {
    CaseId case_id;
    std::string face_type;  // census count key
    int layer;              // 0: base face, 1: swept face
    CellDatum datum;
};

const std::vector<TableRow>& contribution_table();
const std::vector<CellDatum>& base_cells(CaseId case_id);

// chi_{-y} of the universal curve over the fixed-type locus, assembled
// from the contribution table weighted by face counts.
HalfLaurent chi_universal_curve(const FaceCensus& census, long long g);

// chi_{-y} of the fixed-type locus in the linear series, from the base
// cells (never hardcoded).
HalfLaurent chi_linear_series(CaseId case_id);

struct ConjectureReport {
    FaceCensus census;
    HalfLaurent refined;   // N from the vertex product
    HalfLaurent n_delta;   // N_delta from the volume formulas
    HalfLaurent shifted;   // y^{-delta} * n_delta
    bool equal = false;

    Json to_json() const;
};

// Compares y^{-delta} N_delta with the refined vertex-product multiplicity
// for delta in {0,1}.
ConjectureReport conjecture_check(const TropicalCurve& curve, long long g, int delta);

} // namespace tropcount

#endif
