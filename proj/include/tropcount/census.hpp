#ifndef TROPCOUNT_CENSUS_HPP
#define TROPCOUNT_CENSUS_HPP

#include <map>
#include <string>

#include "tropcount/curve.hpp"

namespace tropcount {

enum class CaseId { FourValent, Weight2Marked, Weight2Unmarked, Mult3Vertex, Smooth };

std::string to_string(CaseId c);
CaseId case_from_string(const std::string& s);

// Face counts of a classified curve. For one-node curves the counts follow
// closed formulas in the doubled area A and the interior count g:
//   FourValent:       bounded A-2+g, unbounded A+2-2g, trivalent A-2, one crossing
//   Weight2(Un)Marked: bounded weight-1 A-5+g, unbounded A+2-2g,
//                      off-edge A-4, two on-edge vertices, one weight-2 edge
//   Mult3Vertex:      bounded A-4+g, unbounded A+2-2g, ordinary A-3, one special
struct FaceCensus {
    CaseId case_id = CaseId::Smooth;
    std::map<std::string, long long> counts;
    long long doubled_area = 0;   // A of the underlying polygon
    long long interior_points = 0;

    Json to_json() const;
};

// Classify a simple curve with delta in {0,1}. For delta = 1 exactly one
// special feature must be present; anything else raises a classification
// error.
FaceCensus face_census(const TropicalCurve& curve, int delta);

// Census built from the closed formulas; used for identity checks at
// arbitrary (A, g).
FaceCensus census_from_formulas(CaseId case_id, long long A, long long g);

// Verifies counts against the closed formulas for the stored (A, g).
bool census_matches_formulas(const FaceCensus& census);

} // namespace tropcount

#endif
