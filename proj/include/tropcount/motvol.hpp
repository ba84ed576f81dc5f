#ifndef TROPCOUNT_MOTVOL_HPP
#define TROPCOUNT_MOTVOL_HPP

#include <vector>

#include "tropcount/motivic.hpp"

namespace tropcount {

// Combinatorial shadow of a polyhedron: all the volume formulas need.
struct PolyhedronDescriptor {
    int dim = 0;
    bool bounded = false;
    bool affine_subspace = false;
};

// o-minimal Euler characteristic of a relatively open polyhedron:
// (-1)^dim when bounded, 1 for an affine subspace, 0 otherwise.
int chi_prime(const PolyhedronDescriptor& p);

// Per-cell data: the initial-degeneration class (or stratum class for the
// stratum variant) with the cell dimension and recession-cone dimension.
struct CellDatum {
    MotivicClass in_class;
    int dim = 0;
    int rec_dim = 0;
};

enum class VolumeVariant {
    bounded_cell,  // (-1)^dim [in] on bounded cells, 0 on unbounded
    closure,       // (-1)^(dim-rec) [in] / (L-1)^rec
    stratum,       // (1-L)^(dim-rec) [stratum]
};

MotivicClass cell_volume(const CellDatum& c, VolumeVariant variant);

// Sum of cell volumes; the closure variant reduces the localization when
// the total divides exactly.
MotivicClass complex_volume(const std::vector<CellDatum>& cells, VolumeVariant variant);

// Strictly semistable degeneration: strata E_J with depth |J|.
struct StratumDatum {
    MotivicClass stratum_class;
    int depth = 1;
};

// Vol = sum over strata of [E_J](1-L)^(|J|-1).
MotivicClass semistable_volume(const std::vector<StratumDatum>& strata);

} // namespace tropcount

#endif
