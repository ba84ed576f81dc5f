#include "tropcount/motvol.hpp"

#include "tropcount/errors.hpp"

namespace tropcount {

int chi_prime(const PolyhedronDescriptor& p) {
    if (p.dim < 0) throw ValidationError("polyhedron dimension must be nonnegative");
    if (p.affine_subspace && p.bounded && p.dim > 0)
        throw ValidationError("a bounded affine subspace must have dimension 0");
    if (p.bounded) return p.dim % 2 == 0 ? 1 : -1;
    if (p.affine_subspace) return 1;
    return 0;
}

namespace {
MotivicClass one_minus_L_pow(int k) {
    MotivicClass r(1);
    MotivicClass f = MotivicClass(1) - MotivicClass::L();
    for (int i = 0; i < k; ++i) r = r * f;
    return r;
}
} // namespace

MotivicClass cell_volume(const CellDatum& c, VolumeVariant variant) {
    if (c.rec_dim < 0 || c.rec_dim > c.dim)
        throw ValidationError("recession dimension must lie in [0, dim]");
    switch (variant) {
        case VolumeVariant::bounded_cell: {
            if (c.rec_dim > 0) return MotivicClass();  // unbounded cells contribute 0
            return c.dim % 2 == 0 ? c.in_class : -c.in_class;
        }
        case VolumeVariant::closure: {
            MotivicClass v = (c.dim - c.rec_dim) % 2 == 0 ? c.in_class : -c.in_class;
            return v.localized(c.rec_dim);
        }
        case VolumeVariant::stratum: {
            return c.in_class * one_minus_L_pow(c.dim - c.rec_dim);
        }
    }
    throw InternalError("unknown volume variant");
}

MotivicClass complex_volume(const std::vector<CellDatum>& cells, VolumeVariant variant) {
    MotivicClass total;
    for (const auto& c : cells) total += cell_volume(c, variant);
    if (variant == VolumeVariant::closure) total = total.reduced();
    return total;
}

MotivicClass semistable_volume(const std::vector<StratumDatum>& strata) {
    MotivicClass total;
    for (const auto& s : strata) {
        if (s.depth < 1) throw ValidationError("stratum depth must be at least 1");
        total += s.stratum_class * one_minus_L_pow(s.depth - 1);
    }
    return total;
}

} // namespace tropcount
