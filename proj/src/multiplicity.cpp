#include "tropcount/multiplicity.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropcount/errors.hpp"

namespace tropcount {

Json CountRecord::to_json() const {
    Json j;
    j["classical"] = classical.get_str();
    j["refined"] = refined.to_json();
    j["welschinger"] = welschinger.get_str();
    return j;
}

HalfLaurent quantum_integer(long long m) {
    if (m < 1) throw ValidationError("quantum integer needs m >= 1");
    HalfLaurent q;
    for (long long e = m - 1; e >= -(m - 1); e -= 2) q += HalfLaurent::half_power((int)e);
    return q;
}

CountRecord refined_multiplicity(const TropicalCurve& curve) {
    CountRecord rec;
    rec.classical = 1;
    rec.refined = HalfLaurent(1);
    for (int v = 0; v < (int)curve.vertices.size(); ++v) {
        int val = curve.valence(v);
        if (val == 4 && curve.crossing(v)) continue;  // factor 1
        if (val != 3)
            throw ValidationError("refined multiplicity needs a simple curve");
        long long m = vertex_multiplicity(curve, v);
        rec.classical *= make_int(m);
        rec.refined *= quantum_integer(m);
    }
    if (!rec.refined.integral())
        throw InternalError("refined multiplicity has half-integer exponents");
    rec.welschinger = rec.refined.at_minus_one();
    return rec;
}

Json SeveriTotals::to_json() const {
    Json j;
    j["refined_total"] = refined_total.to_json();
    j["classical_total"] = classical_total.get_str();
    j["welschinger_total"] = welschinger_total.get_str();
    Json pc = Json::array();
    for (const auto& r : per_curve) pc.push_back(r.to_json());
    j["per_curve"] = pc;
    return j;
}

SeveriTotals severi(const EnumerationResult& result, int jobs) {
    SeveriTotals t;
    t.per_curve.resize(result.curves.size());
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
    omp_set_num_threads(std::max(1, jobs));
#else
    (void)jobs;
#endif
#pragma omp parallel for schedule(static)
    for (int i = 0; i < (int)result.curves.size(); ++i) {
        try {
            t.per_curve[i] = refined_multiplicity(result.curves[i]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    t.classical_total = 0;
    t.welschinger_total = 0;
    for (const auto& r : t.per_curve) {
        t.refined_total += r.refined;
        t.classical_total += r.classical;
        t.welschinger_total += r.welschinger;
    }
    if (t.refined_total.at_one() != t.classical_total)
        throw InternalError("refined total does not specialize to the classical total");
    return t;
}

} // namespace tropcount
