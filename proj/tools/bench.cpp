// Compares the lattice-path kernel (serial and threaded) against the
// brute-force reference on small standard instances.

#include <chrono>
#include <optional>
#include <iostream>

#include "tropcount/multiplicity.hpp"

using namespace tropcount;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

LatticePolygon dilated_triangle(long long d) {
    return LatticePolygon({{0, 0}, {d, 0}, {0, d}});
}

void run_case(const char* name, const LatticePolygon& poly, int delta, bool with_brute,
              int max_jobs) {
    PointConfiguration config = default_configuration(poly, delta);
    std::cout << name << " delta=" << delta << "\n";

    std::optional<EnumerationResult> reference;
    for (int jobs : {1, max_jobs}) {
        EnumerateOptions opt;
        opt.engine = Engine::lattice_path;
        opt.jobs = jobs;
        auto t0 = std::chrono::steady_clock::now();
        EnumerationResult res = enumerate_curves(poly, delta, config, opt);
        auto t1 = std::chrono::steady_clock::now();
        SeveriTotals totals = severi(res, jobs);
        std::cout << "  lattice-path jobs=" << jobs << ": " << res.curves.size() << " curves, n="
                  << totals.classical_total.get_str() << ", " << seconds(t0, t1) << " s\n";
        if (jobs == max_jobs && max_jobs != 1 && reference) {
            bool same = res.curves.size() == reference->curves.size();
            for (std::size_t i = 0; same && i < res.curves.size(); ++i)
                same = res.curves[i].canonical_key() == reference->curves[i].canonical_key();
            std::cout << "  threaded output identical: " << (same ? "yes" : "NO") << "\n";
        }
        if (jobs == 1) reference = std::move(res);
    }

    if (with_brute && reference) {
        EnumerateOptions opt;
        opt.engine = Engine::brute_force;
        opt.jobs = 1;
        auto t0 = std::chrono::steady_clock::now();
        EnumerationResult res = enumerate_curves(poly, delta, config, opt);
        auto t1 = std::chrono::steady_clock::now();
        bool same = res.curves.size() == reference->curves.size();
        for (std::size_t i = 0; same && i < res.curves.size(); ++i)
            same = res.curves[i].canonical_key() == reference->curves[i].canonical_key();
        std::cout << "  brute-force reference: " << res.curves.size() << " curves, "
                  << seconds(t0, t1) << " s, agrees: " << (same ? "yes" : "NO") << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    int max_jobs = 4;
    if (argc > 1) max_jobs = std::atoi(argv[1]);

    run_case("triangle d=2", dilated_triangle(2), 0, true, max_jobs);
    run_case("triangle d=3", dilated_triangle(3), 1, true, max_jobs);
    run_case("triangle d=4", dilated_triangle(4), 1, false, max_jobs);
    run_case("square 2x2", LatticePolygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}), 1, true, max_jobs);
    return 0;
}
