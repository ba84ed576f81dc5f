#include "tropcount/latticepath.hpp"

#include <algorithm>
#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

using Path = std::vector<IVec>;

// Chain of boundary vertices from the order-minimal to the order-maximal
// vertex, walking the polygon either way.
Path boundary_chain(const LatticePolygon& poly, IVec from, IVec to, bool ccw) {
    const auto& vs = poly.vertices();
    int n = (int)vs.size();
    int i = 0;
    while (!(vs[i] == from)) ++i;
    Path chain{from};
    while (!(chain.back() == to)) {
        i = ccw ? (i + 1) % n : (i + n - 1) % n;
        chain.push_back(vs[i]);
    }
    return chain;
}

bool on_segment(IVec a, IVec b, IVec p) {
    if (cross(b - a, p - a) != 0) return false;
    return dot(p - a, b - a) >= 0 && dot(p - b, a - b) >= 0;
}

bool path_on_chain(const Path& path, const Path& chain) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        bool ok = false;
        for (std::size_t c = 0; c + 1 < chain.size() && !ok; ++c)
            ok = on_segment(chain[c], chain[c + 1], path[i]) &&
                 on_segment(chain[c], chain[c + 1], path[i + 1]);
        if (!ok) return false;
    }
    return true;
}

struct SideExpander {
    const LatticePolygon& polygon;
    const Path& chain;
    int sign;  // +1: compress left turns, -1: right turns
    std::vector<std::vector<Cell>> out;
    std::atomic<long long>* emitted;
    long long budget;

    void run(Path path, std::vector<Cell> cells) {
        if (path_on_chain(path, chain)) {
            out.push_back(std::move(cells));
            if (emitted && ++*emitted > budget)
                throw ResourceError("lattice path expansion exceeded the cell budget");
            return;
        }
        int j = -1;
        for (int i = 1; i + 1 < (int)path.size(); ++i) {
            long long turn = cross(path[i] - path[i - 1], path[i + 1] - path[i]);
            if (sign * turn > 0) {
                j = i;
                break;
            }
        }
        if (j < 0) return;  // dead end

        IVec a = path[j - 1], v = path[j], b = path[j + 1];

        {
            Cell tri;
            tri.verts = {a, v, b};
            tri.canonicalize();
            Path shorter;
            shorter.reserve(path.size() - 1);
            for (int i = 0; i < (int)path.size(); ++i)
                if (i != j) shorter.push_back(path[i]);
            auto cs = cells;
            cs.push_back(tri);
            run(std::move(shorter), std::move(cs));
        }
        IVec star = a + b - v;
        if (polygon.contains(star)) {
            Cell pg;
            pg.verts = {a, v, b, star};
            pg.canonicalize();
            Path moved = path;
            moved[j] = star;
            auto cs = std::move(cells);
            cs.push_back(pg);
            run(std::move(moved), std::move(cs));
        }
    }
};

} // namespace

std::vector<MarkedSubdivision> lattice_path_subdivisions(const LatticePolygon& polygon,
                                                         int path_length,
                                                         const OrderFunctional& order,
                                                         long long budget, int jobs) {
    std::vector<IVec> pts = polygon.lattice_points();
    std::sort(pts.begin(), pts.end(), [&](IVec a, IVec b) { return order.less(a, b); });
    const int total = (int)pts.size();
    if (path_length < 1 || path_length + 1 > total)
        throw ValidationError("path length out of range for this polygon");

    // Choose which middle points the path visits; the order is forced.
    std::vector<Path> paths;
    std::vector<int> pick(path_length - 1);
    std::function<void(int, int)> choose = [&](int start, int k) {
        if (k == path_length - 1) {
            Path p{pts.front()};
            for (int i : pick) p.push_back(pts[i]);
            p.push_back(pts.back());
            paths.push_back(std::move(p));
            return;
        }
        for (int i = start; i < total - 1; ++i) {
            pick[k] = i;
            choose(i + 1, k + 1);
        }
    };
    choose(1, 0);

    Path left_chain = boundary_chain(polygon, pts.front(), pts.back(), false);
    Path right_chain = boundary_chain(polygon, pts.front(), pts.back(), true);

    std::atomic<long long> emitted{0};
    std::vector<std::vector<MarkedSubdivision>> results((std::size_t)paths.size());
    std::exception_ptr failure = nullptr;

#ifdef _OPENMP
    omp_set_num_threads(std::max(1, jobs));
#else
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic)
    for (int pi = 0; pi < (int)paths.size(); ++pi) {
        try {
            const Path& path = paths[pi];
            SideExpander left{polygon, left_chain, +1, {}, &emitted, budget};
            left.run(path, {});
            if (left.out.empty()) continue;
            SideExpander right{polygon, right_chain, -1, {}, &emitted, budget};
            right.run(path, {});
            for (const auto& lc : left.out)
                for (const auto& rc : right.out) {
                    MarkedSubdivision ms{{polygon, {}, {}}, {}};
                    ms.sub.cells = lc;
                    ms.sub.cells.insert(ms.sub.cells.end(), rc.begin(), rc.end());
                    ms.sub.canonicalize();
                    for (std::size_t i = 0; i + 1 < path.size(); ++i)
                        ms.marked.emplace_back(path[i], path[i + 1]);
                    results[pi].push_back(std::move(ms));
                }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<MarkedSubdivision> all;
    for (auto& r : results)
        for (auto& ms : r) all.push_back(std::move(ms));
    std::sort(all.begin(), all.end(), [](const MarkedSubdivision& a, const MarkedSubdivision& b) {
        return a.canonical_key() < b.canonical_key();
    });
    return all;
}

} // namespace tropcount
