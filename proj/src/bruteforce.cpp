#include "tropcount/bruteforce.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

// --- direction arcs -------------------------------------------------------

struct Arc {
    IVec s, e;  // counterclockwise from s to e, angle in (0, 2pi)
};

// Sector of a convex ccw cell at vertex index i: from the edge toward the
// next vertex, counterclockwise to the edge toward the previous one.
Arc cell_sector(const Cell& c, std::size_t i) {
    std::size_t k = c.verts.size();
    IVec p = c.verts[i];
    IVec nxt = c.verts[(i + 1) % k];
    IVec prv = c.verts[(i + k - 1) % k];
    return {primitive(nxt - p), primitive(prv - p)};
}

// --- cell placement -------------------------------------------------------

struct CandidateSet {
    std::map<IVec, std::vector<Cell>> by_corner;  // lex-min vertex -> cells
};

bool segments_overlap_1d(IVec a1, IVec a2, IVec b1, IVec b2, IVec dir, IVec& lo, IVec& hi) {
    // all points collinear along dir; returns the closed overlap if nonempty
    auto key = [&](IVec p) { return dot(dir, p); };
    long long alo = std::min(key(a1), key(a2)), ahi = std::max(key(a1), key(a2));
    long long blo = std::min(key(b1), key(b2)), bhi = std::max(key(b1), key(b2));
    long long l = std::max(alo, blo), h = std::min(ahi, bhi);
    if (l > h) return false;
    auto at = [&](long long t) {
        for (IVec p : {a1, a2, b1, b2})
            if (key(p) == t) return p;
        throw InternalError("overlap endpoint not among segment endpoints");
    };
    lo = at(l);
    hi = at(h);
    return true;
}

// Face-to-face compatibility of two convex cells: empty intersection, a
// shared vertex, or a shared full edge.
bool compatible(const Cell& A, const Cell& B) {
    auto axis_scan = [&](const Cell& P, const Cell& Q, bool& touching, const Cell*& edge_owner,
                         std::size_t& edge_idx) {
        // returns true if an axis of P strictly separates; records touching axes
        std::size_t k = P.verts.size();
        for (std::size_t i = 0; i < k; ++i) {
            IVec a = P.verts[i], b = P.verts[(i + 1) % k];
            IVec out = -rot90(b - a);  // outward normal of a ccw cell
            long long mn = dot(out, Q.verts[0] - a);
            for (IVec q : Q.verts) mn = std::min(mn, dot(out, q - a));
            if (mn > 0) return true;
            if (mn == 0 && !touching) {
                touching = true;
                edge_owner = &P;
                edge_idx = i;
            }
        }
        return false;
    };
    bool touching = false;
    const Cell* owner = nullptr;
    std::size_t ei = 0;
    if (axis_scan(A, B, touching, owner, ei)) return true;
    if (axis_scan(B, A, touching, owner, ei)) return true;
    if (!touching) return false;  // interiors overlap

    // Contact lies on the touching edge's line; classify it.
    const Cell& P = *owner;
    const Cell& Q = (&P == &A) ? B : A;
    std::size_t k = P.verts.size();
    IVec a = P.verts[ei], b = P.verts[(ei + 1) % k];
    IVec line_dir = primitive(b - a);
    IVec out = -rot90(b - a);
    // Q's points on the line
    std::vector<IVec> qline;
    for (IVec q : Q.verts)
        if (dot(out, q - a) == 0) qline.push_back(q);
    if (qline.empty()) return true;  // touch without shared points
    IVec q1 = qline.front(), q2 = qline.back();
    IVec lo, hi;
    if (!segments_overlap_1d(a, b, q1, q2, line_dir, lo, hi)) return true;
    if (lo == hi) {
        // single contact point must be a vertex of both cells
        auto is_vertex = [&](const Cell& c) {
            return std::find(c.verts.begin(), c.verts.end(), lo) != c.verts.end();
        };
        return is_vertex(A) && is_vertex(B);
    }
    // contact segment must be a full edge of both
    auto has_edge = [&](const Cell& c) {
        std::size_t n = c.verts.size();
        for (std::size_t i = 0; i < n; ++i)
            if (Seg(c.verts[i], c.verts[(i + 1) % n]) == Seg(lo, hi)) return true;
        return false;
    };
    return has_edge(A) && has_edge(B);
}

struct TilingSearch {
    const LatticePolygon& polygon;
    const std::vector<IVec>& pts;
    const CandidateSet& candidates;
    long long budget;
    std::atomic<long long>* produced;
    std::vector<std::vector<Cell>> out;

    bool point_available(IVec p, Arc& avail, bool& full_circle) const {
        const auto& vs = polygon.vertices();
        std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (vs[i] == p) {
                IVec nxt = vs[(i + 1) % n], prv = vs[(i + n - 1) % n];
                avail = {primitive(nxt - p), primitive(prv - p)};
                full_circle = false;
                return true;
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            IVec a = vs[i], b = vs[(i + 1) % n];
            if (cross(b - a, p - a) == 0 && dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0) {
                IVec d = primitive(b - a);
                avail = {d, -d};
                full_circle = false;
                return true;
            }
        }
        full_circle = true;
        return polygon.contains(p);
    }

    // First free direction at p, or nullopt when saturated. `any_free`
    // reports whether a free arc exists.
    std::optional<IVec> free_start(IVec p, const std::vector<Cell>& placed) const {
        Arc avail;
        bool full;
        if (!point_available(p, avail, full)) return std::nullopt;

        std::vector<Arc> covered;
        for (const auto& c : placed) {
            bool vertex = false;
            for (std::size_t i = 0; i < c.verts.size(); ++i)
                if (c.verts[i] == p) {
                    covered.push_back(cell_sector(c, i));
                    vertex = true;
                    break;
                }
            if (vertex) continue;
            // inside?
            if (!c.contains(p)) continue;
            bool on_edge = false;
            std::size_t k = c.verts.size();
            for (std::size_t i = 0; i < k && !on_edge; ++i) {
                IVec a = c.verts[i], b = c.verts[(i + 1) % k];
                if (cross(b - a, p - a) == 0 && dot(p - a, b - a) > 0 && dot(p - b, a - b) > 0) {
                    IVec d = primitive(b - a);
                    covered.push_back({d, -d});
                    on_edge = true;
                }
            }
            if (!on_edge) return std::nullopt;  // strictly inside: saturated
        }

        auto arc_starting_at = [&](IVec dir) -> const Arc* {
            for (const auto& a : covered)
                if (direction_eq(a.s, dir)) return &a;
            return nullptr;
        };

        if (!full) {
            IVec cur = avail.s;
            for (std::size_t guard = 0; guard <= covered.size(); ++guard) {
                if (direction_eq(cur, avail.e)) return std::nullopt;  // saturated
                const Arc* nxt = arc_starting_at(cur);
                if (!nxt) return cur;
                cur = nxt->e;
            }
            throw InternalError("covered arcs do not chain");
        }
        if (covered.empty()) return std::nullopt;  // interior point, untouched: not a corner
        // anchor at the minimal covered start
        const Arc* anchor = &covered[0];
        for (const auto& a : covered)
            if (direction_less(a.s, anchor->s)) anchor = &a;
        IVec cur = anchor->e;
        for (std::size_t guard = 0; guard <= covered.size(); ++guard) {
            if (direction_eq(cur, anchor->s)) return std::nullopt;  // full circle covered
            const Arc* nxt = arc_starting_at(cur);
            if (!nxt) return cur;
            cur = nxt->e;
        }
        throw InternalError("covered arcs do not chain around");
    }

    void run(std::vector<Cell>& placed) {
        // find the lexicographically first point with a free direction
        for (IVec p : pts) {
            auto sigma = free_start(p, placed);
            if (!sigma) continue;
            auto it = candidates.by_corner.find(p);
            if (it == candidates.by_corner.end()) return;  // stuck
            for (const Cell& c : it->second) {
                if (!direction_eq(primitive(c.verts[1] - c.verts[0]), *sigma)) continue;
                bool ok = true;
                for (const auto& pc : placed)
                    if (!compatible(c, pc)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                placed.push_back(c);
                run(placed);
                placed.pop_back();
            }
            return;  // all extensions at the unique active corner tried
        }
        // no free point: complete tiling
        out.push_back(placed);
        if (produced && ++*produced > budget)
            throw ResourceError("tiling enumeration exceeded the budget");
    }
};

CandidateSet build_candidates(const LatticePolygon& polygon) {
    const auto& pts = polygon.lattice_points();
    std::set<Cell> cells;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                if (cross(pts[j] - pts[i], pts[k] - pts[i]) == 0) continue;
                Cell c;
                c.verts = {pts[i], pts[j], pts[k]};
                c.canonicalize();
                cells.insert(c);
            }
    // parallelograms: v, v+e1, v+e1+e2, v+e2
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (j == i || k == i || k == j) continue;
                IVec v = pts[i], e1 = pts[j] - pts[i], e2 = pts[k] - pts[i];
                if (cross(e1, e2) <= 0) continue;
                IVec far = v + e1 + e2;
                if (!polygon.contains(far)) continue;
                Cell c;
                c.verts = {v, v + e1, far, v + e2};
                c.canonicalize();
                cells.insert(c);
            }
    CandidateSet cs;
    for (const auto& c : cells) cs.by_corner[c.verts[0]].push_back(c);
    return cs;
}

// --- union-find with rational potentials -----------------------------------

struct PotDSU {
    std::vector<int> parent, rnk;
    std::vector<Rat> pot;  // lift(v) - lift(parent(v))
    struct Undo {
        int child;
        int root;
        int old_rank;
    };
    std::vector<Undo> log;

    explicit PotDSU(int n) : parent(n), rnk(n, 0), pot(n, Rat(0)) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    std::pair<int, Rat> find(int v) const {
        Rat off(0);
        while (parent[v] != v) {
            off += pot[v];
            v = parent[v];
        }
        return {v, off};
    }
    // lift(a) - lift(b) = delta; returns false on contradiction
    bool unite(int a, int b, const Rat& delta) {
        auto [ra, oa] = find(a);
        auto [rb, ob] = find(b);
        if (ra == rb) return oa - ob == delta;
        if (rnk[ra] > rnk[rb]) {
            // attach rb under ra: lift(rb) = oa + lift(ra) - delta - ob
            log.push_back({rb, ra, rnk[ra]});
            parent[rb] = ra;
            pot[rb] = oa - ob - delta;  // lift(rb) - lift(ra)
        } else {
            log.push_back({ra, rb, rnk[rb]});
            parent[ra] = rb;
            pot[ra] = delta - oa + ob;  // lift(ra) - lift(rb)
            if (rnk[ra] == rnk[rb]) ++rnk[rb];
        }
        return true;
    }
    std::size_t mark() const { return log.size(); }
    void rollback(std::size_t m) {
        while (log.size() > m) {
            auto u = log.back();
            log.pop_back();
            parent[u.child] = u.child;
            pot[u.child] = Rat(0);
            rnk[u.root] = u.old_rank;
        }
    }
};

struct MarkingSearch {
    const NewtonSubdivision& sub;
    const std::vector<QVec>& points;
    std::vector<Seg> edges;
    std::map<IVec, int> vidx;
    std::vector<TropicalCurve>* out;
    bool* non_generic;

    // flattened geometry for the pruning checks
    std::vector<IVec> vlist;
    std::vector<std::pair<int, int>> edge_idx;     // edge -> vertex indices
    struct CellIdx {
        std::vector<int> verts;
        bool pgram;
        long long det;                 // doubled area of the frame triangle
        std::vector<long long> bary;   // barycentric weights per vertex w
    };
    std::vector<CellIdx> cellidx;

    void prepare() {
        vlist.resize(vidx.size());
        for (const auto& [v, i] : vidx) vlist[i] = v;
        for (const Seg& s : edges) edge_idx.push_back({vidx.at(s.a), vidx.at(s.b)});
        for (const auto& c : sub.cells) {
            CellIdx ci;
            for (IVec v : c.verts) ci.verts.push_back(vidx.at(v));
            ci.pgram = c.is_parallelogram();
            ci.det = cross(c.verts[1] - c.verts[0], c.verts[2] - c.verts[0]);
            cellidx.push_back(std::move(ci));
        }
    }

    void run() {
        prepare();
        PotDSU dsu((int)vidx.size());
        std::vector<int> chosen(points.size(), -1);
        std::vector<bool> used(edges.size(), false);
        rec(0, dsu, chosen, used);
    }

    // Inequalities decidable from the potentials: marked points must stay
    // strictly minimal on their edge pair, lifted points strictly above
    // every settled cell plane, parallelogram lifts coplanar.
    bool partial_ok(const PotDSU& dsu, const std::vector<int>& chosen, std::size_t upto) const {
        const int n = (int)vlist.size();
        std::vector<int> root(n);
        std::vector<Rat> off(n);
        for (int i = 0; i < n; ++i) {
            auto [r, o] = dsu.find(i);
            root[i] = r;
            off[i] = o;
        }
        for (std::size_t i = 0; i < upto; ++i) {
            auto [ua, ub] = edge_idx[chosen[i]];
            for (int w = 0; w < n; ++w) {
                if (w == ua || w == ub || root[w] != root[ua]) continue;
                // lift(w) + <w,p> > lift(ua) + <ua,p>
                if (off[w] - off[ua] <= dot(vlist[ua] - vlist[w], points[i])) return false;
            }
        }
        for (const auto& ci : cellidx) {
            int r0 = root[ci.verts[0]];
            bool settled = true;
            for (int v : ci.verts)
                if (root[v] != r0) settled = false;
            if (!settled) continue;
            if (ci.pgram) {
                if (off[ci.verts[0]] + off[ci.verts[2]] != off[ci.verts[1]] + off[ci.verts[3]])
                    return false;
            }
            int a = ci.verts[0], b = ci.verts[1], c = ci.verts[2];
            IVec va = vlist[a], vb = vlist[b], vc = vlist[c];
            for (int w = 0; w < n; ++w) {
                if (root[w] != r0) continue;
                bool inside = false;
                for (int v : ci.verts)
                    if (v == w) inside = true;
                if (inside) continue;
                long long w1 = cross(vlist[w] - va, vc - va);
                long long w2 = cross(vb - va, vlist[w] - va);
                long long w0 = ci.det - w1 - w2;
                // det*lift(w) > w0*lift(a) + w1*lift(b) + w2*lift(c)
                Rat lhs = make_rat(ci.det) * off[w];
                Rat rhs = make_rat(w0) * off[a] + make_rat(w1) * off[b] + make_rat(w2) * off[c];
                if (lhs <= rhs) return false;
            }
        }
        return true;
    }

    void rec(std::size_t j, PotDSU& dsu, std::vector<int>& chosen, std::vector<bool>& used) {
        if (j == points.size()) {
            MarkedSubdivision ms{sub, {}};
            for (int e : chosen) ms.marked.push_back(edges[e]);
            auto res = realize(ms, points);
            if (res.status == RealizeStatus::realized)
                out->push_back(std::move(*res.curve));
            else if (res.status == RealizeStatus::underdetermined)
                *non_generic = true;
            return;
        }
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (used[e]) continue;
            const Seg& s = edges[e];
            Rat delta = dot(s.b, points[j]) - dot(s.a, points[j]);  // lift(a)-lift(b)
            auto m = dsu.mark();
            if (dsu.unite(vidx.at(s.a), vidx.at(s.b), delta)) {
                chosen[j] = (int)e;
                if (partial_ok(dsu, chosen, j + 1)) {
                    used[e] = true;
                    rec(j + 1, dsu, chosen, used);
                    used[e] = false;
                }
            }
            dsu.rollback(m);
        }
    }
};

} // namespace

std::vector<NewtonSubdivision> enumerate_tilings(const LatticePolygon& polygon, long long budget) {
    CandidateSet cs = build_candidates(polygon);
    std::atomic<long long> produced{0};
    TilingSearch search{polygon, polygon.lattice_points(), cs, budget, &produced, {}};
    std::vector<Cell> placed;
    search.run(placed);
    std::vector<NewtonSubdivision> out;
    out.reserve(search.out.size());
    for (auto& cells : search.out) {
        NewtonSubdivision s{polygon, std::move(cells), {}};
        s.canonicalize();
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const NewtonSubdivision& a, const NewtonSubdivision& b) {
        return a.canonical_key() < b.canonical_key();
    });
    return out;
}

BruteForceResult brute_force_curves(const LatticePolygon& polygon, int target_genus,
                                    const std::vector<QVec>& points, long long budget, int jobs) {
    auto tilings = enumerate_tilings(polygon, budget);

    std::vector<const NewtonSubdivision*> eligible;
    for (const auto& t : tilings) {
        bool cells_ok = true;
        for (const auto& c : t.cells)
            if (!(c.is_triangle() || c.is_parallelogram())) cells_ok = false;
        if (!cells_ok) continue;
        auto topo = dual_topology(t);
        if (!topo.connected || topo.genus != target_genus) continue;
        if (t.edge_records().size() < points.size()) continue;
        eligible.push_back(&t);
    }

    std::vector<std::vector<TropicalCurve>> found(eligible.size());
    std::atomic<bool> non_generic{false};
    std::exception_ptr failure = nullptr;

#ifdef _OPENMP
    omp_set_num_threads(std::max(1, jobs));
#else
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < (int)eligible.size(); ++i) {
        try {
            const NewtonSubdivision& sub = *eligible[i];
            MarkingSearch ms{sub, points, {}, {}, nullptr, nullptr};
            for (const auto& er : sub.edge_records()) ms.edges.push_back(er.seg);
            auto verts = sub.subdivision_vertices();
            for (int v = 0; v < (int)verts.size(); ++v) ms.vidx[verts[v]] = v;
            bool ng = false;
            ms.out = &found[i];
            ms.non_generic = &ng;
            ms.run();
            if (ng) non_generic = true;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    if (non_generic)
        throw GenericityError(
            "a positive-dimensional family of curves passes through the configuration");

    BruteForceResult res;
    for (auto& f : found)
        for (auto& c : f) res.curves.push_back(std::move(c));
    std::sort(res.curves.begin(), res.curves.end(),
              [](const TropicalCurve& a, const TropicalCurve& b) {
                  return a.canonical_key() < b.canonical_key();
              });
    return res;
}

} // namespace tropcount
