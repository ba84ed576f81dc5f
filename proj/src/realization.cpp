#include "tropcount/realization.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tropcount/errors.hpp"

namespace tropcount {

std::string MarkedSubdivision::canonical_key() const {
    std::ostringstream os;
    os << sub.canonical_key() << "#m:";
    for (const Seg& s : marked)
        os << s.a.x << "," << s.a.y << "-" << s.b.x << "," << s.b.y << ";";
    return os.str();
}

std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    std::vector<int> pivot_col(rows, -1);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        Rat inv = a[rank][c];
        for (int cc = c; cc < cols; ++cc) a[rank][cc] /= inv;
        b[rank] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat f = a[r][c];
            for (int cc = c; cc < cols; ++cc) a[r][cc] -= f * a[rank][cc];
            b[r] -= f * b[rank];
        }
        pivot_col[rank] = c;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (b[r] != 0) return std::nullopt;

    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;

    LinearSolution sol;
    sol.x.assign(cols, Rat(0));
    for (int r = 0; r < rank; ++r) sol.x[pivot_col[r]] = b[r];
    sol.free_vars = cols - rank;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> k(cols, Rat(0));
        k[c] = 1;
        for (int r = 0; r < rank; ++r) k[pivot_col[r]] = -a[r][c];
        sol.kernel.push_back(std::move(k));
    }
    return sol;
}

bool strict_system_feasible(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return true;
    int vars = (int)rows[0].size() - 1;
    for (int v = 0; v < vars; ++v) {
        std::vector<std::vector<Rat>> pos, neg, rest;
        for (auto& r : rows) {
            if (r[v] > 0) pos.push_back(r);
            else if (r[v] < 0) neg.push_back(r);
            else rest.push_back(r);
        }
        // combine each (lower, upper) pair
        for (const auto& p : pos)
            for (const auto& n : neg) {
                std::vector<Rat> comb(vars + 1, Rat(0));
                // p: a t + ... > 0 with a > 0 gives t > -(...)/a
                // n: -b t + ... > 0 with b > 0 gives t < (...)/b
                Rat a = p[v], b = -n[v];
                for (int c = 0; c <= vars; ++c) comb[c] = p[c] * b + n[c] * a;
                comb[v] = 0;
                rest.push_back(std::move(comb));
            }
        rows = std::move(rest);
        if (rows.empty()) return true;
    }
    for (const auto& r : rows)
        if (!(r.back() > 0)) return false;
    return true;
}

namespace {

struct EdgeIncidence {
    Seg seg;
    int cell_a;
    int cell_b;  // -1 boundary
};

} // namespace

RealizeResult realize(const MarkedSubdivision& ms, const std::vector<QVec>& points) {
    RealizeResult out;
    const NewtonSubdivision& sub = ms.sub;
    if (points.size() != ms.marked.size())
        throw InternalError("marking count differs from point count");

    std::vector<IVec> verts = sub.subdivision_vertices();
    std::map<IVec, int> vidx;
    for (int i = 0; i < (int)verts.size(); ++i) vidx[verts[i]] = i;
    const int n = (int)verts.size();

    // Equations over the lifting values: gauge, one per marked point, one
    // per parallelogram cell.
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> B;
    {
        std::vector<Rat> row(n, Rat(0));
        row[0] = 1;  // gauge: lift at the lex-min vertex is 0
        A.push_back(row);
        B.push_back(Rat(0));
    }
    for (std::size_t j = 0; j < points.size(); ++j) {
        const Seg& sgm = ms.marked[j];
        auto ia = vidx.find(sgm.a), ib = vidx.find(sgm.b);
        if (ia == vidx.end() || ib == vidx.end())
            throw InternalError("marked edge endpoint is not a subdivision vertex");
        std::vector<Rat> row(n, Rat(0));
        // lift(a) + <a,p> = lift(b) + <b,p>
        row[ia->second] += 1;
        row[ib->second] -= 1;
        A.push_back(row);
        B.push_back(dot(sgm.b, points[j]) - dot(sgm.a, points[j]));
    }
    for (const auto& cell : sub.cells) {
        if (!cell.is_parallelogram()) continue;
        std::vector<Rat> row(n, Rat(0));
        row[vidx.at(cell.verts[0])] += 1;
        row[vidx.at(cell.verts[2])] += 1;
        row[vidx.at(cell.verts[1])] -= 1;
        row[vidx.at(cell.verts[3])] -= 1;
        A.push_back(row);
        B.push_back(Rat(0));
    }

    auto sol = solve_linear(std::move(A), std::move(B));
    if (!sol) return out;  // infeasible

    // Strict inequalities: secondary-cone facets and open-edge conditions.
    // Each row is c . t + d > 0 over the free parameters.
    const int fv = sol->free_vars;
    auto lift_at = [&](int vi) {
        std::vector<Rat> expr(fv + 1, Rat(0));
        expr[fv] = sol->x[vi];
        for (int k = 0; k < fv; ++k) expr[k] = sol->kernel[k][vi];
        return expr;
    };

    std::vector<std::vector<Rat>> ineqs;

    // Affine extension of a cell's lifting evaluated at vertex u, minus the
    // lift at u; must be negative (lifted points sit strictly above).
    auto add_cell_inequalities = [&](const Cell& cell) {
        IVec u0 = cell.verts[0], u1 = cell.verts[1], u2 = cell.verts[2];
        long long det = cross(u1 - u0, u2 - u0);
        auto l0 = lift_at(vidx.at(u0));
        auto l1 = lift_at(vidx.at(u1));
        auto l2 = lift_at(vidx.at(u2));
        for (IVec u : verts) {
            bool in_cell = std::find(cell.verts.begin(), cell.verts.end(), u) != cell.verts.end();
            if (in_cell) continue;
            // barycentric coordinates of u in the (u0,u1,u2) frame
            long long w1 = cross(u - u0, u2 - u0);
            long long w2 = cross(u1 - u0, u - u0);
            long long w0 = det - w1 - w2;
            // det * (lift(u) - ell(u)) > 0  (with orientation det > 0)
            std::vector<Rat> row(fv + 1, Rat(0));
            auto lu = lift_at(vidx.at(u));
            for (int k = 0; k <= fv; ++k)
                row[k] = make_rat(det) * lu[k] -
                         (make_rat(w0) * l0[k] + make_rat(w1) * l1[k] + make_rat(w2) * l2[k]);
            if (det < 0)
                for (auto& x : row) x = -x;
            ineqs.push_back(std::move(row));
        }
    };
    for (const auto& cell : sub.cells) add_cell_inequalities(cell);

    // Marked points must lie in the open dual edge: every other vertex's
    // monomial stays strictly larger at the point.
    for (std::size_t j = 0; j < points.size(); ++j) {
        const Seg& sgm = ms.marked[j];
        auto la = lift_at(vidx.at(sgm.a));
        Rat base_lin = dot(sgm.a, points[j]);
        for (IVec u : verts) {
            if (u == sgm.a || u == sgm.b) continue;
            auto lu = lift_at(vidx.at(u));
            std::vector<Rat> row(fv + 1, Rat(0));
            for (int k = 0; k <= fv; ++k) row[k] = lu[k] - la[k];
            row[fv] += dot(u, points[j]) - base_lin;
            ineqs.push_back(std::move(row));
        }
    }

    if (fv > 0) {
        if (strict_system_feasible(ineqs)) {
            out.status = RealizeStatus::underdetermined;
        }
        return out;
    }

    for (const auto& row : ineqs)
        if (!(row[0] > 0)) return out;  // infeasible

    // Unique lifting, all strict: build the curve with markings.
    Lifting lift;
    for (int i = 0; i < n; ++i) lift[verts[i]] = sol->x[i];
    NewtonSubdivision realized = sub;
    realized.lifting = lift;
    TropicalCurve curve = curve_from_subdivision(realized);

    for (std::size_t j = 0; j < points.size(); ++j) {
        const Seg& sgm = ms.marked[j];
        int ei = -1;
        for (int e = 0; e < (int)curve.edges.size(); ++e)
            if (curve.edges[e].dual == sgm) {
                ei = e;
                break;
            }
        if (ei < 0) throw InternalError("marked edge lost in curve construction");
        const auto& ed = curve.edges[ei];
        QVec d = points[j] - curve.vertices[ed.a];
        Rat param = (ed.dir.x != 0) ? d.x / make_rat(ed.dir.x) : d.y / make_rat(ed.dir.y);
        curve.markings.push_back({points[j], ei, param});
    }
    out.status = RealizeStatus::realized;
    out.curve = std::move(curve);
    return out;
}

} // namespace tropcount
