#include "tropcount/zeta.hpp"

#include "tropcount/errors.hpp"

namespace tropcount {

namespace {

HalfLaurent y_poly(ZetaVariant variant, int k) {
    // y^k, or 1 for the euler variant
    return variant == ZetaVariant::chi_y ? HalfLaurent::power(k) : HalfLaurent(1);
}

// S(q) = q / ((1-q)(1-qy)) = sum_{i>=1} (1 + y + ... + y^(i-1)) q^i
SeriesY S_series(int order, ZetaVariant variant) {
    SeriesY s(1, order);
    HalfLaurent h;
    for (int i = 1; i < order; ++i) {
        h += y_poly(variant, i - 1);
        s.set_coeff(i, h);
    }
    return s;
}

// S(q)^m with exponents exact on [m, window). Negative powers use the
// exact Laurent polynomial S^-1 = q^-1 (1-q)(1-qy).
SeriesY S_power(long long m, int window, ZetaVariant variant) {
    int reps = (int)(m > 0 ? m : -m);
    int W = window + reps + 2;
    SeriesY acc(0, W);
    acc.set_coeff(0, HalfLaurent(1));
    if (m == 0) return acc;
    SeriesY base;
    if (m > 0) {
        base = S_series(W, variant);
    } else {
        base = SeriesY(-1, W);
        base.set_coeff(-1, HalfLaurent(1));
        base.set_coeff(0, HalfLaurent(-1) - y_poly(variant, 1));
        base.set_coeff(1, y_poly(variant, 1));
    }
    for (int i = 0; i < reps; ++i) acc = acc * base;
    return acc;
}

} // namespace

Json ZetaInput::to_json() const {
    Json j;
    j["g"] = g;
    j["order"] = order;
    Json hc = Json::array();
    for (const auto& h : hilb_chi) hc.push_back(h.to_json());
    j["hilb_chi"] = hc;
    return j;
}

ZetaInput ZetaInput::from_json(const Json& j) {
    ZetaInput z;
    z.g = j.at("g").get<long long>();
    if (j.contains("order")) z.order = j["order"].get<int>();
    for (const auto& h : j.at("hilb_chi")) z.hilb_chi.push_back(HalfLaurent::from_json(h));
    if (z.order == 0) z.order = (int)z.hilb_chi.size();
    return z;
}

void ZetaInput::validate() const {
    if (g < 0) throw ValidationError("genus must be nonnegative");
    if ((int)hilb_chi.size() != order)
        throw ValidationError("hilb_chi must carry exactly `order` coefficients");
    if (order < 2 * g + 2)
        throw ValidationError("truncation order " + std::to_string(order) +
                              " is insufficient; need order >= " + std::to_string(2 * g + 2));
}

Json ZetaCoefficients::to_json() const {
    Json j;
    Json ns = Json::array();
    for (const auto& n : N) ns.push_back(n.to_json());
    j["N"] = ns;
    j["determinable"] = determinable;
    return j;
}

ZetaCoefficients invert_series(const ZetaInput& input, ZetaVariant variant) {
    input.validate();
    const int g = (int)input.g;
    const int order = input.order;  // coefficients i = 0..order-1
    // Z as a series in q with window [1-g, order+1-g)
    SeriesY Z(1 - g, order + 1 - g);
    for (int i = 0; i < order; ++i) {
        HalfLaurent c = input.hilb_chi[i];
        if (variant == ZetaVariant::euler) c = HalfLaurent(c.at_one());
        Z.set_coeff(i + 1 - g, c);
    }

    ZetaCoefficients out;
    out.determinable = order;
    SeriesY residual = Z;
    for (int r = 0; r < order; ++r) {
        HalfLaurent nr = residual.coeff(r + 1 - g);
        out.N.push_back(nr);
        if (!nr.is_zero()) {
            SeriesY term = S_power(r + 1 - g, order + 1 - g, variant).scaled(nr);
            term = term.truncated(1 - g, order + 1 - g);
            residual = residual + term.scaled(HalfLaurent(-1));
        }
    }
    return out;
}

SeriesY forward_series(const std::vector<HalfLaurent>& N, long long g, int order,
                       ZetaVariant variant) {
    SeriesY Z(1 - (int)g, order - (int)g);
    for (std::size_t r = 0; r < N.size(); ++r) {
        if (N[r].is_zero()) continue;
        HalfLaurent c = N[r];
        if (variant == ZetaVariant::euler) c = HalfLaurent(c.at_one());
        SeriesY term = S_power((long long)r + 1 - g, order - (int)g, variant).scaled(c);
        term = term.truncated(1 - (int)g, order - (int)g);
        Z = Z + term;
    }
    return Z;
}

FunctionalEquationReport functional_equation_check(const std::vector<HalfLaurent>& N,
                                                   long long g) {
    if (g < 0) throw ValidationError("genus must be nonnegative");
    FunctionalEquationReport rep;
    // f(q) = sum_r N_r q^r ((1-q)(1-qy))^(g-r); for r > g the factor is a
    // genuine series, so compute in a window wide enough to expose any
    // nonzero coefficient beyond degree 2g.
    const int window = (int)(2 * g + (long long)N.size() + 4);
    SeriesY f(0, window);
    for (std::size_t r = 0; r < N.size(); ++r) {
        if (N[r].is_zero()) continue;
        // q^r ((1-q)(1-qy))^(g-r) = q^g * S^(r-g)
        SeriesY term = S_power((long long)r - g, window, ZetaVariant::chi_y)
                           .scaled(N[r])
                           .shifted((int)g);
        term = term.truncated(0, window);
        f = f + term;
    }
    for (int j = (int)(2 * g) + 1; j < window; ++j)
        if (!f.coeff(j).is_zero()) {
            rep.holds = false;
            rep.violated = {j, -1};
            return rep;
        }
    for (int j = 0; j <= (int)(2 * g); ++j) {
        HalfLaurent lhs = f.coeff(j);
        HalfLaurent rhs = f.coeff((int)(2 * g) - j).shifted_half(2 * (j - (int)g));
        if (!(lhs == rhs)) {
            rep.holds = false;
            rep.violated = {j, (int)(2 * g) - j};
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

} // namespace tropcount
