#include "tropcount/series.hpp"

#include <algorithm>

#include "tropcount/errors.hpp"

namespace tropcount {

const HalfLaurent SeriesY::zero_{};

const HalfLaurent& SeriesY::coeff(int q_exp) const {
    if (q_exp < offset_ || q_exp >= order_) return zero_;
    return c_[q_exp - offset_];
}

void SeriesY::set_coeff(int q_exp, HalfLaurent v) {
    if (q_exp < offset_ || q_exp >= order_)
        throw InternalError("series coefficient out of window");
    c_[q_exp - offset_] = std::move(v);
}

void SeriesY::add_coeff(int q_exp, const HalfLaurent& v) {
    if (q_exp < offset_ || q_exp >= order_) return;  // truncated away
    c_[q_exp - offset_] += v;
}

SeriesY SeriesY::truncated(int new_offset, int new_order) const {
    SeriesY r(new_offset, new_order);
    for (int e = new_offset; e < new_order; ++e) r.set_coeff(e, coeff(e));
    return r;
}

SeriesY operator+(const SeriesY& a, const SeriesY& b) {
    int off = std::min(a.offset_, b.offset_);
    int ord = std::min(a.order_, b.order_);
    if (a.c_.empty()) return b.truncated(b.offset_, ord);
    if (b.c_.empty()) return a.truncated(a.offset_, ord);
    SeriesY r(off, ord);
    for (int e = off; e < ord; ++e) r.set_coeff(e, a.coeff(e) + b.coeff(e));
    return r;
}

SeriesY operator*(const SeriesY& a, const SeriesY& b) {
    if (a.c_.empty() || b.c_.empty()) return SeriesY();
    int off = a.offset_ + b.offset_;
    // truncation: valid exponents bounded by the worse of the two windows
    int ord = std::min(a.order_ + b.offset_, b.order_ + a.offset_);
    SeriesY r(off, ord);
    for (int i = a.offset_; i < a.order_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = b.offset_; j < b.order_; ++j) {
            int e = i + j;
            if (e >= ord) break;
            if (!b.coeff(j).is_zero()) r.add_coeff(e, a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

SeriesY SeriesY::scaled(const HalfLaurent& k) const {
    SeriesY r(offset_, order_);
    for (int e = offset_; e < order_; ++e) r.set_coeff(e, coeff(e) * k);
    return r;
}

SeriesY SeriesY::shifted(int dq) const {
    SeriesY r(offset_ + dq, order_ + dq);
    for (int e = offset_; e < order_; ++e) r.set_coeff(e + dq, coeff(e));
    return r;
}

bool SeriesY::coeffs_equal(const SeriesY& o) const {
    int off = std::max(offset_, o.offset_);
    int ord = std::min(order_, o.order_);
    for (int e = off; e < ord; ++e)
        if (!(coeff(e) == o.coeff(e))) return false;
    return true;
}

} // namespace tropcount
