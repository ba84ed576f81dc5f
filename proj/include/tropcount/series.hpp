#ifndef TROPCOUNT_SERIES_HPP
#define TROPCOUNT_SERIES_HPP

#include <vector>

#include "tropcount/halflaurent.hpp"

namespace tropcount {

// Truncated series in q with HalfLaurent coefficients. Exponents run from
// `offset` (may be negative) up to but excluding `order`.
class SeriesY {
  public:
    SeriesY() : offset_(0), order_(0) {}
    SeriesY(int offset, int order)
        : offset_(offset), order_(order), c_(std::max(0, order - offset)) {}

    int offset() const { return offset_; }
    int order() const { return order_; }

    const HalfLaurent& coeff(int q_exp) const;
    void set_coeff(int q_exp, HalfLaurent v);
    void add_coeff(int q_exp, const HalfLaurent& v);

    SeriesY truncated(int new_offset, int new_order) const;
    friend SeriesY operator+(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator*(const SeriesY& a, const SeriesY& b);
    SeriesY scaled(const HalfLaurent& k) const;
    SeriesY shifted(int dq) const;  // multiply by q^dq
    bool coeffs_equal(const SeriesY& o) const;  // on the common window

    std::vector<HalfLaurent> coefficients() const { return c_; }

  private:
    int offset_;
    int order_;
    std::vector<HalfLaurent> c_;
    static const HalfLaurent zero_;
};

} // namespace tropcount

#endif
