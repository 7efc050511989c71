#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qfib/biseries.hpp"
#include "qfib/cohomology.hpp"
#include "qfib/geometry.hpp"

namespace qfib {

// A cohomology-valued Laurent series in z over the bivariate q-ring, stored by
// fixed-point restriction: component fp = i*dim2+j holds, for each kept
// z-exponent, a bivariate series with cyclotomic coefficients.
//
// Exponent bookkeeping:
//   * window_hi  - declared ceiling; writing a nonzero coefficient above it
//                  throws (the computation was budgeted with too little
//                  z-headroom).
//   * window_lo  - declared floor at construction time (how deep the 1/z tail
//                  was computed).
//   * exact_lo   - the current exactness floor.  Coefficients below it would
//                  depend on the discarded part of the 1/z tail, so they are
//                  not stored at all.  Multiplying by z or applying one of the
//                  operators M_i raises the floor; no operation lowers it.
// Zero tests, equality and mismatch reports only ever look at exponents at or
// above exact_lo.
class ZSeries {
public:
    ZSeries(const GeometrySpec& g, Trunc t, int window_lo, int window_hi)
        : geom_(g), trunc_(t), lo_(window_lo), hi_(window_hi), exact_lo_(window_lo),
          comp_(static_cast<size_t>(g.class_size())) {
        if (window_lo > window_hi) throw std::invalid_argument("ZSeries: empty z-window");
    }

    static ZSeries zero(const GeometrySpec& g, Trunc t, int window_lo, int window_hi) {
        return ZSeries(g, t, window_lo, window_hi);
    }

    // The unit class, 1 * z^0, restricted to every fixed point.
    static ZSeries unit(const GeometrySpec& g, Trunc t, int window_lo, int window_hi) {
        ZSeries s(g, t, window_lo, window_hi);
        if (window_hi < 0 || window_lo > 0) throw std::invalid_argument("ZSeries: window excludes z^0");
        for (auto& c : s.comp_) c.emplace(0, BiSeries::one(g.zeta_order, t));
        return s;
    }

    // A constant cohomology class, x * z^0.
    static ZSeries from_class(const GeometrySpec& g, const CohomClass& x, Trunc t,
                              int window_lo, int window_hi) {
        ZSeries s(g, t, window_lo, window_hi);
        const std::vector<Cyclo> values = restrict_class(g, x);
        for (int fp = 0; fp < g.class_size(); ++fp) {
            if (values[static_cast<size_t>(fp)].is_zero()) continue;
            s.comp_[static_cast<size_t>(fp)].emplace(
                0, BiSeries::constant(values[static_cast<size_t>(fp)], g.zeta_order, t));
        }
        return s;
    }

    const GeometrySpec& geometry() const { return geom_; }
    Trunc trunc() const { return trunc_; }
    int window_lo() const { return lo_; }
    int window_hi() const { return hi_; }
    int exact_lo() const { return exact_lo_; }

    // Exact coefficient of z^m at fixed point fp.  Asking below the exactness
    // floor is an error: that data was never computed.
    BiSeries coeff(int fp, int m) const {
        if (m < exact_lo_)
            throw std::domain_error("ZSeries: coefficient of z^" + std::to_string(m) +
                                    " is below the exactness floor z^" + std::to_string(exact_lo_));
        if (m > hi_)
            throw std::domain_error("ZSeries: coefficient of z^" + std::to_string(m) +
                                    " is above the window ceiling z^" + std::to_string(hi_));
        const auto& c = comp_.at(static_cast<size_t>(fp));
        auto it = c.find(m);
        if (it == c.end()) return BiSeries::zero(geom_.zeta_order, trunc_);
        return it->second;
    }

    void set_coeff(int fp, int m, const BiSeries& value) {
        if (m < exact_lo_ || m > hi_)
            throw std::domain_error("ZSeries: set_coeff outside the exact window");
        put(static_cast<size_t>(fp), m, value);
    }

    void add_coeff(int fp, int m, const BiSeries& value) {
        set_coeff(fp, m, coeff(fp, m) + value);
    }

    // The z^m coefficient as a cohomology class with bivariate-series entries
    // is recovered degree by degree: this returns its (d1,d2) q-coefficient.
    CohomClass class_coefficient(int m, int d1, int d2) const {
        std::vector<Cyclo> values;
        values.reserve(comp_.size());
        for (int fp = 0; fp < geom_.class_size(); ++fp)
            values.push_back(coeff(fp, m).coefficient(d1, d2));
        return interpolate_class(geom_, values);
    }

    bool is_zero() const {
        for (const auto& c : comp_)
            for (const auto& [m, v] : c)
                if (!v.is_zero()) return false;
        return true;
    }

    // Smallest (z-exponent, fixed point, q-degree) carrying a nonzero
    // coefficient, for mismatch reports.
    struct NonzeroReport {
        int fp;
        int z_exp;
        int d1;
        int d2;
    };
    std::optional<NonzeroReport> first_nonzero() const {
        std::optional<NonzeroReport> best;
        for (int fp = 0; fp < geom_.class_size(); ++fp) {
            for (const auto& [m, v] : comp_[static_cast<size_t>(fp)]) {
                if (v.is_zero()) continue;
                const auto& [deg, c] = *v.terms().begin();
                NonzeroReport r{fp, m, deg.first, deg.second};
                if (!best || std::tie(m, fp, r.d1, r.d2) <
                                 std::tie(best->z_exp, best->fp, best->d1, best->d2))
                    best = r;
            }
        }
        return best;
    }

    friend ZSeries operator+(const ZSeries& a, const ZSeries& b) {
        a.require_compatible(b);
        ZSeries r(a.geom_, min(a.trunc_, b.trunc_), std::max(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
        r.exact_lo_ = std::max(a.exact_lo_, b.exact_lo_);
        for (size_t fp = 0; fp < r.comp_.size(); ++fp) {
            for (const auto& [m, v] : a.comp_[fp])
                if (m >= r.exact_lo_) r.put(fp, m, v.truncated(r.trunc_));
            for (const auto& [m, v] : b.comp_[fp]) {
                if (m < r.exact_lo_) continue;
                auto it = r.comp_[fp].find(m);
                if (it == r.comp_[fp].end())
                    r.put(fp, m, v.truncated(r.trunc_));
                else
                    r.put(fp, m, it->second + v);
            }
        }
        return r;
    }

    friend ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }

    ZSeries operator-() const {
        ZSeries r = *this;
        for (auto& c : r.comp_)
            for (auto& [m, v] : c) v = -v;
        return r;
    }

    friend bool operator==(const ZSeries& a, const ZSeries& b) { return (a - b).is_zero(); }
    friend bool operator!=(const ZSeries& a, const ZSeries& b) { return !(a == b); }

    // Multiplication by a scalar q-series (same series at every fixed point).
    friend ZSeries operator*(const ZSeries& a, const BiSeries& s) {
        ZSeries r(a.geom_, min(a.trunc_, s.trunc()), a.lo_, a.hi_);
        r.exact_lo_ = a.exact_lo_;
        for (size_t fp = 0; fp < r.comp_.size(); ++fp)
            for (const auto& [m, v] : a.comp_[fp]) r.put(fp, m, v * s);
        return r;
    }
    friend ZSeries operator*(const BiSeries& s, const ZSeries& a) { return a * s; }

    friend ZSeries operator*(const ZSeries& a, const Cyclo& s) {
        ZSeries r = a;
        for (auto& c : r.comp_) {
            for (auto& [m, v] : c) v = v * s;
        }
        r.normalize();
        return r;
    }
    friend ZSeries operator*(const Cyclo& s, const ZSeries& a) { return a * s; }

    // Multiplication by z^k (k >= 0).  Raises the exactness floor by k; errors
    // if a nonzero coefficient would land above the window ceiling.
    ZSeries shifted_z(int k) const {
        if (k < 0) throw std::invalid_argument("ZSeries: negative z-shift");
        ZSeries r(geom_, trunc_, lo_, hi_);
        r.exact_lo_ = exact_lo_ + k;
        for (size_t fp = 0; fp < comp_.size(); ++fp) {
            for (const auto& [m, v] : comp_[fp]) {
                if (v.is_zero()) continue;
                if (m + k > hi_)
                    throw std::domain_error("ZSeries: z-shift exceeds window ceiling z^" +
                                            std::to_string(hi_));
                r.put(fp, m + k, v);
            }
        }
        return r;
    }

    // The Euler derivative q_axis d/dq_axis, applied coefficientwise.
    ZSeries euler_derivative(int axis) const {
        ZSeries r(geom_, trunc_, lo_, hi_);
        r.exact_lo_ = exact_lo_;
        for (size_t fp = 0; fp < comp_.size(); ++fp)
            for (const auto& [m, v] : comp_[fp]) r.put(fp, m, v.euler_derivative(axis));
        return r;
    }

    // The operator M_axis = H_axis + z q_axis d/dq_axis.  At fixed point
    // (i,j) the hyperplane class acts as the scalar weight, so
    //   new[m] = lambda * old[m] + D_axis(old[m-1]).
    // The exactness floor rises by one: the new coefficient at the old floor
    // would need the discarded level below it.
    ZSeries apply_M(int axis) const {
        ZSeries r(geom_, trunc_, lo_, hi_);
        r.exact_lo_ = exact_lo_ + 1;
        for (int i = 0; i <= geom_.n1; ++i) {
            for (int j = 0; j <= geom_.n2; ++j) {
                const size_t fp = static_cast<size_t>(geom_.index(i, j));
                const Cyclo lambda = axis == 1 ? geom_.w1[static_cast<size_t>(i)]
                                               : geom_.w2[static_cast<size_t>(j)];
                std::map<int, BiSeries> next;
                for (const auto& [m, v] : comp_[fp]) {
                    if (m >= r.exact_lo_) accumulate(next, m, v * lambda);
                    const BiSeries dv = v.euler_derivative(axis);
                    if (!dv.is_zero()) {
                        if (m + 1 > hi_)
                            throw std::domain_error(
                                "ZSeries: applying M_" + std::to_string(axis) +
                                " exceeds window ceiling z^" + std::to_string(hi_));
                        accumulate(next, m + 1, dv);
                    }
                }
                for (const auto& [m, v] : next) r.put(fp, m, v);
            }
        }
        return r;
    }

private:
    void require_compatible(const ZSeries& o) const {
        if (geom_.name != o.geom_.name || geom_.zeta_order != o.geom_.zeta_order ||
            comp_.size() != o.comp_.size())
            throw std::invalid_argument("ZSeries: geometry mismatch");
    }

    static void accumulate(std::map<int, BiSeries>& dst, int m, const BiSeries& v) {
        auto it = dst.find(m);
        if (it == dst.end())
            dst.emplace(m, v);
        else
            it->second += v;
    }

    void put(size_t fp, int m, const BiSeries& v) {
        if (v.is_zero())
            comp_[fp].erase(m);
        else
            comp_[fp].insert_or_assign(m, v);
    }

    void normalize() {
        for (auto& c : comp_)
            for (auto it = c.begin(); it != c.end();)
                it = it->second.is_zero() ? c.erase(it) : std::next(it);
    }

    GeometrySpec geom_;
    Trunc trunc_;
    int lo_;
    int hi_;
    int exact_lo_;
    std::vector<std::map<int, BiSeries>> comp_;
};

}  // namespace qfib
