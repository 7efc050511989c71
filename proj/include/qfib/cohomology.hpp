#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qfib/cyclotomic.hpp"
#include "qfib/geometry.hpp"

namespace qfib {

// An equivariant cohomology class of P^{n1} x P^{n2}, stored in the monomial
// basis H1^a H2^b with 0 <= a <= n1, 0 <= b <= n2.  All coefficients live in
// the cyclotomic field of the ambient geometry.
class CohomClass {
   public:
    CohomClass() = default;
    explicit CohomClass(const GeometrySpec& g)
        : dim1_(g.dim1()), dim2_(g.dim2()), order_(g.zeta_order),
          mono_(static_cast<size_t>(g.class_size()), Cyclo::zero(g.zeta_order)) {}

    static CohomClass unit(const GeometrySpec& g) {
        CohomClass c(g);
        c.at(0, 0) = Cyclo::one(g.zeta_order);
        return c;
    }

    // H1^a * H2^b as a class (requires a <= n1, b <= n2).
    static CohomClass monomial(const GeometrySpec& g, int a, int b) {
        CohomClass c(g);
        c.at(a, b) = Cyclo::one(g.zeta_order);
        return c;
    }

    int dim1() const { return dim1_; }
    int dim2() const { return dim2_; }
    int order() const { return order_; }

    Cyclo& at(int a, int b) {
        check_range(a, b);
        return mono_[static_cast<size_t>(a * dim2_ + b)];
    }
    const Cyclo& at(int a, int b) const {
        check_range(a, b);
        return mono_[static_cast<size_t>(a * dim2_ + b)];
    }

    bool is_zero() const {
        for (const auto& c : mono_)
            if (!c.is_zero()) return false;
        return true;
    }

    CohomClass& operator+=(const CohomClass& o) {
        check_shape(o);
        for (size_t k = 0; k < mono_.size(); ++k) mono_[k] += o.mono_[k];
        return *this;
    }
    CohomClass& operator-=(const CohomClass& o) {
        check_shape(o);
        for (size_t k = 0; k < mono_.size(); ++k) mono_[k] -= o.mono_[k];
        return *this;
    }
    CohomClass& operator*=(const Cyclo& s) {
        for (auto& c : mono_) c *= s;
        return *this;
    }

    friend CohomClass operator+(CohomClass a, const CohomClass& b) { return a += b; }
    friend CohomClass operator-(CohomClass a, const CohomClass& b) { return a -= b; }
    friend CohomClass operator*(CohomClass a, const Cyclo& s) { return a *= s; }
    friend CohomClass operator*(const Cyclo& s, CohomClass a) { return a *= s; }

    friend bool operator==(const CohomClass& a, const CohomClass& b) {
        CohomClass d = a;
        d -= b;
        return d.is_zero();
    }

    std::string str() const {
        std::string out;
        for (int a = 0; a < dim1_; ++a)
            for (int b = 0; b < dim2_; ++b) {
                if (at(a, b).is_zero()) continue;
                if (!out.empty()) out += " + ";
                out += "(" + at(a, b).literal() + ")*H1^" + std::to_string(a) + "*H2^" +
                       std::to_string(b);
            }
        return out.empty() ? "0" : out;
    }

   private:
    void check_range(int a, int b) const {
        if (a < 0 || a >= dim1_ || b < 0 || b >= dim2_)
            throw std::out_of_range("CohomClass: monomial exponent out of range");
    }
    void check_shape(const CohomClass& o) const {
        if (dim1_ != o.dim1_ || dim2_ != o.dim2_ || order_ != o.order_)
            throw std::invalid_argument("CohomClass: shape/order mismatch");
    }

    int dim1_ = 0, dim2_ = 0, order_ = 1;
    std::vector<Cyclo> mono_;
};

namespace detail {

// Coefficients c_0..c_n with x^{n+1} = c_0 + c_1 x + ... + c_n x^n modulo the
// monic relation prod_i (x - lambda_i) = 0, extended to all powers up to 2n.
// Row k holds the expansion of x^{n+1+k}.
inline std::vector<std::vector<Cyclo>> power_reduction_rows(const std::vector<Cyclo>& lambda,
                                                            int order, int extra) {
    const int n = static_cast<int>(lambda.size()) - 1;
    // monic poly coefficients p_0..p_{n+1} of prod (x - lambda_i)
    std::vector<Cyclo> p{Cyclo::one(order)};
    for (const auto& l : lambda) {
        std::vector<Cyclo> q(p.size() + 1, Cyclo::zero(order));
        for (size_t k = 0; k < p.size(); ++k) {
            q[k + 1] += p[k];
            q[k] -= p[k] * l;
        }
        p = q;
    }
    std::vector<std::vector<Cyclo>> rows;
    std::vector<Cyclo> cur(static_cast<size_t>(n + 1), Cyclo::zero(order));
    for (int k = 0; k <= n; ++k) cur[static_cast<size_t>(k)] = Cyclo::zero(order) - p[static_cast<size_t>(k)];
    rows.push_back(cur);  // x^{n+1}
    for (int e = 1; e < extra; ++e) {
        // multiply current row by x, reduce the overflow through rows[0]
        std::vector<Cyclo> nxt(static_cast<size_t>(n + 1), Cyclo::zero(order));
        Cyclo top = cur[static_cast<size_t>(n)];
        for (int k = n; k >= 1; --k) nxt[static_cast<size_t>(k)] = cur[static_cast<size_t>(k - 1)];
        nxt[0] = Cyclo::zero(order);
        for (int k = 0; k <= n; ++k) nxt[static_cast<size_t>(k)] += top * rows[0][static_cast<size_t>(k)];
        rows.push_back(nxt);
        cur = nxt;
    }
    return rows;
}

}  // namespace detail

// Product in the equivariant cohomology ring: polynomial multiplication
// followed by reduction of each axis through prod_i (H - lambda_i) = 0.
inline CohomClass multiply(const GeometrySpec& g, const CohomClass& x, const CohomClass& y) {
    const int n1 = g.n1, n2 = g.n2, N = g.zeta_order;
    // raw product coefficients on [0, 2n1] x [0, 2n2]
    std::vector<std::vector<Cyclo>> raw(static_cast<size_t>(2 * n1 + 1),
                                        std::vector<Cyclo>(static_cast<size_t>(2 * n2 + 1),
                                                           Cyclo::zero(N)));
    for (int a = 0; a <= n1; ++a)
        for (int b = 0; b <= n2; ++b) {
            if (x.at(a, b).is_zero()) continue;
            for (int c = 0; c <= n1; ++c)
                for (int d = 0; d <= n2; ++d) {
                    if (y.at(c, d).is_zero()) continue;
                    raw[static_cast<size_t>(a + c)][static_cast<size_t>(b + d)] +=
                        x.at(a, b) * y.at(c, d);
                }
        }
    const auto rows1 = detail::power_reduction_rows(g.w1, N, n1 > 0 ? n1 : 1);
    const auto rows2 = detail::power_reduction_rows(g.w2, N, n2 > 0 ? n2 : 1);
    // fold axis 1: degrees 2n1 .. n1+1 down
    for (int a = 2 * n1; a >= n1 + 1; --a)
        for (int b = 0; b <= 2 * n2; ++b) {
            const Cyclo v = raw[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (v.is_zero()) continue;
            const auto& row = rows1[static_cast<size_t>(a - (n1 + 1))];
            for (int k = 0; k <= n1; ++k)
                raw[static_cast<size_t>(k)][static_cast<size_t>(b)] += v * row[static_cast<size_t>(k)];
            raw[static_cast<size_t>(a)][static_cast<size_t>(b)] = Cyclo::zero(N);
        }
    for (int b = 2 * n2; b >= n2 + 1; --b)
        for (int a = 0; a <= n1; ++a) {
            const Cyclo v = raw[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (v.is_zero()) continue;
            const auto& row = rows2[static_cast<size_t>(b - (n2 + 1))];
            for (int k = 0; k <= n2; ++k)
                raw[static_cast<size_t>(a)][static_cast<size_t>(k)] += v * row[static_cast<size_t>(k)];
            raw[static_cast<size_t>(a)][static_cast<size_t>(b)] = Cyclo::zero(N);
        }
    CohomClass out(g);
    for (int a = 0; a <= n1; ++a)
        for (int b = 0; b <= n2; ++b) out.at(a, b) = raw[static_cast<size_t>(a)][static_cast<size_t>(b)];
    return out;
}

// Multiplication by the hyperplane class of one factor (axis 1 or 2).
inline CohomClass mult_hyperplane(const GeometrySpec& g, const CohomClass& x, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("mult_hyperplane: axis must be 1 or 2");
    const int N = g.zeta_order;
    CohomClass out(g);
    const auto rows = detail::power_reduction_rows(axis == 1 ? g.w1 : g.w2, N, 1);
    const int n = axis == 1 ? g.n1 : g.n2;
    const int m = axis == 1 ? g.n2 : g.n1;
    auto get = [&](int a, int b) { return axis == 1 ? x.at(a, b) : x.at(b, a); };
    auto put = [&](int a, int b, const Cyclo& v) {
        if (axis == 1)
            out.at(a, b) += v;
        else
            out.at(b, a) += v;
    };
    for (int b = 0; b <= m; ++b) {
        for (int a = 0; a < n; ++a) put(a + 1, b, get(a, b));
        const Cyclo top = get(n, b);
        if (!top.is_zero())
            for (int k = 0; k <= n; ++k) put(k, b, top * rows[0][static_cast<size_t>(k)]);
    }
    return out;
}

// Value of the class at the fixed point (lambda_{1,i}, lambda_{2,j}).
inline Cyclo restrict_at(const GeometrySpec& g, const CohomClass& x, int i, int j) {
    const int N = g.zeta_order;
    Cyclo val = Cyclo::zero(N);
    Cyclo p1 = Cyclo::one(N);
    for (int a = 0; a <= g.n1; ++a) {
        Cyclo p2 = Cyclo::one(N);
        for (int b = 0; b <= g.n2; ++b) {
            val += x.at(a, b) * p1 * p2;
            p2 *= g.w2[static_cast<size_t>(j)];
        }
        p1 *= g.w1[static_cast<size_t>(i)];
    }
    return val;
}

// All fixed-point values, indexed i*dim2 + j.
inline std::vector<Cyclo> restrict_class(const GeometrySpec& g, const CohomClass& x) {
    std::vector<Cyclo> out;
    out.reserve(static_cast<size_t>(g.class_size()));
    for (int i = 0; i <= g.n1; ++i)
        for (int j = 0; j <= g.n2; ++j) out.push_back(restrict_at(g, x, i, j));
    return out;
}

namespace detail {

// Lagrange basis polynomials for the node set lambda: ell_i has degree n and
// ell_i(lambda_k) = delta_{ik}.  Returned as coefficient rows.
inline std::vector<std::vector<Cyclo>> lagrange_rows(const std::vector<Cyclo>& lambda, int order) {
    const int n = static_cast<int>(lambda.size()) - 1;
    std::vector<std::vector<Cyclo>> rows;
    for (int i = 0; i <= n; ++i) {
        std::vector<Cyclo> poly{Cyclo::one(order)};
        Cyclo denom = Cyclo::one(order);
        for (int k = 0; k <= n; ++k) {
            if (k == i) continue;
            std::vector<Cyclo> nxt(poly.size() + 1, Cyclo::zero(order));
            for (size_t t = 0; t < poly.size(); ++t) {
                nxt[t + 1] += poly[t];
                nxt[t] -= poly[t] * lambda[static_cast<size_t>(k)];
            }
            poly = nxt;
            denom *= lambda[static_cast<size_t>(i)] - lambda[static_cast<size_t>(k)];
        }
        const Cyclo inv = denom.inverse();
        for (auto& c : poly) c *= inv;
        poly.resize(static_cast<size_t>(n + 1), Cyclo::zero(order));
        rows.push_back(poly);
    }
    return rows;
}

}  // namespace detail

// The unique class with the prescribed fixed-point values (tensor Lagrange
// interpolation; inverse of restrict_class).
inline CohomClass interpolate_class(const GeometrySpec& g, const std::vector<Cyclo>& values) {
    if (static_cast<int>(values.size()) != g.class_size())
        throw std::invalid_argument("interpolate_class: wrong number of fixed-point values");
    const auto rows1 = detail::lagrange_rows(g.w1, g.zeta_order);
    const auto rows2 = detail::lagrange_rows(g.w2, g.zeta_order);
    CohomClass out(g);
    for (int i = 0; i <= g.n1; ++i)
        for (int j = 0; j <= g.n2; ++j) {
            const Cyclo& v = values[static_cast<size_t>(g.index(i, j))];
            if (v.is_zero()) continue;
            for (int a = 0; a <= g.n1; ++a)
                for (int b = 0; b <= g.n2; ++b)
                    out.at(a, b) += v * rows1[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                                    rows2[static_cast<size_t>(j)][static_cast<size_t>(b)];
        }
    return out;
}

// Euler factor of the twist datum at fixed point (i,j): the product over the
// negative rows (b1,b2) of (b1*lambda_{1,i} + b2*lambda_{2,j}).
inline Cyclo twist_euler(const GeometrySpec& g, int i, int j) {
    Cyclo out = Cyclo::one(g.zeta_order);
    for (const auto& [b1, b2] : g.b_twists)
        out *= Cyclo::integer(b1, g.zeta_order) * g.w1[static_cast<size_t>(i)] +
               Cyclo::integer(b2, g.zeta_order) * g.w2[static_cast<size_t>(j)];
    return out;
}

// Euler class of the tangent space at the fixed point (i,j) of the bare product.
inline Cyclo tangent_euler(const GeometrySpec& g, int i, int j) {
    Cyclo out = Cyclo::one(g.zeta_order);
    for (int k = 0; k <= g.n1; ++k)
        if (k != i) out *= g.w1[static_cast<size_t>(i)] - g.w1[static_cast<size_t>(k)];
    for (int k = 0; k <= g.n2; ++k)
        if (k != j) out *= g.w2[static_cast<size_t>(j)] - g.w2[static_cast<size_t>(k)];
    return out;
}

// Fixed-point data for the rank-one negatively twisted surface geometry:
// normalized idempotent-like classes phi_{ij} (Kronecker restrictions), their
// duals phiup_{ij} = e_{ij} phi_{ij}, and the total Euler weights e_{ij}.
struct FixedPointBasis {
    std::vector<CohomClass> phi;     // restriction at (k,l) equals delta_{(ij),(kl)}
    std::vector<CohomClass> phi_up;  // e_{ij} * phi_{ij}
    std::vector<Cyclo> e;            // tangent Euler times twist Euler
};

inline FixedPointBasis fixed_point_basis(const GeometrySpec& g) {
    FixedPointBasis fb;
    const int N = g.zeta_order;
    for (int i = 0; i <= g.n1; ++i)
        for (int j = 0; j <= g.n2; ++j) {
            const Cyclo e = tangent_euler(g, i, j) * twist_euler(g, i, j);
            std::vector<Cyclo> delta(static_cast<size_t>(g.class_size()), Cyclo::zero(N));
            delta[static_cast<size_t>(g.index(i, j))] = Cyclo::one(N);
            CohomClass phi = interpolate_class(g, delta);
            fb.phi.push_back(phi);
            fb.phi_up.push_back(phi * e);
            fb.e.push_back(e);
        }
    return fb;
}

}  // namespace qfib
