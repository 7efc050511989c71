#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfib/zseries.hpp"

namespace qfib {

// A named collection of bivariate series (coefficient tables, verification
// inputs).  std::map keeps the key order deterministic for reports and JSON.
struct SeriesTable {
    std::map<std::string, BiSeries> entries;

    const BiSeries& at(const std::string& key) const {
        auto it = entries.find(key);
        if (it == entries.end()) throw std::out_of_range("SeriesTable: no entry '" + key + "'");
        return it->second;
    }
    bool has(const std::string& key) const { return entries.count(key) != 0; }
};

inline std::string monomial_name(int a, int b) {
    if (a == 0 && b == 0) return "1";
    std::string s;
    if (a > 0) s += a == 1 ? "H1" : "H1^" + std::to_string(a);
    if (b > 0) s += b == 1 ? "H2" : "H2^" + std::to_string(b);
    return s;
}

namespace detail {

// Ascending z-polynomials with cyclotomic coefficients.
using ZPoly = std::vector<Cyclo>;

inline ZPoly zpoly_one(int order) { return {Cyclo::one(order)}; }

inline ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, int order) {
    ZPoly r(a.size() + b.size() - 1, Cyclo::zero(order));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

// Multiply by the linear factor (c0 + c1 * z).
inline ZPoly zpoly_mul_linear(const ZPoly& a, const Cyclo& c0, const Cyclo& c1, int order) {
    ZPoly r(a.size() + 1, Cyclo::zero(order));
    for (size_t i = 0; i < a.size(); ++i) {
        r[i] = r[i] + a[i] * c0;
        r[i + 1] = r[i + 1] + a[i] * c1;
    }
    return r;
}

// Expansion of num/den at z = infinity: returns X[0..depth] with
//   num/den = sum_m X[m] z^{-m},
// valid when deg(num) <= deg(den) and the leading coefficient of den is
// invertible.  Writing D = deg(den), n~_p = [z^{D-p}] num and d_p = [z^{D-p}] den,
//   X_m = (n~_m - sum_{r<m} d_{m-r} X_r) / d_0.
inline std::vector<Cyclo> divide_at_infinity(const ZPoly& num, const ZPoly& den, int depth,
                                             int order) {
    const int D = static_cast<int>(den.size()) - 1;
    if (static_cast<int>(num.size()) - 1 > D)
        throw std::domain_error("divide_at_infinity: numerator degree exceeds denominator degree");
    const Cyclo d0inv = den.back().inverse();
    auto coeff_from_top = [D, order](const ZPoly& p, int k) {
        const int idx = D - k;
        if (idx < 0 || idx >= static_cast<int>(p.size())) return Cyclo::zero(order);
        return p[static_cast<size_t>(idx)];
    };
    std::vector<Cyclo> X;
    X.reserve(static_cast<size_t>(depth) + 1);
    for (int m = 0; m <= depth; ++m) {
        Cyclo acc = coeff_from_top(num, m);
        for (int r = 0; r < m; ++r) acc = acc - coeff_from_top(den, m - r) * X[static_cast<size_t>(r)];
        X.push_back(acc * d0inv);
    }
    return X;
}

// Scalar expansion of the hypergeometric sum with the hyperplane classes
// replaced by the scalars (h1, h2): returns, for m = 0..depth, the bivariate
// q-series coefficient of z^{-m}.  The bidegree-(d1,d2) summand is
//   numerator:  per a-twist row (a1,a2):  prod_{k=1}^{a1 d1 + a2 d2} (a1 h1 + a2 h2 + k z)
//               per b-twist row (b1,b2):  prod_{k=0}^{-(b1 d1 + b2 d2) - 1} (b1 h1 + b2 h2 - k z)
//   denominator: prod_{i} prod_{k=1}^{d1} (h1 - lambda_{1,i} + k z)
//              * prod_{j} prod_{k=1}^{d2} (h2 - lambda_{2,j} + k z).
// Numerator and per-axis denominator polynomials are cached incrementally in
// the product index.
inline std::vector<BiSeries> i_scalar_expansion(const GeometrySpec& g, const Cyclo& h1,
                                                const Cyclo& h2, Trunc t, int depth) {
    const int N = g.zeta_order;

    struct Row {
        Cyclo c;               // b1 h1 + b2 h2 (or a1 h1 + a2 h2)
        bool is_b;             // factor at step s: is_b ? (c - (s-1) z) : (c + s z)
        long m1, m2;           // degree multipliers: s = m1 d1 + m2 d2
        std::vector<ZPoly> polys;
    };
    std::vector<Row> rows;
    for (const auto& [a1, a2] : g.a_twists) {
        Row r{h1 * Cyclo::integer(a1, N) + h2 * Cyclo::integer(a2, N), false, a1, a2, {}};
        rows.push_back(std::move(r));
    }
    for (const auto& [b1, b2] : g.b_twists) {
        Row r{h1 * Cyclo::integer(b1, N) + h2 * Cyclo::integer(b2, N), true, -b1, -b2, {}};
        rows.push_back(std::move(r));
    }
    for (auto& r : rows) {
        const long smax = r.m1 * t.n1 + r.m2 * t.n2;
        if (smax < 0) throw std::domain_error("i_scalar_expansion: negative twist degree");
        r.polys.reserve(static_cast<size_t>(smax) + 1);
        r.polys.push_back(zpoly_one(N));
        for (long s = 1; s <= smax; ++s) {
            const long k = r.is_b ? -(s - 1) : s;
            r.polys.push_back(zpoly_mul_linear(r.polys.back(), r.c, Cyclo::integer(k, N), N));
        }
    }

    auto axis_dens = [N](const Cyclo& h, const std::vector<Cyclo>& weights, int dmax) {
        std::vector<ZPoly> dens;
        dens.reserve(static_cast<size_t>(dmax) + 1);
        dens.push_back(zpoly_one(N));
        for (int d = 1; d <= dmax; ++d) {
            ZPoly p = dens.back();
            for (const Cyclo& w : weights) p = zpoly_mul_linear(p, h - w, Cyclo::integer(d, N), N);
            dens.push_back(std::move(p));
        }
        return dens;
    };
    const std::vector<ZPoly> den1 = axis_dens(h1, g.w1, t.n1);
    const std::vector<ZPoly> den2 = axis_dens(h2, g.w2, t.n2);

    std::vector<BiSeries> out(static_cast<size_t>(depth) + 1, BiSeries::zero(N, t));
    for (int d1 = 0; d1 <= t.n1; ++d1) {
        for (int d2 = 0; d2 <= t.n2; ++d2) {
            ZPoly num = zpoly_one(N);
            for (const auto& r : rows)
                num = zpoly_mul(num, r.polys[static_cast<size_t>(r.m1 * d1 + r.m2 * d2)], N);
            const ZPoly den = zpoly_mul(den1[static_cast<size_t>(d1)], den2[static_cast<size_t>(d2)], N);
            const std::vector<Cyclo> X = divide_at_infinity(num, den, depth, N);
            for (int m = 0; m <= depth; ++m)
                if (!X[static_cast<size_t>(m)].is_zero())
                    out[static_cast<size_t>(m)].add_to(d1, d2, X[static_cast<size_t>(m)]);
        }
    }
    return out;
}

}  // namespace detail

// The small hypergeometric series of the geometry, restricted to every fixed
// point and expanded at z = infinity down to z^{-depth}.  z_hi declares the
// headroom later operator applications may use.
inline ZSeries small_i_function(const GeometrySpec& g, Trunc t, int depth, int z_hi) {
    ZSeries s = ZSeries::zero(g, t, -depth, z_hi);
    for (int i = 0; i <= g.n1; ++i) {
        for (int j = 0; j <= g.n2; ++j) {
            const std::vector<BiSeries> X = detail::i_scalar_expansion(
                g, g.w1[static_cast<size_t>(i)], g.w2[static_cast<size_t>(j)], t, depth);
            for (int m = 0; m <= depth; ++m)
                if (!X[static_cast<size_t>(m)].is_zero())
                    s.set_coeff(g.index(i, j), -m, X[static_cast<size_t>(m)]);
        }
    }
    return s;
}

// Coefficient table of a cohomology-valued Laurent series in the reduced
// monomial basis: entry "z^m:<monomial>" is the bivariate series multiplying
// that basis monomial in the z^m coefficient.  Rows are recovered from the
// fixed-point restrictions degree by degree.
inline SeriesTable i_coefficient_table(const GeometrySpec& g, const ZSeries& s, int depth) {
    SeriesTable table;
    const Trunc t = s.trunc();
    for (int m = -depth; m <= 0; ++m) {
        std::vector<BiSeries> acc(static_cast<size_t>(g.class_size()),
                                  BiSeries::zero(g.zeta_order, t));
        for (int d1 = 0; d1 <= t.n1; ++d1) {
            for (int d2 = 0; d2 <= t.n2; ++d2) {
                const CohomClass c = s.class_coefficient(m, d1, d2);
                for (int a = 0; a <= g.n1; ++a)
                    for (int b = 0; b <= g.n2; ++b)
                        if (!c.at(a, b).is_zero())
                            acc[static_cast<size_t>(g.index(a, b))].add_to(d1, d2, c.at(a, b));
            }
        }
        for (int a = 0; a <= g.n1; ++a) {
            for (int b = 0; b <= g.n2; ++b) {
                const BiSeries& v = acc[static_cast<size_t>(g.index(a, b))];
                if (!v.is_zero())
                    table.entries.emplace("z^" + std::to_string(m) + ":" + monomial_name(a, b), v);
            }
        }
    }
    return table;
}

// Named 1/z-coefficient table of the local series in the UNREDUCED polynomial
// ring Q[H1,H2] (no relations imposed):
//   z^-1:  I11 H1 + I12 H2
//   z^-2:  I21 H1^2 + I22 H1 H2 + I23 H2^2 + I24 H1 + I25 H2
//   z^-3:  I31 H1^3 + I32 H1^2 H2 + I33 H1 H2^2 + I34 H2^3
//        + I35 H1^2 + I36 H1 H2 + I37 H2^2 + I38 H1 + I39 H2.
// By homogeneity (each summand is a degree-0 rational function of (H, lambda, z)
// whose leading denominator coefficient is a nonzero constant) the z^{-m}
// coefficient is a polynomial of total degree <= m in (H1, H2), so evaluating
// the scalar pipeline on a 4x4 rational grid and tensor-interpolating recovers
// it exactly for m <= 3.  The builder verifies the degree bound, the absence
// of a constant term, and that the z^0 coefficient is identically 1.
inline SeriesTable local_i_table(const GeometrySpec& g, Trunc t, int depth = 3) {
    if (g.b_twists.empty())
        throw std::invalid_argument("local_i_table: geometry has no bundle-direction twist");
    if (depth < 1 || depth > 3)
        throw std::invalid_argument("local_i_table: depth must be 1..3 (grid interpolates degree <= 3)");
    const int N = g.zeta_order;
    const std::vector<long> node_values{2, 3, 5, 7};
    std::vector<Cyclo> nodes;
    for (long v : node_values) nodes.push_back(Cyclo::integer(v, N));
    const auto rows = detail::lagrange_rows(nodes, N);
    const size_t n = nodes.size();

    // grid[u][v][m] = z^{-m} coefficient at (h1, h2) = (nodes[u], nodes[v])
    std::vector<std::vector<std::vector<BiSeries>>> grid(n);
    for (size_t u = 0; u < n; ++u) {
        for (size_t v = 0; v < n; ++v) {
            std::vector<BiSeries> X = detail::i_scalar_expansion(g, nodes[u], nodes[v], t, depth);
            if (X[0] != BiSeries::one(N, t))
                throw std::logic_error("local_i_table: z^0 coefficient is not 1");
            grid[u].push_back(std::move(X));
        }
    }

    static const std::map<int, std::map<std::pair<int, int>, std::string>> names{
        {1, {{{1, 0}, "I11"}, {{0, 1}, "I12"}}},
        {2, {{{2, 0}, "I21"}, {{1, 1}, "I22"}, {{0, 2}, "I23"}, {{1, 0}, "I24"}, {{0, 1}, "I25"}}},
        {3,
         {{{3, 0}, "I31"},
          {{2, 1}, "I32"},
          {{1, 2}, "I33"},
          {{0, 3}, "I34"},
          {{2, 0}, "I35"},
          {{1, 1}, "I36"},
          {{0, 2}, "I37"},
          {{1, 0}, "I38"},
          {{0, 1}, "I39"}}}};

    SeriesTable table;
    for (int m = 1; m <= depth; ++m) {
        // interpolate along h2 for each h1-node, then along h1
        std::vector<std::vector<BiSeries>> partial(n);
        for (size_t u = 0; u < n; ++u) {
            for (size_t b = 0; b < n; ++b) {
                BiSeries acc = BiSeries::zero(N, t);
                for (size_t v = 0; v < n; ++v)
                    acc += grid[u][v][static_cast<size_t>(m)] * rows[v][b];
                partial[u].push_back(std::move(acc));
            }
        }
        for (size_t a = 0; a < n; ++a) {
            for (size_t b = 0; b < n; ++b) {
                BiSeries acc = BiSeries::zero(N, t);
                for (size_t u = 0; u < n; ++u) acc += partial[u][b] * rows[u][a];
                const int ia = static_cast<int>(a), ib = static_cast<int>(b);
                if (ia + ib > m || (ia == 0 && ib == 0)) {
                    if (!acc.is_zero())
                        throw std::logic_error(
                            "local_i_table: unexpected nonzero coefficient on " +
                            monomial_name(ia, ib) + " at z^-" + std::to_string(m));
                    continue;
                }
                table.entries.emplace(names.at(m).at({ia, ib}), std::move(acc));
            }
        }
    }
    return table;
}

}  // namespace qfib
