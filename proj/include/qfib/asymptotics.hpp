#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfib/picard_fuchs.hpp"

namespace qfib {

// One pivot use while solving the asymptotic expansion degree by degree.
struct PivotRecord {
    int d1 = 0;
    int d2 = 0;
    std::string unknown;  // "LL", "UD", "R0", "R1", ...
    int equation = 0;     // which Picard-Fuchs operator supplied the equation (1 or 2)
};

// Solved asymptotic data of the fixed-point restriction
//   e^{U/z} (R_0 + R_1 z + ... + R_K z^K + ...):
// the logarithmic-derivative series LL = alpha_i + D_1 U, UD = beta_j + D_2 U
// and the R-coefficients.  U itself is never materialized.
struct AsymptoticData {
    int i, j;
    BiSeries LL, UD;
    std::vector<BiSeries> R;
    std::vector<PivotRecord> log;
};

namespace detail {

// Derivative of the weight polynomial prod(x - lambda) at x = lambda_k: the
// pivot constant of the leading equations.  Nonzero because the weights are
// pairwise distinct.
inline Cyclo weight_poly_derivative(const std::vector<Cyclo>& weights, size_t k, int order) {
    Cyclo p = Cyclo::one(order);
    for (size_t m = 0; m < weights.size(); ++m)
        if (m != k) p = p * (weights[k] - weights[m]);
    return p;
}

}  // namespace detail

// Solve the two z^0 (leading) equations of the conjugated operators for LL and
// UD, degree by degree along total-degree diagonals.  At bidegree (d1,d2) the
// first equation is linear in the new LL-coefficient with the constant pivot
// prod_{m != i}(alpha_i - lambda_{1,m}), and contains no same-degree
// UD-coefficient (the twist term carries an explicit q_1); symmetrically for
// the second equation.
inline std::pair<BiSeries, BiSeries> solve_leading(const GeometrySpec& g, int i, int j, Trunc t,
                                                   std::vector<PivotRecord>* log = nullptr) {
    const int N = g.zeta_order;
    const auto ops = pf_factored(g);
    const Cyclo piv1 = detail::weight_poly_derivative(g.w1, static_cast<size_t>(i), N).inverse();
    const Cyclo piv2 = detail::weight_poly_derivative(g.w2, static_cast<size_t>(j), N).inverse();

    BiSeries L = BiSeries::constant(g.w1[static_cast<size_t>(i)], N, t);
    BiSeries U = BiSeries::constant(g.w2[static_cast<size_t>(j)], N, t);
    const std::vector<BiSeries> one{BiSeries::one(N, t)};

    for (int D = 0; D <= t.n1 + t.n2; ++D) {
        const BiSeries f1 = conjugated_apply_factored(ops[0], L, U, one, 0)[0];
        const BiSeries f2 = conjugated_apply_factored(ops[1], L, U, one, 0)[0];
        for (int d1 = std::max(0, D - t.n2); d1 <= std::min(D, t.n1); ++d1) {
            const int d2 = D - d1;
            if (D == 0) {
                if (!f1.coefficient(0, 0).is_zero() || !f2.coefficient(0, 0).is_zero())
                    throw std::logic_error("solve_leading: constant term of the symbol is nonzero");
                continue;
            }
            const Cyclo x = -(f1.coefficient(d1, d2) * piv1);
            const Cyclo y = -(f2.coefficient(d1, d2) * piv2);
            L.add_to(d1, d2, x);
            U.add_to(d1, d2, y);
            if (log) {
                log->push_back({d1, d2, "LL", 1});
                log->push_back({d1, d2, "UD", 2});
            }
        }
    }
    return {L, U};
}

// Solve R_0..R_K from the z^{n+1} equations.  R_n is normalized by
// R_n(0,0) = delta_{n0}; at bidegree (d1,d2) the equation of operator 1 is
// linear in the new coefficient with pivot d1 * prod_{m != i}(alpha_i -
// lambda_{1,m}) (used when d1 > 0), otherwise operator 2 supplies the pivot
// d2 * (...).  The z^{n+1} coefficient never involves R_{n+1}: its only route
// is through the z^0 symbol, which the solved (LL, UD) annihilate.  After
// solving, the residuals of both conjugated operators are re-verified to
// vanish for every z-power up to K+1.
inline AsymptoticData solve_asymptotics(const GeometrySpec& g, int i, int j, int K, Trunc t) {
    const int N = g.zeta_order;
    const auto ops = pf_factored(g);
    std::vector<PivotRecord> log;
    auto [L, U] = solve_leading(g, i, j, t, &log);
    AsymptoticData data{i, j, std::move(L), std::move(U), {}, std::move(log)};

    const Cyclo piv1 = detail::weight_poly_derivative(g.w1, static_cast<size_t>(i), N).inverse();
    const Cyclo piv2 = detail::weight_poly_derivative(g.w2, static_cast<size_t>(j), N).inverse();

    data.R.push_back(BiSeries::one(N, t));
    for (int n = 0; n <= K; ++n) {
        if (n > 0) data.R.push_back(BiSeries::zero(N, t));
        BiSeries& Rn = data.R.back();
        for (int D = 0; D <= t.n1 + t.n2; ++D) {
            const auto e1 = conjugated_apply_factored(ops[0], data.LL, data.UD, data.R, n + 1);
            const auto e2 = conjugated_apply_factored(ops[1], data.LL, data.UD, data.R, n + 1);
            for (int d1 = std::max(0, D - t.n2); d1 <= std::min(D, t.n1); ++d1) {
                const int d2 = D - d1;
                if (d1 == 0 && d2 == 0) {
                    // normalized coefficient: the equation must already hold
                    if (!e1[static_cast<size_t>(n + 1)].coefficient(0, 0).is_zero() ||
                        !e2[static_cast<size_t>(n + 1)].coefficient(0, 0).is_zero())
                        throw std::logic_error(
                            "solve_asymptotics: constant term of the z^" + std::to_string(n + 1) +
                            " equation is nonzero");
                    continue;
                }
                Cyclo x(Cyclo::zero(N));
                int eq = 0;
                if (d1 > 0) {
                    eq = 1;
                    x = -(e1[static_cast<size_t>(n + 1)].coefficient(d1, d2) * piv1 *
                          Cyclo::rational(1, d1, N));
                } else {
                    eq = 2;
                    x = -(e2[static_cast<size_t>(n + 1)].coefficient(d1, d2) * piv2 *
                          Cyclo::rational(1, d2, N));
                }
                Rn.add_to(d1, d2, x);
                data.log.push_back({d1, d2, "R" + std::to_string(n), eq});
            }
        }
    }

    for (const PFFactoredOperator& op : ops) {
        const auto res = conjugated_apply_factored(op, data.LL, data.UD, data.R, K + 1);
        for (int m = 0; m <= K + 1; ++m)
            if (!res[static_cast<size_t>(m)].is_zero())
                throw std::logic_error("solve_asymptotics: residual of " + op.name +
                                       " does not vanish at z^" + std::to_string(m));
    }
    return data;
}

// Closed form of the q2-constant slice of LL for the bundle-twisted local
// geometry:
//   L_{ij}(q1) = (4 beta_j q1 + alpha_i sqrt(1 + 4(beta_j^2 - 1) q1)) / (1 - 4 q1).
inline UniSeries closed_form_L_local(const GeometrySpec& g, int i, int j, int order) {
    if (g.b_twists.empty())
        throw std::invalid_argument("closed_form_L_local: geometry has no bundle-direction twist");
    const int N = g.zeta_order;
    const Cyclo alpha = g.w1[static_cast<size_t>(i)];
    const Cyclo beta = g.w2[static_cast<size_t>(j)];
    UniSeries radicand = UniSeries::one(N, order, 1);
    radicand.add_to(1, (beta * beta - Cyclo::one(N)) * Cyclo::integer(4, N));
    const UniSeries root = radicand.nth_root(2, Cyclo::one(N));
    UniSeries numer = root * alpha;
    numer.add_to(1, beta * Cyclo::integer(4, N));
    UniSeries denom = UniSeries::one(N, order, 1);
    denom.add_to(1, Cyclo::integer(-4, N));
    return numer * denom.invert_unit();
}

// ---------------------------------------------------------------------------
// Exact linear fits against finite generator bases.

enum class FitStatus { kUnique, kAmbiguous, kNoSolution };

struct FitResult {
    FitStatus status = FitStatus::kNoSolution;
    std::vector<Cyclo> coeffs;  // aligned with the basis; particular solution if ambiguous
    int fit_order = 0;
};

// Solve sum_b c_b * basis[b] == target on q-coefficients 0..fit_order by
// Gaussian elimination over the cyclotomic field.  kAmbiguous means the
// system is consistent but underdetermined at this order (the caller should
// enlarge fit_order or shrink the basis); kNoSolution means inconsistent.
inline FitResult ring_fit(const UniSeries& target, const std::vector<UniSeries>& basis,
                          int fit_order) {
    const int order = target.order();
    const size_t cols = basis.size();
    const size_t rows = static_cast<size_t>(fit_order) + 1;
    std::vector<std::vector<Cyclo>> A(rows, std::vector<Cyclo>(cols + 1, Cyclo::zero(order)));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t b = 0; b < cols; ++b)
            A[r][b] = basis[b].coefficient(static_cast<int>(r)).embedded(order);
        A[r][cols] = target.coefficient(static_cast<int>(r));
    }

    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && A[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(A[rank], A[sel]);
        const Cyclo inv = A[rank][c].inverse();
        for (size_t k = c; k <= cols; ++k) A[rank][k] = A[rank][k] * inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || A[r][c].is_zero()) continue;
            const Cyclo f = A[r][c];
            for (size_t k = c; k <= cols; ++k) A[r][k] = A[r][k] - f * A[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }

    FitResult out;
    out.fit_order = fit_order;
    for (size_t r = rank; r < rows; ++r)
        if (!A[r][cols].is_zero()) {
            out.status = FitStatus::kNoSolution;
            return out;
        }
    out.coeffs.assign(cols, Cyclo::zero(order));
    for (size_t r = 0; r < rank; ++r) out.coeffs[pivot_col[r]] = A[r][cols];
    out.status = rank == cols ? FitStatus::kUnique : FitStatus::kAmbiguous;
    return out;
}

// Re-check a fitted combination out to the full truncation of the supplied
// series (callers build these deeper than the fit order).
inline bool fit_validates(const std::vector<Cyclo>& coeffs, const UniSeries& target,
                          const std::vector<UniSeries>& basis) {
    if (coeffs.size() != basis.size())
        throw std::invalid_argument("fit_validates: coefficient/basis size mismatch");
    UniSeries acc = target;
    for (size_t b = 0; b < basis.size(); ++b) acc -= basis[b] * coeffs[b];
    return acc.is_zero();
}

// Basis monomials L^a * s^b for a = 0..max_L, b = 0..max_s, where s is the
// inverse square root of (1 + beta*L) normalized to constant term 1 (the
// normalization changes each monomial by a nonzero complex constant, so the
// complex span is unchanged while all coefficients stay in the cyclotomic
// field).
inline std::vector<UniSeries> sqrt_ring_basis(const UniSeries& L, const Cyclo& beta, int max_L,
                                              int max_s) {
    const int N = combine_orders(L.order(), beta.order());
    const int trunc = L.trunc();
    UniSeries u = UniSeries::one(N, trunc, L.var()) + L * beta;
    const Cyclo u0 = u.coefficient(0);
    if (u0.is_zero()) throw std::domain_error("sqrt_ring_basis: 1 + beta*L vanishes at q = 0");
    u = u * u0.inverse();
    const UniSeries s = u.invert_unit().nth_root(2, Cyclo::one(N));
    std::vector<UniSeries> basis;
    UniSeries sp = UniSeries::one(N, trunc, L.var());
    for (int b = 0; b <= max_s; ++b) {
        UniSeries m = sp;
        for (int a = 0; a <= max_L; ++a) {
            basis.push_back(m);
            m = m * L;
        }
        sp = sp * s;
    }
    return basis;
}

// Basis monomials r^{1+2m} * (1 + beta r^2)^{-p}, m = -max_m..max_m,
// p = 0..max_p, normalized so that every monomial has cyclotomic coefficients
// (same complex-span argument as above).
inline std::vector<UniSeries> odd_r_basis(const UniSeries& r, const Cyclo& beta, int max_m,
                                          int max_p) {
    const int N = combine_orders(r.order(), beta.order());
    const int trunc = r.trunc();
    const UniSeries r2 = r * r;
    UniSeries u = UniSeries::one(N, trunc, r.var()) + r2 * beta;
    const Cyclo u0 = u.coefficient(0);
    if (u0.is_zero()) throw std::domain_error("odd_r_basis: 1 + beta*r^2 vanishes at q = 0");
    const UniSeries v = (u * u0.inverse()).invert_unit();
    const UniSeries r2inv = r2.invert_unit();
    std::vector<UniSeries> basis;
    UniSeries vp = UniSeries::one(N, trunc, r.var());
    for (int p = 0; p <= max_p; ++p) {
        UniSeries m = r * vp;
        for (int k = 0; k < max_m; ++k) m = m * r2inv;  // start at r^{1-2*max_m}
        for (int mm = -max_m; mm <= max_m; ++mm) {
            basis.push_back(m);
            m = m * r2;
        }
        vp = vp * v;
    }
    return basis;
}

// Laurent monomials L^m, m = -max_abs..max_abs.
inline std::vector<UniSeries> laurent_basis(const UniSeries& L, int max_abs) {
    const UniSeries inv = L.invert_unit();
    std::vector<UniSeries> basis;
    UniSeries m = UniSeries::one(L.order(), L.trunc(), L.var());
    for (int k = 0; k < max_abs; ++k) m = m * inv;
    for (int k = -max_abs; k <= max_abs; ++k) {
        basis.push_back(m);
        m = m * L;
    }
    return basis;
}

// Adaptive Laurent-exponent bound used by the verification suites.
inline int laurent_bound(int order) { return 3 + order / 3; }

}  // namespace qfib
