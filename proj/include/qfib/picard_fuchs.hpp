#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfib/zseries.hpp"

namespace qfib {

// Letters of an operator word, composed left-to-right as printed:
// applying a word means applying its rightmost letter first.
enum PFLetter : int {
    kLetterZ = 0,   // multiplication by z
    kLetterM1 = 1,  // M_1 = H_1 + z q_1 d/dq_1
    kLetterM2 = 2,  // M_2 = H_2 + z q_2 d/dq_2
};

// One expanded term: coeff * q1^e1 q2^e2 * (word of letters).
struct PFTerm {
    Cyclo coeff;
    int e1 = 0;
    int e2 = 0;
    std::vector<int> word;
};

struct PFOperator {
    std::string name;
    std::vector<PFTerm> terms;

    int max_word() const {
        size_t m = 0;
        for (const auto& t : terms) m = std::max(m, t.word.size());
        return static_cast<int>(m);
    }
};

namespace detail {

// A factor is a list of (letter, coefficient) options, where letter -1 means
// the constant option (no letter appended).  Expanding a product of factors
// distributes all choices, preserving the printed left-to-right letter order,
// and collects like words.
using PFFactor = std::vector<std::pair<int, Cyclo>>;

inline std::vector<std::pair<std::vector<int>, Cyclo>> expand_factors(
    const std::vector<PFFactor>& factors, int order) {
    std::map<std::vector<int>, Cyclo> acc;
    acc.emplace(std::vector<int>{}, Cyclo::one(order));
    for (const auto& f : factors) {
        std::map<std::vector<int>, Cyclo> next;
        for (const auto& [word, c] : acc) {
            for (const auto& [letter, fc] : f) {
                if (fc.is_zero()) continue;
                std::vector<int> w = word;
                if (letter >= 0) w.push_back(letter);
                auto it = next.find(w);
                if (it == next.end())
                    next.emplace(std::move(w), c * fc);
                else
                    it->second = it->second + c * fc;
            }
        }
        acc = std::move(next);
    }
    std::vector<std::pair<std::vector<int>, Cyclo>> out;
    for (auto& [w, c] : acc)
        if (!c.is_zero()) out.emplace_back(w, c);
    return out;
}

}  // namespace detail

// The two Picard-Fuchs operators of the geometry, fully expanded into words:
//   P_axis = prod_{lambda in weights_axis} (M_axis - lambda)
//            - q_axis * prod_k (c1 M_1 + c2 M_2 + k z),
// where (c1, c2) is the twist row (negated for a bundle-direction row) and k
// runs over 1..c_axis for a hypersurface row, 0..c_axis-1 for a bundle row.
// For the implemented weight sets the weight product collapses to
// M_axis^{n_axis+1} -+ 1 exactly as printed.
inline std::array<PFOperator, 2> pf_operators(const GeometrySpec& g) {
    if (g.a_twists.size() + g.b_twists.size() != 1)
        throw std::invalid_argument("pf_operators: exactly one twist row is supported");
    const int N = g.zeta_order;
    const bool is_b = !g.b_twists.empty();
    const long c1 = is_b ? -g.b_twists[0].first : g.a_twists[0].first;
    const long c2 = is_b ? -g.b_twists[0].second : g.a_twists[0].second;

    std::array<PFOperator, 2> ops;
    for (int axis = 1; axis <= 2; ++axis) {
        const int letter = axis == 1 ? kLetterM1 : kLetterM2;
        const std::vector<Cyclo>& weights = axis == 1 ? g.w1 : g.w2;

        std::vector<detail::PFFactor> wf;
        for (const Cyclo& lam : weights)
            wf.push_back({{letter, Cyclo::one(N)}, {-1, -lam}});
        auto weight_terms = detail::expand_factors(wf, N);

        const long ca = axis == 1 ? c1 : c2;
        std::vector<detail::PFFactor> tf;
        for (long k = is_b ? 0 : 1; k < (is_b ? ca : ca + 1); ++k)
            tf.push_back({{kLetterM1, Cyclo::integer(c1, N)},
                          {kLetterM2, Cyclo::integer(c2, N)},
                          {kLetterZ, Cyclo::integer(k, N)}});
        auto twist_terms = detail::expand_factors(tf, N);

        PFOperator op;
        op.name = "pf-axis" + std::to_string(axis);
        for (auto& [w, c] : weight_terms) op.terms.push_back({c, 0, 0, w});
        for (auto& [w, c] : twist_terms)
            op.terms.push_back({-c, axis == 1 ? 1 : 0, axis == 2 ? 1 : 0, w});
        ops[static_cast<size_t>(axis - 1)] = std::move(op);
    }
    return ops;
}

// Apply an expanded operator to a cohomology-valued Laurent series.  The
// exactness floor of the result rises by the longest word.
inline ZSeries pf_apply(const PFOperator& op, const ZSeries& s) {
    const GeometrySpec& g = s.geometry();
    const Trunc t = s.trunc();
    ZSeries acc = ZSeries::zero(g, t, s.exact_lo() + op.max_word(), s.window_hi());
    for (const auto& term : op.terms) {
        ZSeries cur = s;
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
            switch (*it) {
                case kLetterZ: cur = cur.shifted_z(1); break;
                case kLetterM1: cur = cur.apply_M(1); break;
                case kLetterM2: cur = cur.apply_M(2); break;
                default: throw std::logic_error("pf_apply: unknown letter");
            }
        }
        cur = cur * term.coeff;
        if (term.e1 != 0 || term.e2 != 0)
            cur = cur * BiSeries::monomial(Cyclo::one(g.zeta_order), term.e1, term.e2,
                                           g.zeta_order, t);
        acc = acc + cur;
    }
    return acc;
}

// The same operators in factored form: P_axis applied to f is
//   prod_lam (M_axis - lam) f  -  q1^qe1 q2^qe2 * prod_k (c1 M_1 + c2 M_2 + ks[k] z) f,
// applied factor by factor.  Algebraically identical to the expanded words
// (all letters commute with z and constants), but linear instead of
// exponential in the number of factors — the asymptotic solvers use this path.
struct PFFactoredOperator {
    std::string name;
    int axis = 1;
    std::vector<Cyclo> weights;
    Cyclo c1, c2;
    std::vector<long> ks;
    int qe1 = 0, qe2 = 0;
};

inline std::array<PFFactoredOperator, 2> pf_factored(const GeometrySpec& g) {
    if (g.a_twists.size() + g.b_twists.size() != 1)
        throw std::invalid_argument("pf_factored: exactly one twist row is supported");
    const int N = g.zeta_order;
    const bool is_b = !g.b_twists.empty();
    const long c1 = is_b ? -g.b_twists[0].first : g.a_twists[0].first;
    const long c2 = is_b ? -g.b_twists[0].second : g.a_twists[0].second;
    std::array<PFFactoredOperator, 2> ops;
    for (int axis = 1; axis <= 2; ++axis) {
        PFFactoredOperator op;
        op.name = "pf-axis" + std::to_string(axis) + "-factored";
        op.axis = axis;
        op.weights = axis == 1 ? g.w1 : g.w2;
        op.c1 = Cyclo::integer(c1, N);
        op.c2 = Cyclo::integer(c2, N);
        const long ca = axis == 1 ? c1 : c2;
        for (long k = is_b ? 0 : 1; k < (is_b ? ca : ca + 1); ++k) op.ks.push_back(k);
        op.qe1 = axis == 1 ? 1 : 0;
        op.qe2 = axis == 2 ? 1 : 0;
        ops[static_cast<size_t>(axis - 1)] = std::move(op);
    }
    return ops;
}

// Apply the conjugated operator  e^{-U/z} P e^{U/z}  to the polynomial
// R_0 + R_1 z + ... + R_K z^K, working at a single fixed point where the
// hyperplane classes are scalars.  Conjugation is an algebra map sending
//   M_1 -> LL*(.) + z D_1 ,   M_2 -> UD*(.) + z D_2 ,   z -> z
// with LL = alpha_i + D_1 U and UD = beta_j + D_2 U, so the word expansion of
// P applies verbatim with these letters.  Returns the exact coefficients of
// z^0..z^{z_max} of the result for the given (finite) input polynomial.
inline std::vector<BiSeries> conjugated_apply(const PFOperator& op, const BiSeries& LL,
                                              const BiSeries& UD,
                                              const std::vector<BiSeries>& R, int z_max) {
    const int N = combine_orders(LL.order(), UD.order());
    const Trunc t = min(LL.trunc(), UD.trunc());
    const BiSeries zero = BiSeries::zero(N, t);
    using State = std::vector<BiSeries>;

    auto apply_letter = [&](const State& in, int letter) {
        State out(in.size() + 1, zero);
        switch (letter) {
            case kLetterZ:
                for (size_t m = 0; m < in.size(); ++m) out[m + 1] = in[m];
                break;
            case kLetterM1:
                for (size_t m = 0; m < in.size(); ++m) {
                    out[m] += LL * in[m];
                    out[m + 1] += in[m].euler_derivative(1);
                }
                break;
            case kLetterM2:
                for (size_t m = 0; m < in.size(); ++m) {
                    out[m] += UD * in[m];
                    out[m + 1] += in[m].euler_derivative(2);
                }
                break;
            default: throw std::logic_error("conjugated_apply: unknown letter");
        }
        return out;
    };

    State total(static_cast<size_t>(z_max) + 1, zero);
    for (const auto& term : op.terms) {
        State cur = R.empty() ? State{zero} : R;
        for (auto it = term.word.rbegin(); it != term.word.rend(); ++it)
            cur = apply_letter(cur, *it);
        BiSeries factor = BiSeries::monomial(term.coeff, term.e1, term.e2, N, t);
        for (size_t m = 0; m < cur.size() && m < total.size(); ++m)
            total[m] += cur[m] * factor;
    }
    return total;
}

// Factored-path counterpart of conjugated_apply (same result, linear cost in
// the number of factors).
inline std::vector<BiSeries> conjugated_apply_factored(const PFFactoredOperator& op,
                                                       const BiSeries& LL, const BiSeries& UD,
                                                       const std::vector<BiSeries>& R,
                                                       int z_max) {
    const int N = combine_orders(LL.order(), UD.order());
    const Trunc t = min(LL.trunc(), UD.trunc());
    const BiSeries zero = BiSeries::zero(N, t);
    using State = std::vector<BiSeries>;

    auto apply_M = [&](const State& in, int axis) {
        const BiSeries& mult = axis == 1 ? LL : UD;
        State out(in.size() + 1, zero);
        for (size_t m = 0; m < in.size(); ++m) {
            out[m] += mult * in[m];
            out[m + 1] += in[m].euler_derivative(axis);
        }
        return out;
    };

    const State start = R.empty() ? State{zero} : R;

    State a = start;
    for (const Cyclo& lam : op.weights) {
        State next = apply_M(a, op.axis);
        for (size_t m = 0; m < a.size(); ++m) next[m] -= a[m] * lam;
        a = std::move(next);
    }

    State b = start;
    for (long k : op.ks) {
        State next = apply_M(b, 1);
        const State m2 = apply_M(b, 2);
        for (size_t m = 0; m < next.size(); ++m)
            next[m] = next[m] * op.c1 + m2[m] * op.c2;
        if (k != 0) {
            const Cyclo kc = Cyclo::integer(k, N);
            for (size_t m = 0; m + 1 < next.size(); ++m) next[m + 1] += b[m] * kc;
        }
        b = std::move(next);
    }
    const BiSeries q = BiSeries::monomial(Cyclo::one(N), op.qe1, op.qe2, N, t);

    State total(static_cast<size_t>(z_max) + 1, zero);
    for (size_t m = 0; m < total.size(); ++m) {
        if (m < a.size()) total[m] += a[m];
        if (m < b.size()) total[m] -= b[m] * q;
    }
    return total;
}

// Factored-path counterpart of pf_apply.
inline ZSeries pf_apply_factored(const PFFactoredOperator& op, const ZSeries& s) {
    const GeometrySpec& g = s.geometry();
    const Trunc t = s.trunc();
    const int N = g.zeta_order;
    const int depth = static_cast<int>(op.weights.size() > op.ks.size() ? op.weights.size()
                                                                        : op.ks.size());

    ZSeries a = s;
    for (const Cyclo& lam : op.weights) a = a.apply_M(op.axis) - a * lam;

    ZSeries b = s;
    for (long k : op.ks) {
        ZSeries next = b.apply_M(1) * op.c1 + b.apply_M(2) * op.c2;
        if (k != 0) next = next + b.shifted_z(1) * Cyclo::integer(k, N);
        b = std::move(next);
    }
    b = b * BiSeries::monomial(Cyclo::one(N), op.qe1, op.qe2, N, t);

    ZSeries acc = ZSeries::zero(g, t, s.exact_lo() + depth, s.window_hi());
    return acc + a - b;
}

}  // namespace qfib
