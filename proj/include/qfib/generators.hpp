#pragma once

// Generator series of the three univariate fibration rings, the quasimodular
// side (Eisenstein series and the discriminant), the mirror-map change of
// variable, and the identities tying the two sides together.
//
//   elliptic ring  C[L^{±3}, B1p, X]:  L = (1-27q)^{-1/3},
//       I1 = 3 Σ_{d≥1} (3d-1)!/(d!)^3 q^d,  B1p = D I1,  X = D B1p/(1+B1p),
//       closed under D via  D L = L(L^3-1)/3  and
//       X^2 - (L^3-1)X + DX - (2/9)(L^3-1) = 0.
//       The mirror-map exponent is NOT I1 but the hypergeometric ratio
//       [3 Σ_{d≥1} (3d)!/(d!)^3 (Σ_{r=d+1}^{3d} 1/r) q^d] / [Σ_{d≥0} (3d)!/(d!)^3 q^d];
//       only with it do the three quasimodularity identities below hold
//       (they fail at second order with I1 in the exponent, while
//       B1p = D I1 is confirmed independently against the fibration tables).
//   K3 ring  C[L^{±4}, A1p, X]:  L = (1-256q)^{-1/4},
//       I1 = [4 Σ_{d≥1} (4d)!/(d!)^4 (Σ_{r=d+1}^{4d} 1/r) q^d]
//            / [Σ_{d≥0} (4d)!/(d!)^4 q^d],  A1p = D I1,  X = D A1p/(1+A1p),
//       closed under D via  D L = L(L^4-1)/4  and
//       X^2 - 2 DX + (1/16)(12L^8 - 11L^4 - 1) = 0.
//   local ring  C[X^2, (1+X^2)^{-1}]:  X = (1-8q)^{-1/2},  D X = 4q X^3.
//
// D denotes the Euler derivative q d/dq throughout.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <qfib/biseries.hpp>
#include <qfib/geometry.hpp>
#include <qfib/ifunction.hpp>
#include <qfib/report.hpp>

namespace qfib {

// A bundle of named univariate series sharing (order, trunc, var).
struct GeneratorSet {
    std::map<std::string, UniSeries> named;

    const UniSeries& at(const std::string& key) const {
        auto it = named.find(key);
        if (it == named.end()) throw std::out_of_range("GeneratorSet: no series named " + key);
        return it->second;
    }
    bool has(const std::string& key) const { return named.count(key) != 0; }
};

struct ModularSet {
    UniSeries e2, e4, e6, delta;
};

namespace detail {

// (1 - c q)^{-1/n} as an exact series.
inline UniSeries binomial_inverse_root(long c, long n, int order, int trunc, int var) {
    UniSeries base = UniSeries::one(order, trunc, var);
    base.add_to(1, Cyclo::integer(-c, order));
    return base.nth_root(n, Cyclo::one(order)).invert_unit();
}

}  // namespace detail

inline GeneratorSet elliptic_generators(int trunc, int order = 1, int var = 1) {
    GeneratorSet out;
    out.named.insert_or_assign("L", detail::binomial_inverse_root(27, 3, order, trunc, var));

    UniSeries i1(order, trunc, var);
    mpz_class num = 2, den = 1;  // (3d-1)! and (d!)^3, updated incrementally
    for (long d = 1; d <= trunc; ++d) {
        if (d > 1) {
            // (3d-1)!/(3(d-1)-1)! = (3d-1)(3d-2)(3d-3);  (d!)^3/((d-1)!)^3 = d^3
            num *= mpz_class(3 * d - 1) * (3 * d - 2) * (3 * d - 3);
            den *= mpz_class(d) * d * d;
        }
        i1.set(static_cast<int>(d), Cyclo(mpq_class(3 * num, den), order));
    }
    const UniSeries b1p = i1.euler_derivative();
    const UniSeries one = UniSeries::one(order, trunc, var);
    out.named.insert_or_assign("I1", i1);
    out.named.insert_or_assign("B1p", b1p);
    out.named.insert_or_assign("X", b1p.euler_derivative() * (one + b1p).invert_unit());

    // mirror-map exponent: 3 Σ (3d)!/(d!)^3 (H_{3d} - H_d) q^d / I0, with
    // I0 = Σ (3d)!/(d!)^3 q^d = 1 + B1p.
    UniSeries mnum(order, trunc, var);
    mpz_class fact = 1, dfact = 1;  // (3d)! and (d!)^3
    mpq_class window = 0;           // Σ_{r=d+1}^{3d} 1/r
    for (long d = 1; d <= trunc; ++d) {
        for (long k = 3 * (d - 1) + 1; k <= 3 * d; ++k) fact *= k;
        dfact *= mpz_class(d) * d * d;
        window -= mpq_class(1, d);
        for (long r = 3 * d - 2; r <= 3 * d; ++r) window += mpq_class(1, r);
        mnum.set(static_cast<int>(d), Cyclo(mpq_class(3 * mpq_class(fact, dfact) * window), order));
    }
    out.named.insert_or_assign("mirror", mnum * (one + b1p).invert_unit());
    return out;
}

inline GeneratorSet k3_generators(int trunc, int order = 1, int var = 1) {
    GeneratorSet out;
    out.named.insert_or_assign("L", detail::binomial_inverse_root(256, 4, order, trunc, var));

    UniSeries numer(order, trunc, var);
    UniSeries denom = UniSeries::one(order, trunc, var);
    mpz_class fact = 1, dfact = 1;  // (4d)! and (d!)^4
    mpq_class harmonic = 0;         // Σ_{r=d+1}^{4d} 1/r
    for (long d = 1; d <= trunc; ++d) {
        for (long k = 4 * (d - 1) + 1; k <= 4 * d; ++k) fact *= k;
        dfact *= mpz_class(d) * d * d * d;
        // update Σ_{r=d+1}^{4d} 1/r from the previous window (d-1 -> d)
        harmonic -= mpq_class(1, d);
        for (long r = 4 * d - 3; r <= 4 * d; ++r) harmonic += mpq_class(1, r);
        const mpq_class coeff(fact, dfact);
        numer.set(static_cast<int>(d), Cyclo(mpq_class(4 * coeff * harmonic), order));
        denom.set(static_cast<int>(d), Cyclo(coeff, order));
    }
    const UniSeries i1 = numer * denom.invert_unit();
    const UniSeries a1p = i1.euler_derivative();
    const UniSeries one = UniSeries::one(order, trunc, var);
    out.named.insert_or_assign("I1", i1);
    out.named.insert_or_assign("A1p", a1p);
    out.named.insert_or_assign("X", a1p.euler_derivative() * (one + a1p).invert_unit());
    out.named.insert_or_assign("mirror", i1);  // here I1 already is the hypergeometric ratio
    return out;
}

inline GeneratorSet local_generators(int trunc, int order = 1, int var = 1) {
    GeneratorSet out;
    out.named.insert_or_assign("X", detail::binomial_inverse_root(8, 2, order, trunc, var));
    return out;
}

// The two extra K3 generators, imported from the q2-constant slices of the
// named S-operator coefficient tables of the K3 fibration geometry.
inline GeneratorSet k3_extra_generators(const SeriesTable& k3_tables) {
    GeneratorSet out;
    out.named.insert_or_assign("E1p", k3_tables.at("E1").slice_q2(0).euler_derivative());
    out.named.insert_or_assign("B2p", k3_tables.at("B2").slice_q2(0).euler_derivative());
    return out;
}

// Bernoulli numbers B_0..B_n by the defining recurrence
// Σ_{j=0}^{m} C(m+1, j) B_j = 0  (m ≥ 1), with B_1 = -1/2.
inline std::vector<mpq_class> bernoulli_numbers(int n) {
    std::vector<mpq_class> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mpz_class binom = 1;  // C(m+1, j), updated over j
        mpq_class acc = 0;
        for (int j = 0; j < m; ++j) {
            acc += b[j] * binom;
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / binom;  // binom now equals C(m+1, m) = m+1
    }
    return b;
}

// E_k(Q) = 1 - (2k/B_k) Σ_{n≥1} n^{k-1} Q^n / (1-Q^n)  expanded by divisor
// sums, and the discriminant Δ = Q Π_{n≥1} (1-Q^n)^24, truncated.
inline ModularSet eisenstein_and_delta(int trunc, int order = 1, int var = 1) {
    const std::vector<mpq_class> bern = bernoulli_numbers(6);
    auto eisenstein = [&](int k) {
        UniSeries e = UniSeries::one(order, trunc, var);
        const mpq_class factor = mpq_class(-2 * k) / bern[k];
        for (int n = 1; n <= trunc; ++n) {
            mpz_class nk = 1;
            for (int p = 0; p < k - 1; ++p) nk *= n;
            for (int m = n; m <= trunc; m += n) e.add_to(m, Cyclo(factor * nk, order));
        }
        return e;
    };
    UniSeries delta = UniSeries::monomial(Cyclo::one(order), 1, order, trunc, var);
    for (int n = 1; n <= trunc; ++n) {
        UniSeries factor = UniSeries::one(order, trunc, var);
        factor.add_to(n, Cyclo::integer(-1, order));
        delta *= factor.pow_int(24);
    }
    return ModularSet{eisenstein(2), eisenstein(4), eisenstein(6), delta};
}

// Express a q-series as a Q-series through the mirror map Q(q) = mirror:
// composition with the compositional inverse of the mirror map.
inline UniSeries mirror_transport(const UniSeries& a, const UniSeries& mirror) {
    if (!mirror.coefficient(0).is_zero() || mirror.coefficient(1) != Cyclo::one(mirror.order()))
        throw std::domain_error("mirror_transport: mirror map must be q + O(q^2)");
    return a.substitute(mirror.reversion());
}

// The mirror map q·Exp(mirror) for a generator set carrying its mirror-map
// exponent series under the key "mirror".
inline UniSeries mirror_map(const GeneratorSet& gen) {
    const UniSeries& m = gen.at("mirror");
    return UniSeries::monomial(Cyclo::one(m.order()), 1, m.order(), m.trunc(), m.var()) *
           m.exp_();
}

namespace detail {

inline std::string mismatch_note(const UniSeries& lhs, const UniSeries& rhs, const char* qname) {
    auto d = first_mismatch(lhs, rhs);
    if (!d) return "";
    return std::string(qname) + "^" + std::to_string(*d) + ": " +
           (lhs - rhs).coefficient(*d).literal();
}

}  // namespace detail

// The three quasimodularity identities: after the change of variable by the
// elliptic mirror map,
//   E2 = (1+B1p)^2 L^{-3} (12X + 4 - 3L^3),
//   E4 = (1+B1p)^4 L^{-6} (-8L^3 + 9L^6),
//   E6 = (1+B1p)^6 L^{-9} (-8L^3 + 36L^6 - 27L^9).
inline SuiteReport verify_asyz(int trunc, int order = 1) {
    SuiteReport report{"asyz", {}};
    const GeneratorSet gen = elliptic_generators(trunc, order);
    const ModularSet mod = eisenstein_and_delta(trunc, order);
    const UniSeries mirror = mirror_map(gen);
    const UniSeries one = UniSeries::one(order, trunc);
    const UniSeries& L = gen.at("L");
    const UniSeries& X = gen.at("X");
    const UniSeries opb = one + gen.at("B1p");
    const UniSeries l3 = L.pow_int(3), linv3 = L.pow_int(-3);

    struct Item {
        const char* id;
        UniSeries q_side;
        const UniSeries* rhs;
    };
    const std::vector<Item> items = {
        {"asyz/E2",
         opb.pow_int(2) * linv3 *
             (X * Cyclo::integer(12, order) + one * Cyclo::integer(4, order) -
              l3 * Cyclo::integer(3, order)),
         &mod.e2},
        {"asyz/E4",
         opb.pow_int(4) * linv3.pow_int(2) *
             (l3 * Cyclo::integer(-8, order) + l3.pow_int(2) * Cyclo::integer(9, order)),
         &mod.e4},
        {"asyz/E6",
         opb.pow_int(6) * linv3.pow_int(3) *
             (l3 * Cyclo::integer(-8, order) + l3.pow_int(2) * Cyclo::integer(36, order) -
              l3.pow_int(3) * Cyclo::integer(27, order)),
         &mod.e6},
    };
    for (const auto& item : items) {
        const UniSeries lhs = mirror_transport(item.q_side, mirror);
        report.add(item.id, "Q^" + std::to_string(trunc), lhs == *item.rhs,
                   detail::mismatch_note(lhs, *item.rhs, "Q"));
    }
    return report;
}

// The printed genus-one first-derivative values at q2 = 0:
//   E_SURFACE_32:  -X                      (elliptic generators)
//   E_3FOLD_33:    -(1/4)(L^3-1) - (3/2)X  (elliptic generators)
//   K3_FIB_42:     (13/12)(1-L^4) + 2X     (K3 generators)
inline UniSeries genus1_rhs(const GeometrySpec& g, int trunc) {
    const int order = 1;
    if (g.name == "E_SURFACE_32") {
        const GeneratorSet gen = elliptic_generators(trunc, order);
        return -gen.at("X");
    }
    if (g.name == "E_3FOLD_33") {
        const GeneratorSet gen = elliptic_generators(trunc, order);
        const UniSeries one = UniSeries::one(order, trunc);
        return (one - gen.at("L").pow_int(3)) * Cyclo::rational(1, 4, order) -
               gen.at("X") * Cyclo::rational(3, 2, order);
    }
    if (g.name == "K3_FIB_42") {
        const GeneratorSet gen = k3_generators(trunc, order);
        const UniSeries one = UniSeries::one(order, trunc);
        return (one - gen.at("L").pow_int(4)) * Cyclo::rational(13, 12, order) +
               gen.at("X") * Cyclo::integer(2, order);
    }
    throw std::invalid_argument("genus1_rhs: no printed genus-one value for " + g.name);
}

// D-closure of the univariate rings: the defining differential relations.
inline SuiteReport verify_d_closure(int trunc, int order = 1) {
    SuiteReport report{"d-closure", {}};
    const std::string q_orders = "q^" + std::to_string(trunc);
    const UniSeries one = UniSeries::one(order, trunc);
    const Cyclo third = Cyclo::rational(1, 3, order), quarter = Cyclo::rational(1, 4, order);

    {
        const GeneratorSet gen = elliptic_generators(trunc, order);
        const UniSeries &L = gen.at("L"), &X = gen.at("X");
        const UniSeries l3 = L.pow_int(3);
        const UniSeries lhs_dl = L.euler_derivative();
        const UniSeries rhs_dl = L * (l3 - one) * third;
        report.add("d-closure/elliptic-DL", q_orders, lhs_dl == rhs_dl,
                   detail::mismatch_note(lhs_dl, rhs_dl, "q"));
        const UniSeries qx = X * X - (l3 - one) * X + X.euler_derivative() -
                             (l3 - one) * Cyclo::rational(2, 9, order);
        report.add("d-closure/elliptic-X-quadratic", q_orders, qx.is_zero(),
                   detail::mismatch_note(qx, UniSeries::zero(order, trunc), "q"));
    }
    {
        const GeneratorSet gen = k3_generators(trunc, order);
        const UniSeries &L = gen.at("L"), &X = gen.at("X");
        const UniSeries l4 = L.pow_int(4);
        const UniSeries lhs_dl = L.euler_derivative();
        const UniSeries rhs_dl = L * (l4 - one) * quarter;
        report.add("d-closure/k3-DL", q_orders, lhs_dl == rhs_dl,
                   detail::mismatch_note(lhs_dl, rhs_dl, "q"));
        const UniSeries qx =
            X * X - X.euler_derivative() * Cyclo::integer(2, order) +
            (l4.pow_int(2) * Cyclo::integer(12, order) - l4 * Cyclo::integer(11, order) - one) *
                Cyclo::rational(1, 16, order);
        report.add("d-closure/k3-X-quadratic", q_orders, qx.is_zero(),
                   detail::mismatch_note(qx, UniSeries::zero(order, trunc), "q"));
    }
    {
        const GeneratorSet gen = local_generators(trunc, order);
        const UniSeries& X = gen.at("X");
        const UniSeries lhs = X.euler_derivative();
        const UniSeries rhs =
            UniSeries::monomial(Cyclo::integer(4, order), 1, order, trunc) * X.pow_int(3);
        report.add("d-closure/local-DX", q_orders, lhs == rhs,
                   detail::mismatch_note(lhs, rhs, "q"));
    }
    return report;
}

}  // namespace qfib
