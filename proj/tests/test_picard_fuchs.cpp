#include <catch2/catch_amalgamated.hpp>

#include "qfib/ifunction.hpp"
#include "qfib/picard_fuchs.hpp"

using namespace qfib;

namespace {

Cyclo term_coeff(const PFOperator& op, const std::vector<int>& word, int e1, int e2, int order) {
    Cyclo acc = Cyclo::zero(order);
    for (const auto& t : op.terms)
        if (t.word == word && t.e1 == e1 && t.e2 == e2) acc = acc + t.coeff;
    return acc;
}

}  // namespace

TEST_CASE("expanded operator words match the printed displays") {
    const GeometrySpec local = make_geometry(Preset::LOCAL_P1P1);
    const auto ops = pf_operators(local);
    const int N = local.zeta_order;

    // first operator: M1^2 - 1 - q1 (2M1+2M2)(2M1+2M2+z)
    const PFOperator& p1 = ops[0];
    REQUIRE(p1.max_word() == 2);
    REQUIRE(term_coeff(p1, {kLetterM1, kLetterM1}, 0, 0, N) == Cyclo::one(N));
    REQUIRE(term_coeff(p1, {}, 0, 0, N) == -Cyclo::one(N));
    REQUIRE(term_coeff(p1, {kLetterM1, kLetterM1}, 1, 0, N) == Cyclo::integer(-4, N));
    REQUIRE(term_coeff(p1, {kLetterM1, kLetterM2}, 1, 0, N) == Cyclo::integer(-4, N));
    REQUIRE(term_coeff(p1, {kLetterM2, kLetterM1}, 1, 0, N) == Cyclo::integer(-4, N));
    REQUIRE(term_coeff(p1, {kLetterM1, kLetterZ}, 1, 0, N) == Cyclo::integer(-2, N));
    REQUIRE(term_coeff(p1, {kLetterZ, kLetterM1}, 1, 0, N).is_zero());  // k=0 factor has no z
    REQUIRE(p1.terms.size() == 8);

    // second operator: M2^2 + 1 - q2 (2M1+2M2)(2M1+2M2+z); the +1 is the
    // weight product (-i)(+i) emerging from the expansion.
    const PFOperator& p2 = ops[1];
    REQUIRE(term_coeff(p2, {kLetterM2, kLetterM2}, 0, 0, N) == Cyclo::one(N));
    REQUIRE(term_coeff(p2, {}, 0, 0, N) == Cyclo::one(N));
    REQUIRE(term_coeff(p2, {kLetterM2, kLetterZ}, 0, 1, N) == Cyclo::integer(-2, N));

    // (3;2) preset, first operator: M1^3 - 1 - q1 prod_{k=1}^3 (3M1+2M2+kz)
    const GeometrySpec g32 = make_geometry(Preset::E_SURFACE_32);
    const auto ops32 = pf_operators(g32);
    const int N32 = g32.zeta_order;
    REQUIRE(ops32[0].max_word() == 3);
    REQUIRE(ops32[0].terms.size() == 29);  // M1^3, -1, and 27 twist words
    REQUIRE(term_coeff(ops32[0], {kLetterM1, kLetterM1, kLetterM1}, 0, 0, N32) == Cyclo::one(N32));
    REQUIRE(term_coeff(ops32[0], {}, 0, 0, N32) == -Cyclo::one(N32));
    REQUIRE(term_coeff(ops32[0], {kLetterZ, kLetterZ, kLetterZ}, 1, 0, N32) ==
            Cyclo::integer(-6, N32));
    REQUIRE(term_coeff(ops32[0], {kLetterM1, kLetterM1, kLetterM1}, 1, 0, N32) ==
            Cyclo::integer(-27, N32));
    REQUIRE(term_coeff(ops32[0], {kLetterM2, kLetterM2, kLetterM2}, 1, 0, N32) ==
            Cyclo::integer(-8, N32));
    // second operator: M2^2 - 1 - q2 prod_{k=1}^2 (3M1+2M2+kz)
    REQUIRE(ops32[1].max_word() == 2);
    REQUIRE(term_coeff(ops32[1], {}, 0, 0, N32) == -Cyclo::one(N32));
    REQUIRE(term_coeff(ops32[1], {kLetterZ, kLetterZ}, 0, 1, N32) == Cyclo::integer(-2, N32));
}

TEST_CASE("both Picard-Fuchs operators annihilate the hypergeometric series") {
    for (Preset p : all_presets()) {
        const GeometrySpec g = make_geometry(p);
        const Trunc t = p == Preset::LOCAL_P1P1 ? Trunc{4, 4} : Trunc{3, 2};
        const auto ops = pf_operators(g);
        const int head = std::max(ops[0].max_word(), ops[1].max_word());
        const int depth = 6;
        const ZSeries s = small_i_function(g, t, depth, head);
        for (const PFOperator& op : ops) {
            const ZSeries r = pf_apply(op, s);
            INFO(g.name << " " << op.name);
            REQUIRE(r.exact_lo() == -depth + op.max_word());
            const auto bad = r.first_nonzero();
            if (bad)
                FAIL("nonzero residual at z^" << bad->z_exp << ", fp " << bad->fp << ", q-degree ("
                                              << bad->d1 << "," << bad->d2 << ")");
        }
    }
}

TEST_CASE("operator application errors out when the z-window is too small") {
    const GeometrySpec g = make_geometry(Preset::K3_FIB_42);
    const Trunc t{2, 1};
    const ZSeries s = small_i_function(g, t, 4, 1);  // ceiling z^1 < word length 4
    const auto ops = pf_operators(g);
    REQUIRE(ops[0].max_word() == 4);
    REQUIRE_THROWS_AS(pf_apply(ops[0], s), std::domain_error);
}

TEST_CASE("conjugated engine with U = 0 agrees with the fixed-point restriction route") {
    for (Preset p : all_presets()) {
        const GeometrySpec g = make_geometry(p);
        const Trunc t{3, 2};
        const int N = g.zeta_order;
        const auto ops = pf_operators(g);
        const int head = std::max(ops[0].max_word(), ops[1].max_word());
        const ZSeries unit = ZSeries::unit(g, t, -head, head);
        for (auto [i, j] : {std::pair<int, int>{0, 0}, {g.n1, g.n2}}) {
            const BiSeries L0 = BiSeries::constant(g.w1[static_cast<size_t>(i)], N, t);
            const BiSeries U0 = BiSeries::constant(g.w2[static_cast<size_t>(j)], N, t);
            for (const PFOperator& op : ops) {
                const auto conj = conjugated_apply(op, L0, U0, {BiSeries::one(N, t)}, head);
                const ZSeries direct = pf_apply(op, unit);
                INFO(g.name << " " << op.name << " at (" << i << "," << j << ")");
                for (int m = 0; m <= head; ++m)
                    REQUIRE(conj[static_cast<size_t>(m)] == direct.coeff(g.index(i, j), m));
            }
        }
    }
}

TEST_CASE("z^0 symbol of the conjugated operators, on arbitrary series data") {
    const Trunc t{4, 4};

    // local geometry: symbols LL^2 - 1 - q1(2LL+2UD)^2 and UD^2 + 1 - q2(2LL+2UD)^2
    {
        const GeometrySpec g = make_geometry(Preset::LOCAL_P1P1);
        const int N = g.zeta_order;
        const auto ops = pf_operators(g);
        BiSeries L = BiSeries::one(N, t);
        L.add_to(1, 0, Cyclo::one(N));
        L.add_to(1, 1, Cyclo::integer(3, N));
        BiSeries U = BiSeries::constant(Cyclo::root_of_unity(4, 1), N, t);
        U.add_to(0, 1, Cyclo::integer(-2, N));
        const BiSeries one = BiSeries::one(N, t);
        const BiSeries q1 = BiSeries::monomial(Cyclo::one(N), 1, 0, N, t);
        const BiSeries q2 = BiSeries::monomial(Cyclo::one(N), 0, 1, N, t);
        const BiSeries sq = (L + U) * Cyclo::integer(2, N);
        const auto c1 = conjugated_apply(ops[0], L, U, {one}, 0);
        REQUIRE(c1[0] == L * L - one - q1 * sq * sq);
        const auto c2 = conjugated_apply(ops[1], L, U, {one}, 0);
        REQUIRE(c2[0] == U * U + one - q2 * sq * sq);
    }

    // (3;2) preset: symbols LL^3 - 1 - q1(3LL+2UD)^3 and UD^2 - 1 - q2(3LL+2UD)^2
    {
        const GeometrySpec g = make_geometry(Preset::E_SURFACE_32);
        const int N = g.zeta_order;
        const auto ops = pf_operators(g);
        BiSeries L = BiSeries::one(N, t);
        L.add_to(1, 0, Cyclo::rational(5, 3, N));
        BiSeries U = BiSeries::one(N, t);
        U.add_to(0, 1, Cyclo::root_of_unity(12, 5));
        U.add_to(1, 1, Cyclo::integer(7, N));
        const BiSeries one = BiSeries::one(N, t);
        const BiSeries q1 = BiSeries::monomial(Cyclo::one(N), 1, 0, N, t);
        const BiSeries q2 = BiSeries::monomial(Cyclo::one(N), 0, 1, N, t);
        const BiSeries mix = L * Cyclo::integer(3, N) + U * Cyclo::integer(2, N);
        const auto c1 = conjugated_apply(ops[0], L, U, {one}, 0);
        REQUIRE(c1[0] == L.pow_int(3) - one - q1 * mix.pow_int(3));
        const auto c2 = conjugated_apply(ops[1], L, U, {one}, 0);
        REQUIRE(c2[0] == U * U - one - q2 * mix * mix);
    }
}
