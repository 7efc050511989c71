#include <catch2/catch_amalgamated.hpp>

#include "qfib/asymptotics.hpp"
#include "qfib/birkhoff.hpp"

using namespace qfib;

TEST_CASE("triangularization succeeds and is unitriangular for every geometry") {
    for (Preset p : all_presets()) {
        const GeometrySpec g = make_geometry(p);
        const Trunc t{3, 2};
        INFO(g.name);
        // construction verifies the z^0 contract of every column internally
        const SOperatorSet sset = s_operators(g, t, g.n1 + g.n2 + 2);
        REQUIRE(sset.columns.size() == static_cast<size_t>(g.class_size()));
        for (const ZSeries& col : sset.columns) REQUIRE(col.window_hi() == 0);
        // the unit column times the scalar normalizer is the I-function itself
        const ZSeries ibar = small_i_function(g, t, g.n1 + g.n2 + 2, 0);
        REQUIRE(sset.columns[0] * sset.i_zero == ibar);
    }
}

TEST_CASE("closed-form factorization route agrees with the generic route") {
    const GeometrySpec g = make_geometry(Preset::LOCAL_P1P1);
    const Trunc t{6, 3};
    const SOperatorSet sset = s_operators(g, t, 6);
    const SeriesTable itab = local_i_table(g, t, 3);
    const SeriesTable jkm = jkm_series(g, itab);
    const SeriesTable es = e_series_local(g, jkm);

    const ZSeries& s1 = sset.column(0, 0);
    const ZSeries m1 = s1.apply_M(1);
    const ZSeries m2 = s1.apply_M(2);

    REQUIRE(m1 * es.at("E11") + m2 * es.at("E12") == sset.column(1, 0));
    REQUIRE(m1 * es.at("E21") + m2 * es.at("E22") == sset.column(0, 1));
    REQUIRE(sset.column(0, 1).apply_M(1) * es.at("E31") + s1 * es.at("E32") ==
            sset.column(1, 1));

    // determinant of the E-block is the inverse of the common denominator
    const BiSeries one = BiSeries::one(g.zeta_order, t);
    const BiSeries p11 = itab.at("I11").euler_derivative(1);
    const BiSeries b11 = itab.at("I11").euler_derivative(2);
    const BiSeries p12 = itab.at("I12").euler_derivative(1);
    const BiSeries b12 = itab.at("I12").euler_derivative(2);
    const BiSeries den = one + p11 - b11 * p12 + b12 + p11 * b12;
    REQUIRE((es.at("E11") * es.at("E22") - es.at("E12") * es.at("E21")) * den == one);
}

TEST_CASE("the blackboard combinations vanish under the surface specialization") {
    const GeometrySpec g = make_geometry(Preset::LOCAL_P1P1);
    const Trunc t{6, 3};
    const SeriesTable jkm = jkm_series(g, local_i_table(g, t, 3));
    for (const char* key : {"JJ12", "JJ13", "KK12", "KK13", "MM11", "MM14"}) {
        INFO(key);
        REQUIRE(jkm.at(key).is_zero());
    }
    // while the non-vanishing companions are genuinely nonzero
    for (const char* key : {"JJ11", "JJ14", "KK11", "KK14", "MM12", "MM13"}) {
        INFO(key);
        REQUIRE_FALSE(jkm.at(key).is_zero());
    }
    // every J/K series vanishes at q = 0
    for (const auto& [key, series] : jkm.entries) REQUIRE(series.coefficient(0, 0).is_zero());
    // exchanging the two base directions negates the nontrivial pair
    {
        const Trunc ts{3, 3};
        const SeriesTable sym = jkm_series(g, local_i_table(g, ts, 3));
        const BiSeries& m12 = sym.at("MM12");
        const BiSeries& m13 = sym.at("MM13");
        for (int d1 = 0; d1 <= 3; ++d1)
            for (int d2 = 0; d2 <= 3; ++d2)
                REQUIRE(m13.coefficient(d1, d2) == -m12.coefficient(d2, d1));
    }
}

TEST_CASE("two sample structure series match their rational closed forms") {
    const GeometrySpec g = make_geometry(Preset::LOCAL_P1P1);
    const int N = g.zeta_order;
    const Trunc t{5, 3};
    const SeriesTable jkm = jkm_series(g, local_i_table(g, t, 3));
    const auto [L, U] = solve_leading(g, 0, 0, t);
    const BiSeries one = BiSeries::one(N, t);
    const BiSeries P = jkm.at("I11").euler_derivative(1);
    const BiSeries B = jkm.at("I11").euler_derivative(2);
    const BiSeries LU = L * U, L2 = L * L, U2 = U * U;
    const Cyclo c2 = Cyclo::integer(2, N), c3 = Cyclo::integer(3, N);

    // divisor-direction derivative of MM12 against its closed form
    {
        const BiSeries lhs = jkm.at("MM12").euler_derivative(1) * ((L + U) * (L + U));
        const BiSeries coef = one + P * c3 + P * P * c2;
        const BiSeries cross = (P + P * P - P * B * c2 - B * (one * c2 + B)) * c2;
        const BiSeries rhs = -(coef * L2 + cross * LU + coef * U2);
        REQUIRE(lhs == rhs);
    }
    // bundle-direction derivative of KK11 against its closed form
    {
        const BiSeries pre = (one + P + B) * (one + P + B) * (L2 - U2 - one) * c2;
        const BiSeries lhs = jkm.at("KK11").euler_derivative(2) * pre;
        const BiSeries rhs = -((L + U) * (L + U) * (one + P - B * LU + U2 + P * U2));
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("printed table spans are complete and the known slice identities hold") {
    // surface fibration: residue-free extraction and E2' = (2/3) B1'
    {
        const GeometrySpec g = make_geometry(Preset::E_SURFACE_32);
        const Trunc t{8, 2};
        const SOperatorSet sset = s_operators(g, t, g.n1 + g.n2 + 2);
        const CoefficientTables tables = s_coefficient_tables(g, sset);
        for (const auto& line : tables.residue_report) INFO(line);
        REQUIRE(tables.residue_report.empty());
        const UniSeries b1 = table_slice(tables.named, "B1", 0);
        const UniSeries e2 = table_slice(tables.named, "E2", 0);
        REQUIRE(e2.euler_derivative() * Cyclo::integer(3, g.zeta_order) ==
                b1.euler_derivative() * Cyclo::integer(2, g.zeta_order));
        // every named series vanishes at q = 0
        for (const auto& [key, series] : tables.named.entries)
            REQUIRE(series.coefficient(0, 0).is_zero());
        // extraction commutes with the Euler derivative
        const CoefficientTables dtab =
            s_coefficient_tables(g, [&] {
                SOperatorSet d = sset;
                for (auto& col : d.columns) col = col.euler_derivative(1);
                return d;
            }());
        REQUIRE(dtab.named.at("A1") == tables.named.at("A1").euler_derivative(1));
        REQUIRE(dtab.named.at("G4") == tables.named.at("G4").euler_derivative(1));
    }
    // threefold and K3 fibrations: spans complete; K3's C1 is q2-free at slice 0
    {
        const GeometrySpec g = make_geometry(Preset::E_3FOLD_33);
        const SOperatorSet sset = s_operators(g, {4, 3}, g.n1 + g.n2 + 2);
        REQUIRE(s_coefficient_tables(g, sset).residue_report.empty());
    }
    {
        const GeometrySpec g = make_geometry(Preset::K3_FIB_42);
        const SOperatorSet sset = s_operators(g, {6, 2}, g.n1 + g.n2 + 2);
        const CoefficientTables tables = s_coefficient_tables(g, sset);
        REQUIRE(tables.residue_report.empty());
        REQUIRE(table_slice(tables.named, "C1", 0).is_zero());
    }
}
