#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfib/ifunction.hpp"

namespace qfib {

// ---------------------------------------------------------------------------
// Triangular factorization of the small I-function into S-operator columns.
//
// One column per cohomology basis monomial gamma = H1^a H2^b, each a ZSeries
// with z-window [-depth, 0] whose z^0 coefficient is exactly the constant
// class gamma (all corrections live at strictly negative z-powers).  Columns
// are built by total degree: the raw column M_axis * S(parent) decomposes as
// sum_delta C_{gamma,delta}(q) * S(delta) over basis monomials of degree at
// most deg(gamma); inverting the same-degree block (which is the identity at
// q = 0) and subtracting the lower-degree multiples yields S(gamma).

struct SOperatorSet {
    GeometrySpec g;
    Trunc t;
    int depth;                                // z-window of every column is [-depth, 0]
    std::vector<std::pair<int, int>> basis;   // (a,b) ordered by degree, then a descending
    std::vector<ZSeries> columns;             // aligned with basis
    BiSeries i_zero;                          // scalar z^0 series of the small I-function
    std::vector<std::vector<BiSeries>> connection;  // connection[k][m]: z^0 expansion of the
                                                    // raw column for basis[k] over basis[m]
    std::vector<int> parent_axis;   // Euler-divisor axis used to build basis[k] (0 for unit)
    std::vector<int> parent_index;  // index of the parent column (-1 for unit)

    int find(int a, int b) const {
        for (size_t k = 0; k < basis.size(); ++k)
            if (basis[k].first == a && basis[k].second == b) return static_cast<int>(k);
        throw std::out_of_range("SOperatorSet: no basis monomial H1^" + std::to_string(a) +
                                " H2^" + std::to_string(b));
    }
    const ZSeries& column(int a, int b) const { return columns[static_cast<size_t>(find(a, b))]; }
};

namespace detail {

inline std::vector<std::pair<int, int>> degree_ordered_basis(const GeometrySpec& g) {
    std::vector<std::pair<int, int>> basis;
    for (int d = 0; d <= g.n1 + g.n2; ++d)
        for (int a = std::min(d, g.n1); a >= 0; --a) {
            const int b = d - a;
            if (b >= 0 && b <= g.n2) basis.emplace_back(a, b);
        }
    return basis;
}

}  // namespace detail

inline SOperatorSet s_operators(const GeometrySpec& g, Trunc t, int z_depth) {
    if (z_depth < g.n1 + g.n2 + 1)
        throw std::invalid_argument(
            "s_operators: z_depth must exceed the top cohomological degree");
    const int N = g.zeta_order;
    SOperatorSet out{g, t, z_depth, detail::degree_ordered_basis(g), {}, BiSeries::one(N, t),
                     {},    {},      {}};
    const size_t nb = out.basis.size();

    const ZSeries ibar = small_i_function(g, t, z_depth, 0);
    out.i_zero = ibar.coeff(0, 0);
    for (int fp = 1; fp < g.class_size(); ++fp)
        if (ibar.coeff(fp, 0) != out.i_zero)
            throw std::logic_error("s_operators: z^0 part of the I-function is not scalar");
    const BiSeries i_zero_inv = out.i_zero.invert_unit();

    out.columns.reserve(nb);
    out.columns.push_back(ibar * i_zero_inv);
    out.connection.assign(nb, {});
    out.parent_axis.assign(nb, 0);
    out.parent_index.assign(nb, -1);

    auto degree = [&](size_t k) { return out.basis[k].first + out.basis[k].second; };

    size_t level_begin = 1;  // basis[0] = (0,0)
    while (level_begin < nb) {
        const int d = degree(level_begin);
        size_t level_end = level_begin;
        while (level_end < nb && degree(level_end) == d) ++level_end;
        const size_t nlev = level_end - level_begin;

        // raw columns and their z^0 expansions over the basis
        std::vector<ZSeries> adj;
        adj.reserve(nlev);
        for (size_t k = level_begin; k < level_end; ++k) {
            const auto [a, b] = out.basis[k];
            const int axis = a > 0 ? 1 : 2;
            const int pidx = out.find(a > 0 ? a - 1 : a, a > 0 ? b : b - 1);
            out.parent_axis[k] = axis;
            out.parent_index[k] = pidx;
            ZSeries raw = out.columns[static_cast<size_t>(pidx)].apply_M(axis);

            std::vector<BiSeries> conn(nb, BiSeries::zero(N, t));
            for (int d1 = 0; d1 <= t.n1; ++d1)
                for (int d2 = 0; d2 <= t.n2; ++d2) {
                    const CohomClass c = raw.class_coefficient(0, d1, d2);
                    for (size_t m = 0; m < nb; ++m) {
                        const Cyclo v = c.at(out.basis[m].first, out.basis[m].second);
                        if (!v.is_zero()) conn[m].set(d1, d2, v);
                    }
                }
            for (size_t m = 0; m < nb; ++m) {
                const Cyclo c00 = conn[m].coefficient(0, 0);
                const bool diag = m == k;
                if ((diag && c00 != Cyclo::one(N)) || (!diag && !c00.is_zero()))
                    throw std::logic_error(
                        "s_operators: z^0 expansion is not unitriangular at q = 0");
                if (degree(m) > d && !conn[m].is_zero())
                    throw std::logic_error(
                        "s_operators: uncancellable z^0 failure of degree " +
                        std::to_string(degree(m)) + " while building H1^" +
                        std::to_string(out.basis[k].first) + " H2^" +
                        std::to_string(out.basis[k].second));
            }
            // subtract the lower-degree corrections now
            for (size_t m = 0; m < level_begin; ++m)
                if (!conn[m].is_zero()) raw = raw - out.columns[m] * conn[m];
            adj.push_back(std::move(raw));
            out.connection[k] = std::move(conn);
        }

        // solve the same-degree block (identity + O(q)) by elimination
        std::vector<std::vector<BiSeries>> A(nlev, std::vector<BiSeries>(nlev, BiSeries::zero(N, t)));
        for (size_t r = 0; r < nlev; ++r)
            for (size_t c = 0; c < nlev; ++c) A[r][c] = out.connection[level_begin + r][level_begin + c];
        for (size_t p = 0; p < nlev; ++p) {
            const BiSeries inv = A[p][p].invert_unit();
            for (size_t c = 0; c < nlev; ++c) A[p][c] = A[p][c] * inv;
            adj[p] = adj[p] * inv;
            for (size_t r = 0; r < nlev; ++r) {
                if (r == p || A[r][p].is_zero()) continue;
                const BiSeries f = A[r][p];
                for (size_t c = 0; c < nlev; ++c) A[r][c] = A[r][c] - f * A[p][c];
                adj[r] = adj[r] - adj[p] * f;
            }
        }

        for (size_t k = level_begin; k < level_end; ++k) {
            ZSeries col = std::move(adj[k - level_begin]);
            // verify the unitriangularity contract before accepting the column
            for (int d1 = 0; d1 <= t.n1; ++d1)
                for (int d2 = 0; d2 <= t.n2; ++d2) {
                    CohomClass c = col.class_coefficient(0, d1, d2);
                    if (d1 == 0 && d2 == 0)
                        c -= CohomClass::monomial(g, out.basis[k].first, out.basis[k].second);
                    if (!c.is_zero())
                        throw std::logic_error("s_operators: column H1^" +
                                               std::to_string(out.basis[k].first) + " H2^" +
                                               std::to_string(out.basis[k].second) +
                                               " violates the z^0 contract");
                }
            out.columns.push_back(std::move(col));
        }
        level_begin = level_end;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named coefficient series of the negatively twisted surface geometry: the
// J/K tables (ratios of I-table entries and their Euler derivatives), the
// blackboard JJ/KK combinations, and the MM series.  Returns a table holding
// the inputs I11..I39 together with every derived series.

inline SeriesTable jkm_series(const GeometrySpec& g, const SeriesTable& itab) {
    if (g.n2 != 1)
        throw std::invalid_argument("jkm_series: the J/K tables need a two-point second axis");
    const int N = g.zeta_order;
    SeriesTable out = itab;

    const Trunc t = itab.at("I11").trunc();
    const BiSeries one = BiSeries::one(N, t);

    auto I = [&](const char* k) { return itab.at(k); };
    auto d1 = [&](const char* k) { return itab.at(k).euler_derivative(1); };
    auto d2 = [&](const char* k) { return itab.at(k).euler_derivative(2); };

    const BiSeries den =
        one + d1("I11") - d2("I11") * d1("I12") + d2("I12") + d1("I11") * d2("I12");
    const BiSeries dinv = den.invert_unit();

    // J-table: mixes of first- and second-axis Euler derivatives of the
    // z^{-1}/z^{-2}/z^{-3} I-coefficients over the common denominator.
    out.entries.insert_or_assign("J11", (I("I11") + I("I11") * d2("I12") + d1("I21") + d2("I12") * d1("I21") -
         d1("I12") * d2("I21")) *
        dinv);
    out.entries.insert_or_assign("J12", (-(I("I11") * d1("I12")) + (one + d2("I12")) * (I("I12") + d1("I22")) -
         d1("I12") * d2("I22")) *
        dinv);
    out.entries.insert_or_assign("J13", (-(I("I12") * d1("I12")) + d1("I23") + d2("I12") * d1("I23") - d1("I12") * d2("I23")) *
        dinv);
    out.entries.insert_or_assign("J14", (d1("I24") + d2("I12") * d1("I24") - d1("I12") * d2("I24")) * dinv);
    out.entries.insert_or_assign("J15", (d1("I25") + d2("I12") * d1("I25") - d1("I12") * d2("I25")) * dinv);
    out.entries.insert_or_assign("J21", (I("I21") + d2("I12") * I("I21") + d1("I31") + d2("I12") * d1("I31") -
         d1("I12") * d2("I31")) *
        dinv);
    out.entries.insert_or_assign("J22", ((one + d2("I12")) * (I("I22") + d1("I32")) - d1("I12") * (I("I21") + d2("I32"))) * dinv);
    out.entries.insert_or_assign("J23", ((one + d2("I12")) * (I("I23") + d1("I33")) - d1("I12") * (I("I22") + d2("I33"))) * dinv);
    out.entries.insert_or_assign("J24", ((one + d2("I12")) * d1("I34") - d1("I12") * (I("I23") + d2("I34"))) * dinv);
    out.entries.insert_or_assign("J25", (I("I24") + d2("I12") * I("I24") + d1("I35") + d2("I12") * d1("I35") -
         d1("I12") * d2("I35")) *
        dinv);
    out.entries.insert_or_assign("J26", ((one + d2("I12")) * (I("I25") + d1("I36")) - d1("I12") * (I("I24") + d2("I36"))) * dinv);
    out.entries.insert_or_assign("J27", ((one + d2("I12")) * d1("I37") - d1("I12") * (I("I25") + d2("I37"))) * dinv);
    out.entries.insert_or_assign("J28", (d1("I38") + d2("I12") * d1("I38") - d1("I12") * d2("I38")) * dinv);
    out.entries.insert_or_assign("J29", (d1("I39") + d2("I12") * d1("I39") - d1("I12") * d2("I39")) * dinv);

    // K-table: same shape with the two axes exchanged in the derivative mixes.
    out.entries.insert_or_assign("K11", (-(I("I11") * d2("I11")) - d2("I11") * d1("I21") + d2("I21") + d1("I11") * d2("I21")) *
        dinv);
    out.entries.insert_or_assign("K12", (I("I11") * (one + d1("I11")) - d2("I11") * (I("I12") + d1("I22")) +
         (one + d1("I11")) * d2("I22")) *
        dinv);
    out.entries.insert_or_assign("K13", (I("I12") + d1("I11") * I("I12") - d2("I11") * d1("I23") + d2("I23") +
         d1("I11") * d2("I23")) *
        dinv);
    out.entries.insert_or_assign("K14", (-(d2("I11") * d1("I24")) + d2("I24") + d1("I11") * d2("I24")) * dinv);
    out.entries.insert_or_assign("K15", (-(d2("I11") * d1("I25")) + d2("I25") + d1("I11") * d2("I25")) * dinv);
    out.entries.insert_or_assign("K21", (-(d2("I11") * (I("I21") + d1("I31"))) + (one + d1("I11")) * d2("I31")) * dinv);
    out.entries.insert_or_assign("K22", ((one + d1("I11")) * I("I21") - d2("I11") * (I("I22") + d1("I32")) +
         (one + d1("I11")) * d2("I32")) *
        dinv);
    out.entries.insert_or_assign("K23", ((one + d1("I11")) * I("I22") - d2("I11") * (I("I23") + d1("I33")) +
         (one + d1("I11")) * d2("I33")) *
        dinv);
    out.entries.insert_or_assign("K24", (I("I23") + d1("I11") * I("I23") - d2("I11") * d1("I34") + d2("I34") +
         d1("I11") * d2("I34")) *
        dinv);
    out.entries.insert_or_assign("K25", (-(d2("I11") * (I("I24") + d1("I35"))) + (one + d1("I11")) * d2("I35")) * dinv);
    out.entries.insert_or_assign("K26", ((one + d1("I11")) * I("I24") - d2("I11") * (I("I25") + d1("I36")) +
         (one + d1("I11")) * d2("I36")) *
        dinv);
    out.entries.insert_or_assign("K27", (I("I25") + d1("I11") * I("I25") - d2("I11") * d1("I37") + d2("I37") +
         d1("I11") * d2("I37")) *
        dinv);
    out.entries.insert_or_assign("K28", (-(d2("I11") * d1("I38")) + d2("I38") + d1("I11") * d2("I38")) * dinv);
    out.entries.insert_or_assign("K29", (-(d2("I11") * d1("I39")) + d2("I39") + d1("I11") * d2("I39")) * dinv);

    // symmetric functions of the second-axis weights
    const Cyclo s1 = g.w2[0] + g.w2[1];
    const Cyclo s2 = g.w2[0] * g.w2[1];

    auto T = [&](const char* k) -> const BiSeries& { return out.entries.at(k); };
    out.entries.insert_or_assign("JJ11", T("J12"));
    out.entries.insert_or_assign("JJ12", T("J14"));
    out.entries.insert_or_assign("JJ13", T("J15") + T("J13") * s1);
    out.entries.insert_or_assign("JJ14", T("J11") - T("J13") * s2);
    out.entries.insert_or_assign("KK11", T("K12"));
    out.entries.insert_or_assign("KK12", T("K14"));
    out.entries.insert_or_assign("KK13", T("K15") + T("K13") * s1);
    out.entries.insert_or_assign("KK14", T("K11") - T("K13") * s2);

    const BiSeries minv = (one + T("JJ11").euler_derivative(2)).invert_unit();
    auto D2 = [&](const char* k) { return out.entries.at(k).euler_derivative(2); };

    out.entries.insert_or_assign("MM11", (D2("J26") + T("JJ12") - T("JJ11") * D2("JJ12") - D2("JJ13") * T("KK11") +
         (D2("J23") + T("JJ11")) * s1) *
        minv);
    out.entries.insert_or_assign("MM12", (D2("J21") + D2("J28") - T("JJ12") * D2("JJ12") - I("I11") * D2("JJ14") -
         D2("JJ13") * T("KK12") - (D2("J23") + T("JJ11")) * s2) *
        minv);
    out.entries.insert_or_assign("MM13", (D2("J22") + D2("J29") - D2("JJ12") * T("JJ13") + T("JJ14") - I("I12") * D2("JJ14") -
         D2("JJ13") * T("KK13") + (D2("J27") + T("JJ13")) * s1 +
         D2("J24") * (s1 * s1 - s2)) *
        minv);
    out.entries.insert_or_assign("MM14", (D2("J25") - D2("JJ12") * T("JJ14") - D2("JJ13") * T("KK14") -
         (D2("J27") + T("JJ13")) * s2 - D2("J24") * s1 * s2) *
        minv);
    return out;
}

// The six closed-form factorization coefficients of the surface geometry:
// E11..E22 invert the degree-one z^0 block, E31/E32 normalize the top column.
inline SeriesTable e_series_local(const GeometrySpec& g, const SeriesTable& jkm) {
    const int N = g.zeta_order;
    const Trunc t = jkm.at("I11").trunc();
    const BiSeries one = BiSeries::one(N, t);

    const BiSeries p11 = jkm.at("I11").euler_derivative(1);
    const BiSeries b11 = jkm.at("I11").euler_derivative(2);
    const BiSeries p12 = jkm.at("I12").euler_derivative(1);
    const BiSeries b12 = jkm.at("I12").euler_derivative(2);
    const BiSeries dinv = (one + p11 - b11 * p12 + b12 + p11 * b12).invert_unit();

    SeriesTable out;
    out.entries.insert_or_assign("E11", (one + b12) * dinv);
    out.entries.insert_or_assign("E12", -p12 * dinv);
    out.entries.insert_or_assign("E21", -b11 * dinv);
    out.entries.insert_or_assign("E22", (one + p11) * dinv);
    const BiSeries kinv = (one + jkm.at("KK11").euler_derivative(1)).invert_unit();
    out.entries.insert_or_assign("E31", kinv);
    out.entries.insert_or_assign("E32", -(jkm.at("KK14").euler_derivative(1)) * kinv);
    return out;
}

// ---------------------------------------------------------------------------
// Named extraction of the z^{-1} coefficients of the S-operator columns in
// the per-geometry printed spans.  Components outside the printed span are
// collected in residue_report instead of being silently dropped.  Each span
// is the set of monomials of unreduced degree deg(column)+1 taken modulo the
// scalar reductions H_i^{n_i+1} = const, listed in descending H1-power.

struct CoefficientTables {
    SeriesTable named;
    std::vector<std::string> residue_report;
};

namespace detail {

struct TableSlot {
    int col_a, col_b;    // which column S(H1^a H2^b)
    const char* name;    // printed series name
    int mono_a, mono_b;  // basis monomial carrying it (after reduction)
};

inline std::vector<TableSlot> table_layout(const GeometrySpec& g) {
    if (g.name == "E_SURFACE_32")
        return {
            {0, 0, "A1", 1, 0}, {0, 0, "A2", 0, 1},
            {1, 0, "B1", 2, 0}, {1, 0, "B2", 1, 1}, {1, 0, "B3", 0, 0},
            {0, 1, "C1", 2, 0}, {0, 1, "C2", 1, 1}, {0, 1, "C3", 0, 0},
            {2, 0, "E1", 0, 0}, {2, 0, "E2", 2, 1}, {2, 0, "E3", 1, 0}, {2, 0, "E4", 0, 1},
            {1, 1, "F1", 0, 0}, {1, 1, "F2", 2, 1}, {1, 1, "F3", 1, 0}, {1, 1, "F4", 0, 1},
            {2, 1, "G1", 1, 0}, {2, 1, "G2", 0, 1}, {2, 1, "G3", 2, 0}, {2, 1, "G4", 1, 1},
            {2, 1, "G5", 0, 0},
        };
    if (g.name == "E_3FOLD_33")
        return {
            {0, 0, "A1", 1, 0}, {0, 0, "A2", 0, 1},
            {1, 0, "B1", 2, 0}, {1, 0, "B2", 1, 1}, {1, 0, "B3", 0, 2},
            {0, 1, "C1", 2, 0}, {0, 1, "C2", 1, 1}, {0, 1, "C3", 0, 2},
            {2, 0, "E1", 0, 0}, {2, 0, "E2", 2, 1}, {2, 0, "E3", 1, 2},
            {1, 1, "F1", 0, 0}, {1, 1, "F2", 2, 1}, {1, 1, "F3", 1, 2},
            {0, 2, "G1", 0, 0}, {0, 2, "G2", 2, 1}, {0, 2, "G3", 1, 2},
            {2, 1, "H1", 1, 0}, {2, 1, "H2", 0, 1}, {2, 1, "H3", 2, 2},
            {1, 2, "I1", 1, 0}, {1, 2, "I2", 0, 1}, {1, 2, "I3", 2, 2},
            {2, 2, "J1", 2, 0}, {2, 2, "J2", 1, 1}, {2, 2, "J3", 0, 2},
        };
    if (g.name == "K3_FIB_42")
        return {
            {0, 0, "A1", 1, 0}, {0, 0, "A2", 0, 1},
            {1, 0, "B1", 2, 0}, {1, 0, "B2", 1, 1}, {1, 0, "B3", 0, 0},
            {0, 1, "C1", 2, 0}, {0, 1, "C2", 1, 1}, {0, 1, "C3", 0, 0},
            {2, 0, "E1", 3, 0}, {2, 0, "E2", 2, 1}, {2, 0, "E3", 1, 0}, {2, 0, "E4", 0, 1},
            {1, 1, "F1", 3, 0}, {1, 1, "F2", 2, 1}, {1, 1, "F3", 1, 0}, {1, 1, "F4", 0, 1},
            {3, 0, "G1", 0, 0}, {3, 0, "G2", 3, 1}, {3, 0, "G3", 2, 0}, {3, 0, "G4", 1, 1},
            {2, 1, "H1", 0, 0}, {2, 1, "H2", 3, 1}, {2, 1, "H3", 2, 0}, {2, 1, "H4", 1, 1},
            {3, 1, "I1", 1, 0}, {3, 1, "I2", 0, 1}, {3, 1, "I3", 3, 0}, {3, 1, "I4", 2, 1},
        };
    throw std::invalid_argument("table_layout: no printed coefficient table for " + g.name);
}

}  // namespace detail

inline CoefficientTables s_coefficient_tables(const GeometrySpec& g, const SOperatorSet& sset) {
    const auto layout = detail::table_layout(g);
    CoefficientTables out;
    const Trunc t = sset.t;

    for (size_t k = 0; k < sset.basis.size(); ++k) {
        const auto [ca, cb] = sset.basis[k];
        // decompose the z^{-1} coefficient of this column over the basis
        std::vector<BiSeries> comp(sset.basis.size(), BiSeries::zero(g.zeta_order, t));
        for (int d1 = 0; d1 <= t.n1; ++d1)
            for (int d2 = 0; d2 <= t.n2; ++d2) {
                const CohomClass c = sset.columns[k].class_coefficient(-1, d1, d2);
                for (size_t m = 0; m < sset.basis.size(); ++m) {
                    const Cyclo v = c.at(sset.basis[m].first, sset.basis[m].second);
                    if (!v.is_zero()) comp[m].set(d1, d2, v);
                }
            }
        for (size_t m = 0; m < sset.basis.size(); ++m) {
            const auto [ma, mb] = sset.basis[m];
            const detail::TableSlot* slot = nullptr;
            for (const auto& s : layout)
                if (s.col_a == ca && s.col_b == cb && s.mono_a == ma && s.mono_b == mb) slot = &s;
            if (slot) {
                out.named.entries.insert_or_assign(slot->name, comp[m]);
            } else if (!comp[m].is_zero()) {
                out.residue_report.push_back("column H1^" + std::to_string(ca) + " H2^" +
                                             std::to_string(cb) + " has a z^-1 component on H1^" +
                                             std::to_string(ma) + " H2^" + std::to_string(mb) +
                                             " outside the printed span");
            }
        }
    }
    return out;
}

// q2-coefficient slice of a named table entry, as a series in q1.
inline UniSeries table_slice(const SeriesTable& table, const std::string& name, int k) {
    return table.at(name).slice_q2(k);
}

}  // namespace qfib
