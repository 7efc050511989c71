#include <catch2/catch_amalgamated.hpp>

#include "qfib/biseries.hpp"

using qfib::BiSeries;
using qfib::Cyclo;
using qfib::Trunc;
using qfib::UniSeries;

namespace {

BiSeries q1(int order, Trunc t) { return BiSeries::monomial(Cyclo::one(order), 1, 0, order, t); }
BiSeries q2(int order, Trunc t) { return BiSeries::monomial(Cyclo::one(order), 0, 1, order, t); }

}  // namespace

TEST_CASE("geometric series via invert_unit", "[biseries]") {
    Trunc t{6, 3};
    BiSeries a = BiSeries::one(1, t) - q1(1, t);
    BiSeries inv = a.invert_unit();
    for (int d = 0; d <= 6; ++d) CHECK(inv.coefficient(d, 0) == Cyclo::one(1));
    CHECK(inv.coefficient(2, 1).is_zero());
    CHECK((a * inv) == BiSeries::one(1, t));

    BiSeries b = BiSeries::one(1, t) - q1(1, t) - q2(1, t);
    BiSeries binv = b.invert_unit();
    // coefficient of q1^d1 q2^d2 in 1/(1-q1-q2) is binomial(d1+d2, d1)
    CHECK(binv.coefficient(3, 2).rational_part() == mpq_class(10));
    CHECK(binv.coefficient(4, 3).rational_part() == mpq_class(35));
}

TEST_CASE("truncation of products is the componentwise min", "[biseries]") {
    BiSeries a = BiSeries::one(1, Trunc{8, 4});
    BiSeries b = BiSeries::one(1, Trunc{5, 7});
    CHECK((a * b).trunc() == Trunc{5, 4});
    CHECK((a + b).trunc() == Trunc{5, 4});
}

TEST_CASE("nth_root with branch constants", "[biseries]") {
    Trunc t{6, 2};
    BiSeries u = BiSeries::one(4, t) + q1(4, t);
    CHECK(u.pow_int(3).nth_root(3, Cyclo::one(4)) == u);

    // square root of 1 with branch -1 picks the other sheet
    BiSeries m = (BiSeries::one(4, t) + q1(4, t)).pow_int(2);
    BiSeries r = m.nth_root(2, Cyclo::integer(-1, 4));
    CHECK(r == -(BiSeries::one(4, t) + q1(4, t)));

    CHECK_THROWS_AS(m.nth_root(2, Cyclo::integer(2, 4)), std::domain_error);
}

TEST_CASE("exp and log are mutually inverse", "[biseries]") {
    Trunc t{5, 3};
    BiSeries f = q1(1, t) * Cyclo::rational(2, 3) + q2(1, t) - q1(1, t) * q2(1, t) * Cyclo::integer(5);
    CHECK(f.exp_().log_() == f);
    BiSeries g = BiSeries::one(1, t) + q1(1, t) + q2(1, t) * Cyclo::rational(1, 2);
    CHECK(g.log_().exp_() == g);
    // exp is a homomorphism
    BiSeries h = q2(1, t) * Cyclo::integer(3) - q1(1, t);
    CHECK((f + h).exp_() == f.exp_() * h.exp_());
}

TEST_CASE("Euler derivatives: Leibniz rule and commutation", "[biseries]") {
    Trunc t{4, 4};
    BiSeries a = BiSeries::one(4, t) + q1(4, t) * Cyclo::root_of_unity(4, 1) + q2(4, t) * q2(4, t);
    BiSeries b = BiSeries::one(4, t) - q1(4, t) * q2(4, t) + q1(4, t) * Cyclo::rational(3, 5);
    for (int axis : {1, 2}) {
        CHECK((a * b).euler_derivative(axis) ==
              a.euler_derivative(axis) * b + a * b.euler_derivative(axis));
    }
    CHECK(a.euler_derivative(1).euler_derivative(2) == a.euler_derivative(2).euler_derivative(1));
    CHECK(q1(4, t).euler_derivative(2).is_zero());
}

TEST_CASE("substitution of a univariate into a bivariate", "[biseries]") {
    UniSeries a = UniSeries::one(1, 2);
    a.set(1, Cyclo::one(1));
    a.set(2, Cyclo::one(1));  // 1 + x + x^2
    Trunc t{3, 3};
    BiSeries inner = q1(1, t) + q2(1, t);
    BiSeries out = qfib::substitute(a, inner);
    BiSeries expect = BiSeries::one(1, t) + inner + inner * inner;
    CHECK(out == expect);
}

TEST_CASE("reversion round-trips", "[biseries][uniseries]") {
    UniSeries a = UniSeries::zero(1, 10);
    a.set(1, Cyclo::one(1));
    a.set(2, Cyclo::integer(1));
    a.set(3, Cyclo::integer(3));
    a.set(5, Cyclo::rational(-7, 2));
    UniSeries g = a.reversion();
    UniSeries idq = UniSeries::monomial(Cyclo::one(1), 1, 1, 10);
    CHECK(a.substitute(g) == idq);
    CHECK(g.substitute(a) == idq);

    // reversion of q/(1-q) is q/(1+q)
    UniSeries q = UniSeries::monomial(Cyclo::one(1), 1, 1, 9);
    UniSeries f = q * (UniSeries::one(1, 9) - q).invert_unit();
    UniSeries rev = f.reversion();
    UniSeries expect = q * (UniSeries::one(1, 9) + q).invert_unit();
    CHECK(rev == expect);
}

TEST_CASE("slices extract rows and columns", "[biseries]") {
    Trunc t{4, 3};
    BiSeries s = BiSeries::zero(4, t);
    s.set(2, 1, Cyclo::root_of_unity(4, 1));
    s.set(3, 1, Cyclo::integer(5, 4));
    s.set(1, 0, Cyclo::one(4));
    UniSeries row = s.slice_q2(1);
    CHECK(row.var() == 1);
    CHECK(row.coefficient(2) == Cyclo::root_of_unity(4, 1));
    CHECK(row.coefficient(3) == Cyclo::integer(5, 4));
    CHECK(row.coefficient(1).is_zero());
    UniSeries col = s.slice_q1(1);
    CHECK(col.var() == 2);
    CHECK(col.coefficient(0) == Cyclo::one(4));

    // round trip through lifted views
    BiSeries rebuilt = row.lifted(t) * q2(4, t) + col.lifted(t) * q1(4, t);
    CHECK(rebuilt == s);
}

TEST_CASE("univariate Newton helpers", "[uniseries]") {
    UniSeries q = UniSeries::monomial(Cyclo::one(1), 1, 1, 12);
    UniSeries a = UniSeries::one(1, 12) - q * Cyclo::integer(27);
    UniSeries L = a.invert_unit().nth_root(3, Cyclo::one(1));
    CHECK(L.coefficient(1).rational_part() == mpq_class(9));
    CHECK(L.coefficient(2).rational_part() == mpq_class(162));
    CHECK(L.pow_int(3) * a == UniSeries::one(1, 12));
    CHECK(L.euler_derivative() == L * (L.pow_int(3) - UniSeries::one(1, 12)) * Cyclo::rational(1, 3));
}

TEST_CASE("mixed zeta orders combine by embedding", "[biseries]") {
    Trunc t{2, 2};
    BiSeries a = BiSeries::constant(Cyclo::root_of_unity(4, 1), 4, t);
    BiSeries b = BiSeries::constant(Cyclo::one(1), 1, t);
    BiSeries sum = a + b;
    CHECK(sum.order() == 4);
    CHECK(sum.coefficient(0, 0) == Cyclo::root_of_unity(4, 1) + Cyclo::one(4));
}
