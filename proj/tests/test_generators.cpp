#include <catch2/catch_amalgamated.hpp>

#include <qfib/asymptotics.hpp>
#include <qfib/generators.hpp>

using namespace qfib;

namespace {

Cyclo q(long num, long den = 1) { return Cyclo::rational(num, den, 1); }

}  // namespace

TEST_CASE("elliptic generator series match their frozen leading coefficients") {
    const GeneratorSet gen = elliptic_generators(10);
    const UniSeries& L = gen.at("L");
    CHECK(L.coefficient(0) == q(1));
    CHECK(L.coefficient(1) == q(9));
    CHECK(L.coefficient(2) == q(162));
    const UniSeries& i1 = gen.at("I1");
    CHECK(i1.coefficient(0) == q(0));
    CHECK(i1.coefficient(1) == q(6));
    CHECK(i1.coefficient(2) == q(45));
    CHECK(i1.coefficient(3) == q(560));
    // derived pair
    CHECK(gen.at("B1p").coefficient(2) == q(90));
    CHECK(gen.at("X").coefficient(1) == q(6));
    CHECK(gen.at("X").coefficient(0) == q(0));
}

TEST_CASE("K3 generator series match their frozen leading coefficients") {
    const GeneratorSet gen = k3_generators(8);
    const UniSeries& L = gen.at("L");
    CHECK(L.coefficient(0) == q(1));
    CHECK(L.coefficient(1) == q(64));
    CHECK(L.coefficient(2) == q(10240));
    const UniSeries& i1 = gen.at("I1");
    CHECK(i1.coefficient(0) == q(0));
    CHECK(i1.coefficient(1) == q(104));
    CHECK(gen.at("A1p").coefficient(1) == q(104));
    CHECK(gen.at("X").coefficient(0) == q(0));
}

TEST_CASE("local generator series is the closed-form inverse square root") {
    const GeneratorSet gen = local_generators(6);
    const UniSeries& X = gen.at("X");
    CHECK(X.coefficient(0) == q(1));
    CHECK(X.coefficient(1) == q(4));
    CHECK(X.coefficient(2) == q(24));
    CHECK(X.coefficient(3) == q(160));
    // (1 - 8q) X^2 == 1 exactly
    UniSeries base = UniSeries::one(1, 6);
    base.add_to(1, q(-8));
    CHECK(base * X * X == UniSeries::one(1, 6));
}

TEST_CASE("Bernoulli numbers, Eisenstein series, and the discriminant") {
    const auto b = bernoulli_numbers(12);
    CHECK(b[2] == mpq_class(1, 6));
    CHECK(b[4] == mpq_class(-1, 30));
    CHECK(b[6] == mpq_class(1, 42));
    CHECK(b[12] == mpq_class(-691, 2730));

    const ModularSet mod = eisenstein_and_delta(8);
    CHECK(mod.e2.coefficient(0) == q(1));
    CHECK(mod.e2.coefficient(1) == q(-24));
    CHECK(mod.e2.coefficient(2) == q(-72));
    CHECK(mod.e2.coefficient(3) == q(-96));
    CHECK(mod.e2.coefficient(4) == q(-168));
    CHECK(mod.e4.coefficient(1) == q(240));
    CHECK(mod.e4.coefficient(2) == q(2160));
    CHECK(mod.e6.coefficient(1) == q(-504));
    CHECK(mod.e6.coefficient(2) == q(-16632));
    CHECK(mod.delta.coefficient(0) == q(0));
    CHECK(mod.delta.coefficient(1) == q(1));
    CHECK(mod.delta.coefficient(2) == q(-24));
    CHECK(mod.delta.coefficient(3) == q(252));
    CHECK(mod.delta.coefficient(4) == q(-1472));

    // classical cusp-form identity: 1728 Δ = E4^3 - E6^2
    const UniSeries lhs = mod.delta * Cyclo::integer(1728, 1);
    const UniSeries rhs = mod.e4.pow_int(3) - mod.e6.pow_int(2);
    REQUIRE(lhs == rhs);
}

TEST_CASE("mirror transport composes with the inverse mirror map") {
    const int T = 10;
    const GeneratorSet gen = elliptic_generators(T);
    const UniSeries mirror = mirror_map(gen);
    REQUIRE(mirror.coefficient(0) == q(0));
    REQUIRE(mirror.coefficient(1) == q(1));
    // frozen integral expansion of the elliptic mirror map
    CHECK(mirror.coefficient(2) == q(15));
    CHECK(mirror.coefficient(3) == q(279));
    CHECK(mirror.coefficient(4) == q(5729));
    CHECK(mirror.coefficient(5) == q(124554));
    // transport of a constant is the constant
    const UniSeries c = UniSeries::constant(q(7, 3), 1, T);
    REQUIRE(mirror_transport(c, mirror) == c);
    // transport of the mirror map itself is the identity series Q
    const UniSeries id = UniSeries::monomial(q(1), 1, 1, T);
    REQUIRE(mirror_transport(mirror, mirror) == id);
    // transport is inverted by substituting the mirror map back
    const UniSeries x_in_Q = mirror_transport(gen.at("X"), mirror);
    REQUIRE(x_in_Q.substitute(mirror) == gen.at("X"));
}

TEST_CASE("quasimodularity identities hold through the default order") {
    const SuiteReport report = verify_asyz(8);
    CAPTURE(report.to_json().dump());
    REQUIRE(report.identities.size() == 3);
    REQUIRE(report.pass());
}

TEST_CASE("differential closure of all three univariate rings") {
    const SuiteReport report = verify_d_closure(12);
    CAPTURE(report.to_json().dump());
    REQUIRE(report.identities.size() == 5);
    REQUIRE(report.pass());
}

TEST_CASE("derivatives of generator products re-fit inside the ring") {
    const int T = 14;
    // elliptic: D(L^3 X) against the basis {L^{3a} X^b : a,b = 0..2}
    {
        const GeneratorSet gen = elliptic_generators(T);
        const UniSeries &L = gen.at("L"), &X = gen.at("X");
        const UniSeries target = (L.pow_int(3) * X).euler_derivative();
        std::vector<UniSeries> basis;
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) basis.push_back(L.pow_int(3 * a) * X.pow_int(b));
        const FitResult fit = ring_fit(target, basis, 9);
        REQUIRE(fit.status != FitStatus::kNoSolution);
        REQUIRE(fit_validates(fit.coeffs, target, basis));
    }
    // elliptic: D(B1p X) against {L^{3a} B1p^b X^c : a,b = 0..1, c = 0..2}
    {
        const GeneratorSet gen = elliptic_generators(T);
        const UniSeries &L = gen.at("L"), &B = gen.at("B1p"), &X = gen.at("X");
        const UniSeries target = (B * X).euler_derivative();
        std::vector<UniSeries> basis;
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                for (int c = 0; c <= 2; ++c)
                    basis.push_back(L.pow_int(3 * a) * B.pow_int(b) * X.pow_int(c));
        const FitResult fit = ring_fit(target, basis, 13);
        REQUIRE(fit.status != FitStatus::kNoSolution);
        REQUIRE(fit_validates(fit.coeffs, target, basis));
    }
    // K3: D(L^4 X) against {L^{4a} X^b : a = 0..3, b = 0..2}
    {
        const GeneratorSet gen = k3_generators(T + 4);
        const UniSeries &L = gen.at("L"), &X = gen.at("X");
        const UniSeries target = (L.pow_int(4) * X).euler_derivative();
        std::vector<UniSeries> basis;
        for (int a = 0; a <= 3; ++a)
            for (int b = 0; b <= 2; ++b) basis.push_back(L.pow_int(4 * a) * X.pow_int(b));
        const FitResult fit = ring_fit(target, basis, 12);
        REQUIRE(fit.status != FitStatus::kNoSolution);
        REQUIRE(fit_validates(fit.coeffs, target, basis));
    }
}

TEST_CASE("printed genus-one values have zero constant term and full depth") {
    for (const Preset p : {Preset::E_SURFACE_32, Preset::E_3FOLD_33, Preset::K3_FIB_42}) {
        const GeometrySpec g = make_geometry(p);
        const UniSeries rhs = genus1_rhs(g, 10);
        INFO(g.name);
        CHECK(rhs.coefficient(0).is_zero());
        CHECK_FALSE(rhs.is_zero());
        CHECK(rhs.trunc() == 10);
    }
    // the surface value is exactly -X
    const GeometrySpec gs = make_geometry(Preset::E_SURFACE_32);
    const UniSeries rhs = genus1_rhs(gs, 10);
    CHECK(rhs.coefficient(1) == q(-6));
    CHECK(rhs == -elliptic_generators(10).at("X"));
    // the local geometry has no printed genus-one value
    REQUIRE_THROWS_AS(genus1_rhs(make_geometry(Preset::LOCAL_P1P1), 5), std::invalid_argument);
}

TEST_CASE("K3 extra generators import from the coefficient tables") {
    // a miniature stand-in table shaped like the K3 named tables: only the
    // wiring (slice at q2^0, then Euler derivative) is under test here
    SeriesTable tables;
    const Trunc t{4, 2};
    BiSeries e1 = BiSeries::monomial(Cyclo::integer(5, 1), 1, 0, 1, t);
    e1.add_to(2, 1, Cyclo::integer(9, 1));  // lives on q2^1: must not leak into the slice
    BiSeries b2 = BiSeries::monomial(Cyclo::integer(-3, 1), 2, 0, 1, t);
    tables.entries.insert_or_assign("E1", e1);
    tables.entries.insert_or_assign("B2", b2);
    const GeneratorSet extra = k3_extra_generators(tables);
    CHECK(extra.at("E1p").coefficient(1) == q(5));
    CHECK(extra.at("E1p").coefficient(2) == q(0));
    CHECK(extra.at("B2p").coefficient(2) == q(-6));
}
