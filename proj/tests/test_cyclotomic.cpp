#include <catch2/catch_amalgamated.hpp>

#include "qfib/cyclotomic.hpp"

using qfib::Cyclo;

namespace {

// Deterministic small-rational generator for property checks.
struct Lcg {
    unsigned long state;
    explicit Lcg(unsigned long seed) : state(seed) {}
    unsigned long next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    mpq_class rat() {
        long num = static_cast<long>(next() % 19) - 9;
        long den = static_cast<long>(next() % 9) + 1;
        mpq_class r(num, den);
        r.canonicalize();
        return r;
    }
    Cyclo element(int order) {
        Cyclo x = Cyclo::zero(order);
        for (int k = 0; k < qfib::euler_phi(order); ++k)
            x += Cyclo(rat(), order) * Cyclo::root_of_unity(order, k);
        return x;
    }
};

}  // namespace

TEST_CASE("euler phi on supported orders", "[cyclotomic]") {
    CHECK(qfib::euler_phi(1) == 1);
    CHECK(qfib::euler_phi(2) == 1);
    CHECK(qfib::euler_phi(3) == 2);
    CHECK(qfib::euler_phi(4) == 2);
    CHECK(qfib::euler_phi(12) == 4);
}

TEST_CASE("cyclotomic polynomials are the classical ones", "[cyclotomic]") {
    using V = std::vector<mpz_class>;
    CHECK(qfib::cyclotomic_polynomial(1) == V{-1, 1});
    CHECK(qfib::cyclotomic_polynomial(2) == V{1, 1});
    CHECK(qfib::cyclotomic_polynomial(3) == V{1, 1, 1});
    CHECK(qfib::cyclotomic_polynomial(4) == V{1, 0, 1});
    CHECK(qfib::cyclotomic_polynomial(12) == V{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity have exact order", "[cyclotomic]") {
    for (int n : {1, 2, 3, 4, 12}) {
        Cyclo z = Cyclo::root_of_unity(n, 1);
        CHECK(z.pow(n) == Cyclo::one(n));
        for (int k = 1; k < n; ++k) CHECK(z.pow(k) != Cyclo::one(n));
    }
}

TEST_CASE("primitive root kills its cyclotomic polynomial", "[cyclotomic]") {
    for (int n : {2, 3, 4, 12}) {
        Cyclo z = Cyclo::root_of_unity(n, 1);
        Cyclo acc = Cyclo::zero(n);
        const auto& phi = qfib::cyclotomic_polynomial(n);
        for (size_t k = 0; k < phi.size(); ++k) acc += Cyclo(mpq_class(phi[k]), n) * z.pow(static_cast<long>(k));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("basic identities in Q(zeta_4) and Q(zeta_3)", "[cyclotomic]") {
    Cyclo i = Cyclo::root_of_unity(4, 1);
    CHECK(i * i == Cyclo::integer(-1, 4));
    Cyclo w = Cyclo::root_of_unity(3, 1);
    CHECK(w * w + w + Cyclo::one(3) == Cyclo::zero(3));
}

TEST_CASE("field axioms on pseudo-random triples", "[cyclotomic][property]") {
    for (int order : {1, 2, 3, 4, 12}) {
        Lcg rng(42 + static_cast<unsigned long>(order));
        for (int trial = 0; trial < 8; ++trial) {
            Cyclo a = rng.element(order), b = rng.element(order), c = rng.element(order);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Cyclo::zero(order));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclo::one(order));
                CHECK((a / a) == Cyclo::one(order));
            }
        }
    }
}

TEST_CASE("embeddings land correctly in Q(zeta_12)", "[cyclotomic]") {
    // zeta_4 -> zeta_12^3, zeta_3 -> zeta_12^4
    Cyclo i4 = Cyclo::root_of_unity(4, 1);
    CHECK(i4.embedded(12) == Cyclo::root_of_unity(12, 3));
    Cyclo w3 = Cyclo::root_of_unity(3, 1);
    CHECK(w3.embedded(12) == Cyclo::root_of_unity(12, 4));

    Lcg rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        Cyclo a = rng.element(4), b = rng.element(4);
        CHECK((a + b).embedded(12) == a.embedded(12) + b.embedded(12));
        CHECK((a * b).embedded(12) == a.embedded(12) * b.embedded(12));
        Cyclo c = rng.element(3), d = rng.element(3);
        CHECK((c * d).embedded(12) == c.embedded(12) * d.embedded(12));
    }
}

TEST_CASE("mixed-order arithmetic embeds when orders divide, else rejects", "[cyclotomic]") {
    Cyclo half(mpq_class(1, 2), 1);
    Cyclo i = Cyclo::root_of_unity(4, 1);
    Cyclo sum = half + i;  // auto-embeds the rational
    CHECK(sum.order() == 4);
    CHECK(sum - i == half.embedded(4));
    CHECK_THROWS_AS(Cyclo::root_of_unity(3, 1) + Cyclo::root_of_unity(4, 1), std::invalid_argument);
}

TEST_CASE("literal format round-trips bit-exactly", "[cyclotomic][io]") {
    const std::string sample = "1/2*w^0+-3/4*w^1";
    Cyclo parsed = Cyclo::parse_literal(sample, 4);
    CHECK(parsed.coords()[0] == mpq_class(1, 2));
    CHECK(parsed.coords()[1] == mpq_class(-3, 4));
    CHECK(parsed.literal() == sample);

    CHECK(Cyclo::zero(12).literal() == "0/1*w^0");
    CHECK(Cyclo::parse_literal("0/1*w^0", 12).is_zero());

    for (int order : {1, 2, 3, 4, 12}) {
        Lcg rng(100 + static_cast<unsigned long>(order));
        for (int trial = 0; trial < 10; ++trial) {
            Cyclo a = rng.element(order);
            std::string lit = a.literal();
            Cyclo back = Cyclo::parse_literal(lit, order);
            CHECK(back == a);
            CHECK(back.literal() == lit);
        }
    }
}

TEST_CASE("header token", "[cyclotomic][io]") {
    CHECK(qfib::cyclo_header(12) == "zeta_order=12");
    CHECK(qfib::parse_cyclo_header("zeta_order=4") == 4);
    CHECK_THROWS_AS(qfib::parse_cyclo_header("order=4"), std::invalid_argument);
}

TEST_CASE("inverse of mixed elements", "[cyclotomic]") {
    Cyclo z = Cyclo::root_of_unity(12, 1) + Cyclo::one(12);
    CHECK(z * z.inverse() == Cyclo::one(12));
    Cyclo y = Cyclo::root_of_unity(4, 1) * Cyclo(mpq_class(3, 7), 4) - Cyclo::one(4);
    CHECK((y / y) == Cyclo::one(4));
    CHECK_THROWS_AS(Cyclo::zero(3).inverse(), std::domain_error);
}
