#include <catch2/catch_amalgamated.hpp>

#include <qfib/suites.hpp>

using namespace qfib;

namespace {

bool has_id(const SuiteReport& r, const std::string& id) {
    for (const auto& ir : r.identities)
        if (ir.id == id) return true;
    return false;
}

}  // namespace

TEST_CASE("annihilation suite: both operators kill the series for every preset") {
    const SuiteReport r = verify_pf_annihilation(Trunc{4, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(r.identities.size() == 8);  // two operators per preset
}

TEST_CASE("integrability suite: mixed logarithmic derivatives commute") {
    const SuiteReport r = verify_integrability(Trunc{4, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
}

TEST_CASE("divisor/bundle derivative identities for the blackboard series") {
    const SuiteReport r = verify_prop_mg(Trunc{4, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(r.identities.size() == 24);  // twelve identities at two fixed points
}

TEST_CASE("cubic exchange relation between the two derivative directions") {
    const SuiteReport r = verify_relation_re(Trunc{4, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "relation-re/constant-term"));
}

TEST_CASE("vanishing suite: the six identically-zero blackboard series") {
    const SuiteReport r = verify_vanishing_jkm(Trunc{5, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "vanishing-jkm/companions-nonzero"));
    CHECK(has_id(r, "vanishing-jkm/exchange-antisymmetry"));
}

TEST_CASE("finite generation of the correction coefficients in the odd root ring") {
    const SuiteReport r = verify_fg2(2, 24);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "fg2/a1-membership"));
    CHECK(has_id(r, "fg2/a2-membership"));
    CHECK(has_id(r, "fg2/negative-control"));
}

TEST_CASE("surface coefficient table closes over its derivative algebra") {
    const SuiteReport r = verify_table(Preset::E_SURFACE_32, 6);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(r.identities.size() == 20);
    CHECK_FALSE(r.notes.empty());  // re-run at the other roots is reported
}

TEST_CASE("threefold coefficient table closes over its derivative algebra") {
    const SuiteReport r = verify_table(Preset::E_3FOLD_33, 6);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(r.identities.size() == 25);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("K3 coefficient table closes over its derivative algebra") {
    const SuiteReport r = verify_table(Preset::K3_FIB_42, 6);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(r.identities.size() == 25);
    CHECK_FALSE(r.notes.empty());
}

TEST_CASE("K3 quadratic relation holds on both branches of the second index") {
    const SuiteReport r = verify_k3_quadratic(6);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "k3-quadratic/second-index-0"));
    CHECK(has_id(r, "k3-quadratic/second-index-1"));
    CHECK_FALSE(r.notes.empty());  // other first-index roots are reported
}

TEST_CASE("root symmetry: products, twisted sums, and closed form vs Newton") {
    const SuiteReport r = verify_root_symmetry(10);
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "root-symmetry/closed-vs-newton@(1,1)"));
}

TEST_CASE("factorized operators are unitriangular and match the closed route") {
    const SuiteReport r = verify_birkhoff_unitriangular(Trunc{4, 2});
    CAPTURE(r.to_json().dump(2));
    REQUIRE(r.pass());
    CHECK(has_id(r, "birkhoff-unitriangular/LOCAL_P1P1/z-window"));
    CHECK(has_id(r, "birkhoff-unitriangular/closed-route-top-column"));
}

TEST_CASE("suite registry dispatches every published name") {
    CHECK(suite_names().size() == 14);
    for (const auto& name : suite_names()) CHECK(is_suite_name(name));
    CHECK_FALSE(is_suite_name("no-such-suite"));
    CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);

    Profile p;
    p.uni = 8;
    p.modular = 6;
    const SuiteReport asyz = run_suite("asyz", p);
    CAPTURE(asyz.to_json().dump(2));
    REQUIRE(asyz.pass());
    CHECK(asyz.suite == "asyz");

    const SuiteReport dcl = run_suite("d-closure", p);
    CAPTURE(dcl.to_json().dump(2));
    REQUIRE(dcl.pass());
    CHECK(dcl.suite == "d-closure");
}
