#pragma once

// Registry of the named verification suites.  A Profile fixes the truncation
// knobs; run_suite maps a suite name to its verifier with the knobs applied.
// Suite names are stable external identifiers (they appear on the command
// line and in reports).

#include <stdexcept>
#include <string>
#include <vector>

#include "qfib/generators.hpp"
#include "qfib/relations.hpp"
#include "qfib/tables.hpp"

namespace qfib {

struct Profile {
    Trunc bi{6, 3};   // bivariate truncation for the local relation suites
    int uni = 8;      // univariate truncation for root and table suites
    int modular = 8;  // truncation of the weight-graded expansions
    static Profile quick() { return {}; }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "pf-annihilation", "asyz",         "d-closure",
        "prop-mg",         "relation-re",  "fg2",
        "table-32",        "table-33",     "table-42",
        "k3-quadratic",    "root-symmetry", "vanishing-jkm",
        "birkhoff-unitriangular",          "integrability"};
    return names;
}

inline bool is_suite_name(const std::string& name) {
    for (const auto& s : suite_names())
        if (s == name) return true;
    return false;
}

inline SuiteReport run_suite(const std::string& name, const Profile& p = Profile::quick()) {
    if (name == "pf-annihilation") return verify_pf_annihilation(p.bi);
    if (name == "asyz") return verify_asyz(p.modular);
    if (name == "d-closure") return verify_d_closure(p.uni);
    if (name == "prop-mg") return verify_prop_mg(p.bi);
    if (name == "relation-re") return verify_relation_re(p.bi);
    if (name == "fg2") return verify_fg2(2, std::max(24, p.uni + 16));
    if (name == "table-32") return verify_table(Preset::E_SURFACE_32, p.uni);
    if (name == "table-33") return verify_table(Preset::E_3FOLD_33, p.uni);
    if (name == "table-42") return verify_table(Preset::K3_FIB_42, p.uni);
    if (name == "k3-quadratic") return verify_k3_quadratic(p.uni);
    if (name == "root-symmetry") return verify_root_symmetry(std::max(12, p.uni));
    if (name == "vanishing-jkm") return verify_vanishing_jkm(p.bi);
    if (name == "birkhoff-unitriangular") return verify_birkhoff_unitriangular(p.bi);
    if (name == "integrability") return verify_integrability(p.bi);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace qfib
