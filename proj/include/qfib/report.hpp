#pragma once

// Uniform result records for the identity-verification suites.  Every suite
// produces one SuiteReport; an identity passes iff its difference series is
// exactly zero through the stated truncation.  JSON emission is deterministic:
// identities are sorted by id and all content is value-derived.

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace qfib {

struct IdentityResult {
    std::string id;        // e.g. "asyz/E4"
    std::string orders;    // truncation the comparison ran through, e.g. "Q^8"
    bool pass = false;
    std::string mismatch;  // first mismatching monomial when failing, else empty
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityResult> identities;
    // Observations recorded without affecting pass(): e.g. how the asserted
    // identities behave under substitutions the source tables do not pin down.
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& r : identities)
            if (!r.pass) return false;
        return true;
    }

    void add(std::string id, std::string orders, bool pass, std::string mismatch = "") {
        identities.push_back({std::move(id), std::move(orders), pass, std::move(mismatch)});
    }

    void note(std::string text) { notes.push_back(std::move(text)); }

    nlohmann::json to_json() const {
        std::vector<IdentityResult> sorted = identities;
        std::sort(sorted.begin(), sorted.end(),
                  [](const IdentityResult& a, const IdentityResult& b) { return a.id < b.id; });
        nlohmann::json items = nlohmann::json::array();
        for (const auto& r : sorted) {
            nlohmann::json item{{"id", r.id},
                                {"orders", r.orders},
                                {"status", r.pass ? "pass" : "fail"}};
            if (!r.pass) item["first_mismatch"] = r.mismatch;
            items.push_back(std::move(item));
        }
        nlohmann::json out{{"suite", suite},
                           {"status", pass() ? "pass" : "fail"},
                           {"identities", std::move(items)}};
        if (!notes.empty()) out["notes"] = notes;
        return out;
    }
};

}  // namespace qfib
