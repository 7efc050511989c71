#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfib/cyclotomic.hpp"

namespace qfib {

enum class Preset { LOCAL_P1P1, E_SURFACE_32, E_3FOLD_33, K3_FIB_42 };

// A two-factor projective target P^{n1} x P^{n2} with torus weights and a twist
// datum: rows (a1;a2) act as positive-bundle twists, rows (b1;b2) as negative ones.
struct GeometrySpec {
    std::string name;
    int n1 = 0;
    int n2 = 0;
    std::vector<std::pair<int, int>> a_twists;
    std::vector<std::pair<int, int>> b_twists;
    std::vector<Cyclo> w1;  // weights lambda_{1,0..n1}
    std::vector<Cyclo> w2;  // weights lambda_{2,0..n2}
    int zeta_order = 1;

    int dim1() const { return n1 + 1; }
    int dim2() const { return n2 + 1; }
    int class_size() const { return dim1() * dim2(); }
    int index(int a, int b) const { return a * dim2() + b; }

    // Sum over twist rows of column k minus nothing must equal n_k + 1.
    bool calabi_yau() const {
        long s1 = 0, s2 = 0;
        for (const auto& [a1, a2] : a_twists) s1 += a1, s2 += a2;
        for (const auto& [b1, b2] : b_twists) s1 -= b1, s2 -= b2;
        return s1 == n1 + 1 && s2 == n2 + 1;
    }

    bool weights_distinct() const {
        for (size_t i = 0; i < w1.size(); ++i)
            for (size_t k = i + 1; k < w1.size(); ++k)
                if (w1[i] == w1[k]) return false;
        for (size_t j = 0; j < w2.size(); ++j)
            for (size_t k = j + 1; k < w2.size(); ++k)
                if (w2[j] == w2[k]) return false;
        return true;
    }
};

inline GeometrySpec make_geometry(Preset p) {
    GeometrySpec g;
    switch (p) {
        case Preset::LOCAL_P1P1: {
            g.name = "LOCAL_P1P1";
            g.n1 = g.n2 = 1;
            g.b_twists = {{-2, -2}};
            g.zeta_order = 4;
            g.w1 = {Cyclo::one(4), Cyclo::integer(-1, 4)};
            g.w2 = {Cyclo::root_of_unity(4, 1), Cyclo::root_of_unity(4, 3)};
            break;
        }
        case Preset::E_SURFACE_32: {
            g.name = "E_SURFACE_32";
            g.n1 = 2;
            g.n2 = 1;
            g.a_twists = {{3, 2}};
            g.zeta_order = 12;
            for (int k = 0; k < 3; ++k) g.w1.push_back(Cyclo::root_of_unity(12, 4 * k));
            g.w2 = {Cyclo::one(12), Cyclo::root_of_unity(12, 6)};
            break;
        }
        case Preset::E_3FOLD_33: {
            g.name = "E_3FOLD_33";
            g.n1 = g.n2 = 2;
            g.a_twists = {{3, 3}};
            g.zeta_order = 3;
            for (int k = 0; k < 3; ++k) g.w1.push_back(Cyclo::root_of_unity(3, k));
            g.w2 = g.w1;
            break;
        }
        case Preset::K3_FIB_42: {
            g.name = "K3_FIB_42";
            g.n1 = 3;
            g.n2 = 1;
            g.a_twists = {{4, 2}};
            g.zeta_order = 4;
            for (int k = 0; k < 4; ++k) g.w1.push_back(Cyclo::root_of_unity(4, k));
            g.w2 = {Cyclo::one(4), Cyclo::integer(-1, 4)};
            break;
        }
        default:
            throw std::invalid_argument("make_geometry: unknown preset");
    }
    if (!g.calabi_yau()) throw std::logic_error("make_geometry: preset violates the Calabi-Yau balance");
    if (!g.weights_distinct()) throw std::logic_error("make_geometry: repeated weights");
    return g;
}

inline std::vector<Preset> all_presets() {
    return {Preset::LOCAL_P1P1, Preset::E_SURFACE_32, Preset::E_3FOLD_33, Preset::K3_FIB_42};
}

inline std::string preset_name(Preset p) { return make_geometry(p).name; }

inline Preset preset_from_name(const std::string& s) {
    for (Preset p : all_presets())
        if (preset_name(p) == s) return p;
    throw std::invalid_argument("unknown geometry preset '" + s + "'");
}

}  // namespace qfib
