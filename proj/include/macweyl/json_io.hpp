#pragma once

#include <string>

#include <json.hpp>

#include "macweyl/walks.hpp"
#include "macweyl/whittaker.hpp"

namespace macweyl {

using nlohmann::json;

inline json int_to_json(const Int& n) {
    // exact when it fits a machine integer; decimal string beyond that
    if (n.fits_slong_p()) return json(n.get_si());
    return json(n.get_str());
}

inline json bipoly_to_json(const BiPoly& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(json::array({int_to_json(c), e.first, e.second}));
    return out;
}

/// {weight: [...], num: [[coef, u_exp, v_exp]...], den: [...]} records,
/// sorted by weight lexicographically.
inline json laurent_to_json(const LaurentPolynomial& f) {
    json out = json::array();
    for (const auto& [w, c] : f.terms()) {
        json rec;
        rec["weight"] = w;
        rec["num"] = bipoly_to_json(c.num());
        rec["den"] = bipoly_to_json(c.den());
        out.push_back(rec);
    }
    return out;
}

inline json series_to_json(const CharacterSeries& s) {
    json coeffs = json::array();
    for (int j = 0; j <= s.order(); ++j) coeffs.push_back(laurent_to_json(s[j]));
    return json{{"order", s.order()}, {"coefficients", coeffs}};
}

/// "pi:<weight>/<finite-word>;letters:[i...]"
inline std::string reduced_word_string(const ReducedWord& word) {
    const RootDatum& D = *word.pi.D;
    std::string s = "pi:";
    for (size_t i = 0; i < word.pi.wt.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(word.pi.wt.c[i]);
    }
    s += "/" + D.weyl().name(word.pi.dir) + ";letters:[";
    for (size_t i = 0; i < word.letters.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(word.letters[i]);
    }
    return s + "]";
}

/// {J: [...], wt: [...], dir: "word", Jplus: [...], Jminus: [...], qwt_deg: n}
inline json walk_to_json(const RootDatum& D, const AlcoveWalk& w) {
    return json{{"J", w.folds},        {"wt", w.wt.c},          {"dir", D.weyl().name(w.dir)},
                {"Jplus", w.plus},     {"Jminus", w.minus},     {"qwt_deg", w.qwt_deg}};
}

inline json whittaker_to_json(const RootDatum& D, const WhittakerComponent& comp) {
    json terms = json::array();
    for (const auto& t : comp.terms) {
        int g = std::gcd(t.q_uexp, D.two_e());
        std::string qe = std::to_string(t.q_uexp / g);
        if (D.two_e() / g != 1) qe += "/" + std::to_string(D.two_e() / g);
        terms.push_back(json{{"lambda", t.lambda.c},
                             {"q_exp", qe},
                             {"z_weight", t.z_weight.c},
                             {"coefficient", series_to_json(t.coefficient)}});
    }
    return json{{"sigma", D.weyl().name(comp.sigma)},
                {"norm_bound", comp.norm_bound},
                {"q_order", comp.q_order},
                {"terms", terms}};
}

}  // namespace macweyl
