#pragma once

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "macweyl/hecke.hpp"
#include "macweyl/whittaker.hpp"

namespace macweyl {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long checks = 0;
    std::vector<std::string> failures;  // minimal counterexamples

    void record(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            pass = false;
            if (failures.size() < 10) failures.push_back(what);
        }
    }
};

namespace detail {

inline std::vector<Weight> coordinate_box(const RootDatum& D, int lo, int hi) {
    std::vector<Weight> out;
    std::vector<int> c(D.rank(), lo);
    for (;;) {
        out.push_back(Weight(LatticeTag::X, c));
        int i = 0;
        while (i < D.rank()) {
            if (++c[i] <= hi) break;
            c[i] = lo;
            ++i;
        }
        if (i == D.rank()) break;
    }
    return out;
}

inline std::string spot(const RootDatum& D, const Weight& lam, int sigma, const char* what) {
    return D.describe() + " lambda=" + lam.str() + " sigma=" + D.weyl().name(sigma) + " : " + what;
}

struct GridSpec {
    const RootDatum* D;
    int lo, hi;
};

inline std::vector<GridSpec> route_grids() {
    return {
        {&RootDatum::get(CartanType::A1, Affinization::Untwisted), -2, 2},
        {&RootDatum::get(CartanType::A2, Affinization::Untwisted), -2, 2},
        {&RootDatum::get(CartanType::A3, Affinization::Untwisted), -1, 1},
        {&RootDatum::get(CartanType::C2, Affinization::DualUntwisted), -1, 1},
    };
}

}  // namespace detail

/// Criterion 1: the alcove-walk sum equals the operator construction
/// T_sigma E_lambda (monic-normalized), exactly, on the full grid.
inline SuiteResult verify_routes() {
    SuiteResult out{"route-agreement"};
    for (const auto& g : detail::route_grids()) {
        const RootDatum& D = *g.D;
        for (const Weight& lam : detail::coordinate_box(D, g.lo, g.hi)) {
            WalkContext ctx = walk_context_for_weight(D, lam);
            LaurentPolynomial e0 =
                ram_yip_with_context(D, ctx, lam, D.weyl().id, EvalMode::Generic).value;
            auto all_t = apply_T_all(D, e0);
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                LaurentPolynomial walk =
                    sigma == D.weyl().id
                        ? e0
                        : ram_yip_with_context(D, ctx, lam, sigma, EvalMode::Generic).value;
                LaurentPolynomial oper =
                    detail::monic_normalize_at(all_t[sigma], D.act(sigma, lam), nullptr);
                out.record(walk == oper, detail::spot(D, lam, sigma, "ram_yip != T_sigma route"));
            }
        }
    }
    return out;
}

/// Criterion 2: v = 0 and v = infinity specializations of the generic values
/// equal the direct QB / reverse-QB sums.
inline SuiteResult verify_specialization() {
    SuiteResult out{"specialization-coherence"};
    for (const auto& g : detail::route_grids()) {
        const RootDatum& D = *g.D;
        for (const Weight& lam : detail::coordinate_box(D, g.lo, g.hi)) {
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                LaurentPolynomial e = ram_yip(D, lam, sigma, EvalMode::Generic).value;
                out.record(e.specialize_v(false) ==
                               ram_yip(D, lam, sigma, EvalMode::VZero).value,
                           detail::spot(D, lam, sigma, "v=0 specialization != QB walk sum"));
                out.record(e.invert_q().specialize_v(true) ==
                               ram_yip(D, lam, sigma, EvalMode::VInfinity).value,
                           detail::spot(D, lam, sigma, "v=inf specialization != reverse-QB sum"));
            }
        }
    }
    return out;
}

/// Criterion 3: recursion route = Macdonald route for local characters.
inline SuiteResult verify_weylchar() {
    SuiteResult out{"weyl-character-double-route"};
    {
        const RootDatum& D = RootDatum::get(CartanType::A1, Affinization::Untwisted);
        CharacterEngine eng(D);
        for (int m = 0; m <= 6; ++m)
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                Weight lam(LatticeTag::X, {-m});
                bool ok = eng.local_char(sigma, lam) == eng.local_char_macdonald(sigma, lam);
                ok = ok && is_graded_character(D, eng.local_char(sigma, lam));
                out.record(ok, detail::spot(D, lam, sigma, "recursion != E(.;q,0)"));
            }
    }
    {
        const RootDatum& D = RootDatum::get(CartanType::A2, Affinization::Untwisted);
        CharacterEngine eng(D);
        for (const Weight& lam : detail::coordinate_box(D, -2, 0))
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                bool ok = eng.local_char(sigma, lam) == eng.local_char_macdonald(sigma, lam);
                ok = ok && is_graded_character(D, eng.local_char(sigma, lam));
                out.record(ok, detail::spot(D, lam, sigma, "recursion != E(.;q,0)"));
            }
    }
    return out;
}

/// Criterion 4: (q)_{w0 lambda} = <E,E>_{v=0} and global * (q)_{w0 lambda} =
/// local, at series order 12.
inline SuiteResult verify_norms(int order = 12) {
    SuiteResult out{"norm-global-coherence"};
    auto run = [&](const RootDatum& D, const std::vector<Weight>& lams) {
        CharacterEngine eng(D);
        for (const Weight& lam : lams) {
            if (!lam.antidominant()) continue;
            QPoly qf = eng.q_factorial_of(lam);
            out.record(scalar_to_qpoly(D.two_e(), norm_squared_v0(D, lam)) == qf,
                       detail::spot(D, lam, 0, "(q)_{w0 lambda} != <E,E>_{v=0}"));
            out.record(scalar_to_qpoly(D.two_e(),
                                       norm_squared_generic(D, lam).at_v_zero()) == qf,
                       detail::spot(D, lam, 0, "generic norm at v=0 mismatch"));
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                auto glob = eng.global_char(sigma, lam, order);
                auto local = to_series(eng.local_char(sigma, lam), D.two_e(), order);
                out.record(qpoly_times(qf, glob) == local,
                           detail::spot(D, lam, sigma, "global * (q)_{w0 lambda} != local"));
            }
        }
    };
    {
        const RootDatum& D = RootDatum::get(CartanType::A1, Affinization::Untwisted);
        std::vector<Weight> lams;
        for (int m = 0; m <= 6; ++m) lams.push_back(Weight(LatticeTag::X, {-m}));
        run(D, lams);
    }
    run(RootDatum::get(CartanType::A2, Affinization::Untwisted),
        detail::coordinate_box(RootDatum::get(CartanType::A2, Affinization::Untwisted), -2, 0));
    return out;
}

/// Criterion 5: the Y-eigenvalue equation on E_lambda.
inline SuiteResult verify_eigen() {
    SuiteResult out{"y-eigenvalue"};
    for (auto spec : std::vector<std::pair<CartanType, Affinization>>{
             {CartanType::A1, Affinization::Untwisted},
             {CartanType::A2, Affinization::Untwisted},
             {CartanType::C2, Affinization::DualUntwisted}}) {
        const RootDatum& D = RootDatum::get(spec.first, spec.second);
        for (const Weight& lam : detail::coordinate_box(D, -1, 1)) {
            LaurentPolynomial e = ram_yip(D, lam, D.weyl().id, EvalMode::Generic).value;
            for (int j = 1; j <= D.rank(); ++j) {
                Weight mu = D.fundamental_weight(LatticeTag::Y, j);
                bool ok = apply_Y(D, mu, e) == y_eigenvalue(D, lam, mu) * e;
                out.record(ok, detail::spot(D, lam, 0,
                                            ("Y^{omega_" + std::to_string(j) +
                                             "} eigenvalue equation").c_str()));
            }
        }
    }
    return out;
}

/// Criterion 6a: the four rank-one recurrences and the implication remark.
inline SuiteResult verify_rr_suite(int M = 8, int order = 12) {
    SuiteResult out{"sl2-recurrences"};
    const RootDatum& D = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    CharacterEngine eng(D);
    auto rep = verify_rr(D, eng, M, order);
    out.record(rep.holds, "A1 recurrences (1)-(4) up to m=" + std::to_string(M));
    out.record(rep.remark_holds, "A1 remark: (2),(3) imply (1),(4)");
    return out;
}

/// Criterion 6b: q-Toda Dunkl eigen-equations on the truncated Omega.
inline SuiteResult verify_toda(int N = 16, int order = 12) {
    SuiteResult out{"sl2-q-toda-eigen"};
    const RootDatum& D = RootDatum::get(CartanType::A1, Affinization::Untwisted);
    auto rep = a1_toda_eigen_check(D, N, order);
    out.record(rep.holds, "Yhat_Z / Yhat_Z^{-1} eigen-equations on truncated Omega");
    out.record(rep.compared_z_range >= 4, "Z-range of the comparison");
    return out;
}

/// Criterion 7: filtration leaf counting.
inline SuiteResult verify_filtration() {
    SuiteResult out{"filtration-counting"};
    auto run = [&](const RootDatum& D, const Weight& lam) {
        CharacterEngine eng(D);
        for (int i = 1; i <= D.rank(); ++i) {
            if (lam.c[i - 1] >= 0) continue;
            Rational dim =
                eng.local_char(D.weyl().id, -D.fundamental_weight(LatticeTag::X, i))
                    .evaluate_at_one();
            size_t first_count = 0;
            for (int sigma = 0; sigma < D.weyl().size; ++sigma) {
                auto rep = eng.filtration_report(sigma, lam, i);
                if (sigma == 0) first_count = rep.leaves.size();
                bool ok = Rational(static_cast<long>(rep.leaves.size())) == dim &&
                          rep.leaves.size() == first_count && rep.character_identity;
                out.record(ok, detail::spot(D, lam, sigma,
                                            ("filtration leaves at i=" + std::to_string(i)).c_str()));
            }
        }
    };
    run(RootDatum::get(CartanType::A1, Affinization::Untwisted), Weight(LatticeTag::X, {-1}));
    run(RootDatum::get(CartanType::A2, Affinization::Untwisted), Weight(LatticeTag::X, {-1, -1}));
    return out;
}

/// Criterion 8: structural properties (triangularity/monicity, reduced-word
/// independence, braid and quadratic relations on seeded random inputs, the
/// star duality).
inline SuiteResult verify_structural(std::uint64_t seed = 12345) {
    SuiteResult out{"structural"};
    const RootDatum& A2 = RootDatum::get(CartanType::A2, Affinization::Untwisted);

    // triangular and monic on the A2 grid
    for (const Weight& lam : detail::coordinate_box(A2, -1, 1)) {
        for (int sigma = 0; sigma < A2.weyl().size; ++sigma) {
            auto e = ram_yip(A2, lam, sigma, EvalMode::Generic).value;
            bool ok = e.coefficient(A2.act(sigma, lam)).is_one();
            int ginv = A2.weyl().inv(sigma);
            for (const auto& [w, c] : e.terms())
                ok = ok && weight_leq(A2, A2.act(ginv, Weight(LatticeTag::X, w)), lam);
            out.record(ok, detail::spot(A2, lam, sigma, "triangularity/monicity"));
        }
    }

    // reduced-word independence on at least 3 words per element where
    // available (m_{(-2,-1)}, m_{(-1,-2)} have 3 words, m_{(-2,-2)} has 6)
    int multi_word_elements = 0;
    for (auto lamc : std::vector<std::vector<int>>{{-1, -1}, {-2, -1}, {-1, -2}, {-2, -2}}) {
        Weight lam(LatticeTag::X, lamc);
        auto words = all_reduced_words(minimal_rep(A2, lam), 3);
        if (words.size() < 2) continue;
        if (words.size() >= 3) ++multi_word_elements;
        LaurentPolynomial ref = ram_yip(A2, lam, A2.weyl().gen(1), EvalMode::Generic).value;
        for (const auto& word : words) {
            auto ctx = make_walk_context(A2, word);
            out.record(ram_yip_with_context(A2, ctx, lam, A2.weyl().gen(1),
                                            EvalMode::Generic).value == ref,
                       detail::spot(A2, lam, A2.weyl().gen(1), "reduced-word independence"));
        }
    }
    out.record(multi_word_elements >= 2, "elements with 3 reduced words available");

    // braid and quadratic relations on 100 seeded random polynomials
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wc(-2, 2), coef(-3, 3), expo(-2, 2);
    CoefficientScalar v = CoefficientScalar::v_power(1);
    CoefficientScalar vinv = CoefficientScalar::v_power(-1);
    int polys = 0;
    for (auto spec : std::vector<std::pair<CartanType, Affinization>>{
             {CartanType::A1, Affinization::Untwisted},
             {CartanType::A2, Affinization::Untwisted},
             {CartanType::C2, Affinization::DualUntwisted}}) {
        const RootDatum& D = RootDatum::get(spec.first, spec.second);
        for (int trial = 0; trial < 34 && polys < 100; ++trial, ++polys) {
            LaurentPolynomial f(LatticeTag::X, D.rank());
            for (int t = 0; t < 3; ++t) {
                std::vector<int> w(D.rank());
                for (int& x : w) x = wc(rng);
                f.add_term(Weight(LatticeTag::X, w),
                           CoefficientScalar::monomial(coef(rng), 2 * expo(rng), expo(rng)));
            }
            for (int i = 0; i <= D.rank(); ++i) {
                auto tf = apply_T(D, i, f);
                out.record((apply_T(D, i, tf + vinv * f) - v * (tf + vinv * f)).is_zero(),
                           D.describe() + " quadratic relation at i=" + std::to_string(i));
            }
            if (D.rank() >= 2) {
                auto a = apply_T(D, 1, apply_T(D, 2, apply_T(D, 1, f)));
                auto b = apply_T(D, 2, apply_T(D, 1, apply_T(D, 2, f)));
                bool expect_equal = D.type() != CartanType::C2 && D.type() != CartanType::G2;
                if (expect_equal)
                    out.record(a == b, D.describe() + " braid relation s1 s2");
            }
        }
    }

    // star duality on a small grid
    for (auto t : {CartanType::A1, CartanType::A2}) {
        const RootDatum& D = RootDatum::get(t, Affinization::Untwisted);
        for (const Weight& lam : detail::coordinate_box(D, -1, 1)) {
            Weight mlam = -D.act(D.weyl().w0, lam);
            bool ok = ram_yip(D, lam, D.weyl().w0, EvalMode::Generic).value ==
                      ram_yip(D, mlam, D.weyl().id, EvalMode::Generic).value.star();
            out.record(ok, detail::spot(D, lam, D.weyl().w0, "E^{w0} = star(E_{-w0 lambda})"));
        }
    }
    return out;
}

inline std::vector<SuiteResult> verify_all(std::uint64_t seed = 12345) {
    return {verify_routes(),   verify_specialization(), verify_weylchar(),
            verify_norms(),    verify_eigen(),          verify_rr_suite(),
            verify_toda(),     verify_filtration(),     verify_structural(seed)};
}

}  // namespace macweyl
