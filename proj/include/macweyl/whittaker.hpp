#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "macweyl/weyl_characters.hpp"

namespace macweyl {

/// One lambda-term of a component of the series part of the nonsymmetric
/// q-Whittaker function: q^{(lambda,lambda)/2} Z^{-lambda} times a truncated
/// q-series in X.
struct WhittakerTerm {
    Weight lambda;        // antidominant
    int q_uexp;           // u-exponent of q^{(lambda,lambda)/2}
    Weight z_weight;      // -lambda
    CharacterSeries coefficient;
};

struct WhittakerComponent {
    int sigma = 0;
    int norm_bound = 0;  // include lambda with (lambda,lambda)/2 <= norm_bound
    int q_order = 0;
    std::vector<WhittakerTerm> terms;  // sorted by lambda
};

/// All antidominant lambda with (lambda,lambda)/2 <= bound, sorted.
inline std::vector<Weight> antidominant_shell(const RootDatum& D, int bound) {
    std::vector<Weight> out;
    std::vector<int> m(D.rank(), 0);
    auto norm_uexp = [&](const std::vector<int>& coords) {
        Weight x(LatticeTag::X, coords);
        Weight y(LatticeTag::Y, coords);
        int p = D.pairing_2e(x, y);
        if (p % 2 != 0) throw std::logic_error("odd norm pairing");
        return p / 2;  // u-exponent of q^{(lambda,lambda)/2} = e (lambda,lambda)
    };
    // coordinate box, filtered by the positive-definite norm
    std::vector<int> maxc(D.rank(), 0);
    for (int i = 0; i < D.rank(); ++i) {
        std::vector<int> probe(D.rank(), 0);
        do {
            probe[i] += 1;
        } while (norm_uexp(probe) <= D.two_e() * bound);
        maxc[i] = probe[i];
    }
    std::vector<int> idx(D.rank(), 0);
    for (;;) {
        std::vector<int> coords(D.rank());
        for (int i = 0; i < D.rank(); ++i) coords[i] = -idx[i];
        if (norm_uexp(coords) <= D.two_e() * bound) out.push_back(Weight(LatticeTag::X, coords));
        int i = 0;
        while (i < D.rank()) {
            if (++idx[i] <= maxc[i]) break;
            idx[i] = 0;
            ++i;
        }
        if (i == D.rank()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The sigma-component of the series part of the nonsymmetric q-Whittaker
/// function: sum over antidominant lambda of
/// q^{(lambda,lambda)/2} Z^{-lambda} E_lambda^sigma(X;q,0) / <E,E>_{v=0},
/// truncated at (lambda,lambda)/2 <= N and at q_order in each coefficient.
/// The gamma(Z) gamma(X) prefactor is never included.
inline WhittakerComponent omega_component(const RootDatum& D, int sigma, int N, int q_order) {
    if (!simply_laced(D.type()) && D.kind() != Affinization::DualUntwisted)
        throw std::invalid_argument(
            "the nonsymmetric q-Whittaker function requires a dual untwisted affinization; " +
            D.describe() + " is untwisted non-simply-laced");
    WhittakerComponent out;
    out.sigma = sigma;
    out.norm_bound = N;
    out.q_order = q_order;
    for (const Weight& lam : antidominant_shell(D, N)) {
        Weight y(LatticeTag::Y, lam.c);
        auto e0 = ram_yip(D, lam, sigma, EvalMode::VZero).value;
        QPoly den = scalar_to_qpoly(D.two_e(), norm_squared_v0(D, lam));
        out.terms.push_back(WhittakerTerm{
            lam, D.pairing_2e(lam, y) / 2, -lam,
            series_divide(to_series(e0, D.two_e(), q_order), den, q_order)});
    }
    return out;
}

// ---- the sl2 q-Toda Dunkl operators ----------------------------------------

/// A pair (f_id, f_s) of truncated series in Z with X-coefficient scalars in
/// u, for the rank-one q-Toda checks. Keys are Z-exponents.
struct A1Pair {
    std::map<int, LaurentPolynomial> id_comp;
    std::map<int, LaurentPolynomial> s_comp;

    static LaurentPolynomial get(const std::map<int, LaurentPolynomial>& m, int k, int rank) {
        auto it = m.find(k);
        return it == m.end() ? LaurentPolynomial::zero(LatticeTag::X, rank) : it->second;
    }
};

namespace detail {

inline void a1_set(std::map<int, LaurentPolynomial>& m, int k, LaurentPolynomial v) {
    if (v.is_zero()) m.erase(k);
    else m[k] = std::move(v);
}

/// Gamma(Z^m) = q^{m/2} Z^m = u^{2m} Z^m; with the ambient q^{z^2} factor the
/// shift picks up an extra q^{1/4} Z^{+-1}, i.e. Gamma_eff(Z^m) = u^{2m+1} Z^{m+1}.
inline std::map<int, LaurentPolynomial> a1_gamma(const std::map<int, LaurentPolynomial>& f,
                                                 int direction, bool with_qz2) {
    std::map<int, LaurentPolynomial> out;
    for (const auto& [m, c] : f) {
        int ushift = direction * 2 * m + (with_qz2 ? 1 : 0);
        int znew = m + (with_qz2 ? direction : 0);
        a1_set(out, znew, CoefficientScalar::u_power(ushift) * c);
    }
    return out;
}

inline std::map<int, LaurentPolynomial> a1_zshift(const std::map<int, LaurentPolynomial>& f,
                                                  int shift) {
    std::map<int, LaurentPolynomial> out;
    for (const auto& [m, c] : f) out[m + shift] = c;
    return out;
}

inline std::map<int, LaurentPolynomial> a1_sub(const std::map<int, LaurentPolynomial>& a,
                                               const std::map<int, LaurentPolynomial>& b) {
    std::map<int, LaurentPolynomial> out = a;
    for (const auto& [m, c] : b) {
        auto it = out.find(m);
        if (it == out.end()) {
            out[m] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

inline std::map<int, LaurentPolynomial> a1_add(const std::map<int, LaurentPolynomial>& a,
                                               const std::map<int, LaurentPolynomial>& b) {
    std::map<int, LaurentPolynomial> out = a;
    for (const auto& [m, c] : b) {
        auto it = out.find(m);
        if (it == out.end()) {
            out[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

}  // namespace detail

/// Apply the rank-one q-Toda Dunkl operator Y-hat (direction = +1) or its
/// inverse Y-hat^{-1} (direction = -1) to a component pair. When with_qz2 is
/// set, the shifts carry the q^{z^2} bookkeeping (the series part of Omega is
/// always handled this way); the raw display is available with it off.
inline A1Pair a1_toda_apply(const A1Pair& f, int direction, bool with_qz2 = true) {
    using namespace detail;
    A1Pair out;
    if (direction == -1) {
        // ((1 - Z^{-2}) Gamma(f_id) + Gamma^{-1}(f_s),  Gamma^{-1}(f_s) - Z^{-2} Gamma(f_id))
        auto gid = a1_gamma(f.id_comp, +1, with_qz2);
        auto gs = a1_gamma(f.s_comp, -1, with_qz2);
        out.id_comp = a1_add(a1_sub(gid, a1_zshift(gid, -2)), gs);
        out.s_comp = a1_sub(gs, a1_zshift(gid, -2));
    } else if (direction == +1) {
        // (Gamma^{-1}(f_id - f_s),  Gamma(f_s) - Gamma((f_s - f_id)/Z^2))
        auto diff = a1_sub(f.id_comp, f.s_comp);
        out.id_comp = a1_gamma(diff, -1, with_qz2);
        auto inner = a1_zshift(a1_sub(f.s_comp, f.id_comp), -2);
        out.s_comp = a1_sub(a1_gamma(f.s_comp, +1, with_qz2), a1_gamma(inner, +1, with_qz2));
    } else {
        throw std::invalid_argument("a1_toda_apply: direction must be +-1");
    }
    return out;
}

/// The q^{z^2}-stripped Omega pair for A1, assembled from the component
/// terms: Z^m coefficient q^{m^2/4} (ch WW_{-m omega}, ch WW_{m omega}).
inline A1Pair a1_omega_pair(const RootDatum& D, int N, int q_order) {
    auto comp_id = omega_component(D, D.weyl().id, N, q_order);
    auto comp_s = omega_component(D, D.weyl().w0, N, q_order);
    A1Pair out;
    auto to_poly = [&](const WhittakerTerm& t) {
        LaurentPolynomial acc(LatticeTag::X, D.rank());
        for (int j = 0; j <= t.coefficient.order(); ++j)
            acc += CoefficientScalar::u_power(t.q_uexp + D.two_e() * j) * t.coefficient[j];
        return acc;
    };
    for (const auto& t : comp_id.terms) detail::a1_set(out.id_comp, -t.lambda.c[0], to_poly(t));
    for (const auto& t : comp_s.terms) detail::a1_set(out.s_comp, -t.lambda.c[0], to_poly(t));
    return out;
}

/// Multiply each coefficient by X^{k omega}.
inline A1Pair a1_x_multiple(const RootDatum& D, const A1Pair& f, int k) {
    A1Pair out;
    Weight shift(LatticeTag::X, {k});
    for (const auto& [m, c] : f.id_comp)
        out.id_comp[m] = c.shifted(shift, CoefficientScalar::one());
    for (const auto& [m, c] : f.s_comp)
        out.s_comp[m] = c.shifted(shift, CoefficientScalar::one());
    return out;
}

/// Truncate a coefficient to u-exponents <= bound.
inline LaurentPolynomial truncate_u(const LaurentPolynomial& f, int bound) {
    LaurentPolynomial out(f.tag(), f.rank());
    for (const auto& [w, c] : f.terms()) {
        BiPoly kept;
        for (const auto& [e, k] : c.num().terms())
            if (e.first <= bound) kept.add_term(k, e.first, e.second);
        if (!c.den().is_one()) throw std::logic_error("truncate_u: non-polynomial coefficient");
        out.add_term(Weight(f.tag(), w), CoefficientScalar(kept));
    }
    return out;
}

struct TodaEigenReport {
    bool holds = true;
    int compared_z_range = 0;
};

/// Y-hat_Z Omega = X^{-1} Omega and Y-hat_Z^{-1} Omega = X Omega on the
/// truncated pair. Coefficients of Z^m are certified up to u-exponent
/// m^2 + 2e * q_order, and one Z-degree is lost at the truncation boundary.
inline TodaEigenReport a1_toda_eigen_check(const RootDatum& D, int N, int q_order) {
    A1Pair omega = a1_omega_pair(D, N, q_order);
    int zmax = omega.id_comp.empty() ? 0 : omega.id_comp.rbegin()->first;
    TodaEigenReport rep;
    rep.compared_z_range = zmax - 1;
    auto check = [&](const A1Pair& lhs, const A1Pair& rhs) {
        for (int m = 0; m + 1 <= zmax; ++m) {
            int ubound = m * m + D.two_e() * q_order;
            for (auto side : {0, 1}) {
                auto l = A1Pair::get(side ? lhs.s_comp : lhs.id_comp, m, D.rank());
                auto r = A1Pair::get(side ? rhs.s_comp : rhs.id_comp, m, D.rank());
                if (truncate_u(l, ubound) != truncate_u(r, ubound)) rep.holds = false;
            }
        }
        // nothing may leak to negative Z-powers
        for (const auto& [m, c] : lhs.id_comp)
            if (m < 0 && !c.is_zero()) rep.holds = false;
        for (const auto& [m, c] : lhs.s_comp)
            if (m < 0 && !c.is_zero()) rep.holds = false;
    };
    check(a1_toda_apply(omega, +1), a1_x_multiple(D, omega, -1));
    check(a1_toda_apply(omega, -1), a1_x_multiple(D, omega, +1));
    return rep;
}

struct RecurrenceReport {
    bool holds = true;
    bool remark_holds = true;  // (2) and (3) imply (1) and (4)
    int max_m = 0;
};

/// The four recurrences for ch WW_{+-m omega}, checked exactly as truncated
/// series; (1) and (4) for m >= 1, (2) and (3) for m >= 0.
inline RecurrenceReport verify_rr(const RootDatum& D, CharacterEngine& eng, int M, int order) {
    if (D.rank() != 1) throw std::invalid_argument("verify_rr is the rank-one suite");
    RecurrenceReport rep;
    rep.max_m = M;
    const int id = D.weyl().id, s = D.weyl().w0;
    auto A = [&](int m) { return eng.global_char(id, Weight(LatticeTag::X, {-m}), order); };
    auto B = [&](int m) {
        return m == 0 ? A(0) : eng.global_char(s, Weight(LatticeTag::X, {-m}), order);
    };
    auto xshift = [&](const CharacterSeries& f, int k) {
        return f.shifted(Weight(LatticeTag::X, {k}), 0);
    };
    auto qpow = [&](int k) {
        QPoly p(k + 1, Rational(0));
        p[k] = 1;
        return p;
    };
    std::vector<CharacterSeries> R1, R2, R3, R4;  // residuals by m
    for (int m = 0; m <= M; ++m) {
        CharacterSeries r2 = xshift(B(m), 1) - (B(m + 1) - qpoly_times(qpow(m + 1), A(m + 1)));
        CharacterSeries r3 = xshift(A(m), -1) - (A(m + 1) - B(m + 1));
        R2.push_back(r2);
        R3.push_back(r3);
        if (!r2.is_zero() || !r3.is_zero()) rep.holds = false;
        if (m >= 1) {
            CharacterSeries r1 = xshift(A(m), 1) -
                                 (A(m - 1) - qpoly_times(qpow(m + 1), A(m + 1)) + B(m + 1));
            CharacterSeries r4 =
                xshift(B(m), -1) -
                (B(m - 1) - qpoly_times(qpow(m), B(m + 1) - A(m + 1)));
            R1.push_back(r1);
            R4.push_back(r4);
            if (!r1.is_zero() || !r4.is_zero()) rep.holds = false;
            // the Remark, as residual algebra: R1_m = R2_m - X R3_{m-1} and
            // R4_m = q^m R3_m - X^{-1} R2_{m-1}
            if (!(r1 == R2[m] - xshift(R3[m - 1], 1))) rep.remark_holds = false;
            if (!(r4 == qpoly_times(qpow(m), R3[m]) - xshift(R2[m - 1], -1)))
                rep.remark_holds = false;
        }
    }
    return rep;
}

}  // namespace macweyl
