#pragma once

#include <stdexcept>
#include <vector>

#include "macweyl/affine_weyl.hpp"
#include "macweyl/laurent.hpp"
#include "macweyl/macdonald.hpp"

namespace macweyl {

/// Action of (mu, sigma) in W(X~) = Y x| W on monomials:
/// (mu, sigma) . X^lambda = q^{-(sigma(lambda), mu)} X^{sigma(lambda)}.
inline LaurentPolynomial affine_act_poly(const AffineElement& g, const LaurentPolynomial& f) {
    if (g.root_side != LatticeTag::X)
        throw std::invalid_argument("affine_act_poly expects a W(X~) element");
    const RootDatum& D = *g.D;
    LaurentPolynomial out(f.tag(), f.rank());
    for (const auto& [w, c] : f.terms()) {
        Weight img = D.act(g.dir, Weight(LatticeTag::X, w));
        int ushift = -D.pairing_2e(img, g.wt);
        out.add_term(img, c * CoefficientScalar::u_power(ushift));
    }
    return out;
}

/// Gamma_mu . X^lambda = q^{(lambda, mu)} X^lambda.
inline LaurentPolynomial gamma_shift(const RootDatum& D, const Weight& mu,
                                     const LaurentPolynomial& f) {
    if (mu.tag != LatticeTag::Y) throw std::invalid_argument("gamma_shift expects mu in Y");
    LaurentPolynomial out(f.tag(), f.rank());
    for (const auto& [w, c] : f.terms()) {
        Weight x(LatticeTag::X, w);
        out.add_term(x, c * CoefficientScalar::u_power(D.pairing_2e(x, mu)));
    }
    return out;
}

/// An operator sum_t f_t Gamma sigma_t with a common polynomial denominator;
/// application performs the exact division, which must succeed on any input
/// the operator preserves.
struct DifferenceReflectionOperator {
    struct Term {
        LaurentPolynomial multiplier;  // polynomial numerator factor
        AffineElement op;              // combined Gamma-shift and Weyl part, in W(X~)
    };
    std::vector<Term> terms;
    LaurentPolynomial denominator;  // constant 1 when absent

    LaurentPolynomial apply(const LaurentPolynomial& f) const {
        LaurentPolynomial acc(f.tag(), f.rank());
        for (const auto& t : terms) acc += t.multiplier * affine_act_poly(t.op, f);
        if (denominator.size() == 1 && denominator.terms().begin()->second.is_one() &&
            denominator.terms().begin()->first == std::vector<int>(f.rank(), 0))
            return acc;
        return laurent_divexact(acc, denominator);
    }
};

/// X^{alpha_i} as a monomial, with X^{delta} = q for i = 0.
inline LaurentPolynomial affine_simple_monomial(const RootDatum& D, int i) {
    if (i == 0) {
        Weight w = -D.root_as_weight(LatticeTag::X, D.xside().phi);
        return LaurentPolynomial::monomial(w, CoefficientScalar::u_power(D.two_e()));
    }
    return LaurentPolynomial::monomial(D.simple_root_weight(LatticeTag::X, i),
                                       CoefficientScalar::one());
}

/// The Demazure-Lusztig operator T_i (power = +1) or its inverse
/// T_i^{-1} = T_i - v + v^{-1} (power = -1), for i in {0, 1, ..., rank}.
inline DifferenceReflectionOperator demazure_lusztig(const RootDatum& D, int i, int power = 1) {
    if (power != 1 && power != -1)
        throw std::invalid_argument("demazure_lusztig: power must be +-1");
    DifferenceReflectionOperator op;
    LaurentPolynomial xalpha = affine_simple_monomial(D, i);
    LaurentPolynomial one = LaurentPolynomial::one(LatticeTag::X, D.rank());
    op.denominator = xalpha - one;
    AffineElement s = AffineElement::simple(D, LatticeTag::X, i);
    AffineElement id = AffineElement::identity(D, LatticeTag::X);
    // T_i = [ (v X^{alpha_i} - v^{-1}) s_i + (v^{-1} - v) id ] / (X^{alpha_i} - 1)
    LaurentPolynomial refl_num = CoefficientScalar::v_power(1) * xalpha -
                                 CoefficientScalar::v_power(-1) * one;
    op.terms.push_back({refl_num, s});
    CoefficientScalar vmv = CoefficientScalar::v_power(-1) - CoefficientScalar::v_power(1);
    if (power == 1) {
        op.terms.push_back({vmv * one, id});
    } else {
        op.terms.push_back({vmv * xalpha, id});
    }
    return op;
}

inline LaurentPolynomial apply_T(const RootDatum& D, int i, const LaurentPolynomial& f,
                                 int power = 1) {
    return demazure_lusztig(D, i, power).apply(f);
}

/// T_sigma f (power +1) or T_sigma^{-1} f (power -1) along the canonical
/// reduced word of sigma: T_sigma = T_{i_1} ... T_{i_l}, so its inverse is
/// T_{i_l}^{-1} ... T_{i_1}^{-1}.
inline LaurentPolynomial apply_T_word(const RootDatum& D, int sigma, const LaurentPolynomial& f,
                                      int power = 1) {
    const auto& word = D.weyl().word[sigma];
    LaurentPolynomial out = f;
    if (power == 1) {
        for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply_T(D, *it, out, 1);
    } else {
        for (int i : word) out = apply_T(D, i, out, -1);
    }
    return out;
}

/// T_w f for w in W(X~) along a reduced word, pi acting through the
/// monomial action.
inline LaurentPolynomial apply_T_affine(const AffineElement& w, const LaurentPolynomial& f) {
    const RootDatum& D = *w.D;
    auto word = reduced_word(w);
    LaurentPolynomial out = f;
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        out = apply_T(D, *it, out, 1);
    return affine_act_poly(word.pi, out);
}

inline LaurentPolynomial apply_T_affine_inverse(const AffineElement& w,
                                                const LaurentPolynomial& f) {
    const RootDatum& D = *w.D;
    auto word = reduced_word(w);
    LaurentPolynomial out = affine_act_poly(word.pi.inverse(), f);
    for (int i : word.letters) out = apply_T(D, i, out, -1);
    return out;
}

/// Y^mu as a difference-reflection Dunkl operator: Y^mu = Y^{mu_+} (Y^{mu_-})^{-1}
/// with mu = mu_+ - mu_- the coordinatewise dominant decomposition, and
/// Y^{nu} = T_{t_nu} for dominant nu.
inline LaurentPolynomial apply_Y(const RootDatum& D, const Weight& mu,
                                 const LaurentPolynomial& f) {
    if (mu.tag != LatticeTag::Y) throw std::invalid_argument("apply_Y expects mu in Y");
    Weight plus = Weight::zero(LatticeTag::Y, D.rank());
    Weight minus = Weight::zero(LatticeTag::Y, D.rank());
    for (int i = 0; i < D.rank(); ++i) {
        if (mu.c[i] > 0) plus.c[i] = mu.c[i];
        else minus.c[i] = -mu.c[i];
    }
    LaurentPolynomial out = f;
    if (!minus.is_zero())
        out = apply_T_affine_inverse(AffineElement::translation(D, LatticeTag::X, minus), out);
    if (!plus.is_zero())
        out = apply_T_affine(AffineElement::translation(D, LatticeTag::X, plus), out);
    return out;
}

/// The Y-eigenvalue of E_lambda at Y^mu:
/// q^{-(lambda, mu)} v^{2 <rho^{vee Y}, w(mu)>} where w is the minimal
/// element with w(lambda) antidominant.
inline CoefficientScalar y_eigenvalue(const RootDatum& D, const Weight& lambda, const Weight& mu) {
    int sigma = D.sigma_lambda(lambda);
    int uexp = -D.pairing_2e(lambda, mu);
    int vexp = D.two_rho_y_pairing(D.act(sigma, mu));
    return CoefficientScalar::monomial(1, uexp, vexp);
}

namespace detail {

inline LaurentPolynomial monic_normalize_at(const LaurentPolynomial& f, const Weight& lead_wt,
                                            int* vpower_out) {
    CoefficientScalar lead = f.coefficient(lead_wt);
    if (lead.is_zero() || !lead.is_polynomial() || lead.num().terms().size() != 1)
        throw std::logic_error("e_via_t: leading coefficient is not a v-monomial");
    const auto& term = *lead.num().terms().begin();
    if (term.first.first != 0 || !lead.den().is_one() || term.second != 1)
        throw std::logic_error("e_via_t: unexpected leading coefficient " + lead.str());
    if (vpower_out) *vpower_out = term.first.second;
    return CoefficientScalar::v_power(-term.first.second) * f;
}

}  // namespace detail

/// E_lambda^sigma via the operator route: T_sigma applied to a precomputed
/// E_lambda, normalized so the coefficient of X^{sigma(lambda)} is 1. The
/// v-power removed in that normalization is reported through `vpower_out`.
inline LaurentPolynomial e_via_t_from(const RootDatum& D, const Weight& lambda, int sigma,
                                      const LaurentPolynomial& e0, int* vpower_out = nullptr) {
    LaurentPolynomial f = apply_T_word(D, sigma, e0);
    return detail::monic_normalize_at(f, D.act(sigma, lambda), vpower_out);
}

inline LaurentPolynomial e_via_t(const RootDatum& D, const Weight& lambda, int sigma,
                                 int* vpower_out = nullptr, int walk_cap = 20) {
    LaurentPolynomial e0 = ram_yip(D, lambda, D.weyl().id, EvalMode::Generic, walk_cap).value;
    return e_via_t_from(D, lambda, sigma, e0, vpower_out);
}

/// T_sigma f for every sigma at once, sharing prefixes: T_{s_i g} f =
/// T_i (T_g f) along left descents.
inline std::vector<LaurentPolynomial> apply_T_all(const RootDatum& D,
                                                  const LaurentPolynomial& f) {
    const WeylGroup& W = D.weyl();
    std::vector<LaurentPolynomial> out(W.size, LaurentPolynomial(f.tag(), f.rank()));
    std::vector<int> order(W.size);
    for (int g = 0; g < W.size; ++g) order[g] = g;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return W.length[a] < W.length[b]; });
    std::vector<bool> done(W.size, false);
    for (int g : order) {
        if (g == W.id) {
            out[g] = f;
            done[g] = true;
            continue;
        }
        // find i with l(s_i g) < l(g)
        int found = -1, parent = -1;
        for (int i = 1; i <= D.rank(); ++i) {
            int p = W.mult(W.gen(i), g);
            if (W.length[p] < W.length[g]) { found = i; parent = p; break; }
        }
        if (found < 0 || !done[parent]) throw std::logic_error("apply_T_all: bad BFS order");
        out[g] = apply_T(D, found, out[parent]);
        done[g] = true;
    }
    return out;
}

}  // namespace macweyl
