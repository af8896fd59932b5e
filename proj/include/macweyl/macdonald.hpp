#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "macweyl/laurent.hpp"
#include "macweyl/walks.hpp"

namespace macweyl {

enum class EvalMode { Generic, VZero, VInfinity };

inline EvalMode eval_mode_from_string(const std::string& s) {
    if (s == "generic") return EvalMode::Generic;
    if (s == "v0") return EvalMode::VZero;
    if (s == "vinf") return EvalMode::VInfinity;
    throw std::invalid_argument("unknown mode: " + s + " (use generic, v0, vinf)");
}

struct MacdonaldResult {
    Weight lambda;
    int sigma = 0;
    EvalMode mode = EvalMode::Generic;
    LaurentPolynomial value;
};

namespace detail {

struct RamYipAccum {
    const WalkContext* ctx;
    const RootDatum* D;
    std::vector<BiPoly> xi_factor;      // 1 - xi_j
    std::vector<std::pair<int, int>> xi;  // (u exponent, v exponent) of xi_j
    std::map<std::vector<int>, BiPoly> buckets;

    void leaf(const AffineElement& y, const BiPoly& num) {
        int len = D->weyl().length[y.dir];
        auto it = buckets.find(y.wt.c);
        BiPoly term = num.shifted(1, 0, len);
        if (it == buckets.end())
            buckets.emplace(y.wt.c, std::move(term));
        else
            it->second += term;
    }

    void dfs(const AffineElement& y, const AffineElement& z, const BiPoly& num, int pos) {
        if (pos == ctx->length()) {
            leaf(y, num);
            return;
        }
        dfs(y * ctx->letters[pos], z, num * xi_factor[pos], pos + 1);
        AffineElement z2 = z * ctx->sbeta[pos];
        AffineRoot img = z2.act(ctx->betas[pos]);
        BiPoly fold_num = num * (BiPoly::monomial(1, 0, -1) - BiPoly::monomial(1, 0, 1));
        if (!D->positive(img.root))
            fold_num = fold_num.shifted(1, xi[pos].first, xi[pos].second);
        dfs(y, z2, fold_num, pos + 1);
    }
};

}  // namespace detail

/// E_lambda^sigma(X; q, v) by summation over alcove walks. Generic mode
/// carries the exact rational-function coefficients; VZero and VInfinity
/// sum over the QB / reverse-QB walks only, with pure q-power coefficients.
/// The VInfinity value is E_lambda^sigma(X; q^{-1}, infinity) expressed in q.
/// The result is independent of the reduced word inside the context.
inline MacdonaldResult ram_yip_with_context(const RootDatum& D, const WalkContext& ctx,
                                            const Weight& lambda, int sigma, EvalMode mode,
                                            int walk_cap = 20) {
    if (lambda.tag != LatticeTag::X)
        throw std::invalid_argument("ram_yip expects an X-weight");
    if (mode == EvalMode::Generic && ctx.length() > walk_cap)
        throw std::invalid_argument(
            "ram_yip: length of m_lambda exceeds the walk cap (" + std::to_string(ctx.length()) +
            " > " + std::to_string(walk_cap) + "); use a smaller lambda");

    MacdonaldResult out;
    out.lambda = lambda;
    out.sigma = sigma;
    out.mode = mode;
    out.value = LaurentPolynomial(LatticeTag::X, D.rank());
    const int two_e = D.two_e();

    if (mode != EvalMode::Generic) {
        WalkFilter filter = (mode == EvalMode::VZero) ? WalkFilter::QuantumBruhat
                                                      : WalkFilter::ReverseQuantumBruhat;
        enumerate_walks(ctx, sigma, filter, [&](const AlcoveWalk& w) {
            int deg = (mode == EvalMode::VZero) ? w.qwt_deg : w.qwtstar_deg;
            out.value.add_term(w.wt, CoefficientScalar::u_power(two_e * deg));
        });
        return out;
    }

    detail::RamYipAccum acc;
    acc.ctx = &ctx;
    acc.D = &D;
    std::map<BiPoly, int> factor_counts;  // the denominator, factored
    for (int j = 0; j < ctx.length(); ++j) {
        int ue = two_e * ctx.deg[j];
        int ve = -ctx.pair2rho[j];  // Re(beta_j) is negative, so this is > 0
        acc.xi.emplace_back(ue, ve);
        acc.xi_factor.push_back(BiPoly::one_minus(1, ue, ve));
        factor_counts[acc.xi_factor.back()] += 1;
    }
    AffineElement start = AffineElement::finite(D, LatticeTag::Y, sigma);
    acc.dfs(start * ctx.word.pi, start * ctx.w, BiPoly::constant(1), 0);

    // normalize the unfolded walk to coefficient 1
    int unfolded_dir = D.weyl().mult(sigma, ctx.w.dir);
    int prefactor = -D.weyl().length[unfolded_dir];
    for (auto& [wt, raw] : acc.buckets) {
        // cancel whole denominator factors first; the scalar normalization
        // then usually sees a coprime pair
        BiPoly num = raw.shifted(1, 0, prefactor);
        BiPoly den = BiPoly::constant(1);
        for (const auto& [factor, count] : factor_counts) {
            int left = count;
            BiPoly q;
            while (left > 0 && bipoly_try_divexact(num, factor, q)) {
                num = q;
                --left;
            }
            for (; left > 0; --left) den *= factor;
        }
        out.value.add_term(Weight(LatticeTag::X, wt), CoefficientScalar(num, den));
    }

    Weight lead = D.act(sigma, lambda);
    if (!out.value.coefficient(lead).is_one())
        throw std::logic_error("ram_yip: leading coefficient is not 1");
    return out;
}

inline MacdonaldResult ram_yip(const RootDatum& D, const Weight& lambda, int sigma,
                               EvalMode mode, int walk_cap = 20) {
    return ram_yip_with_context(D, walk_context_for_weight(D, lambda), lambda, sigma, mode,
                                walk_cap);
}

/// <E_lambda, E_lambda>: the closed product over Inv(m_lambda), with t = v^2.
inline CoefficientScalar norm_squared_generic(const RootDatum& D, const Weight& lambda) {
    CoefficientScalar out = CoefficientScalar::one();
    const int two_e = D.two_e();
    for (const auto& b : inversion_set(minimal_rep(D, lambda))) {
        int h = -D.roots()[b.root].y_height;  // <rho^{vee Y}, -Re beta> > 0
        if (h <= 0) throw std::logic_error("norm: positive real part in Inv(m_lambda)");
        int m = b.deg;
        BiPoly n1 = BiPoly::one_minus(1, two_e * m, 2 * (h - 1));
        BiPoly n2 = BiPoly::one_minus(1, two_e * m, 2 * (h + 1));
        BiPoly d1 = BiPoly::one_minus(1, two_e * m, 2 * h);
        out *= CoefficientScalar(n1 * n2, d1 * d1);
    }
    return out;
}

/// v = 0 norm for antidominant lambda: prod_i prod_{j=1}^{-(lambda, alpha_i^Y)} (1 - q^j).
inline CoefficientScalar norm_squared_v0(const RootDatum& D, const Weight& lambda) {
    if (!lambda.antidominant())
        throw std::invalid_argument("norm_squared_v0 requires an antidominant weight");
    BiPoly out = BiPoly::constant(1);
    for (int i = 1; i <= D.rank(); ++i) {
        int bound = -D.pair_xweight_yroot(lambda, D.simple_root_index(i));
        for (int j = 1; j <= bound; ++j) out *= BiPoly::one_minus(1, D.two_e() * j, 0);
    }
    return CoefficientScalar(out);
}

inline CoefficientScalar norm_squared(const RootDatum& D, const Weight& lambda, EvalMode mode) {
    switch (mode) {
        case EvalMode::Generic: return norm_squared_generic(D, lambda);
        case EvalMode::VZero: return norm_squared_v0(D, lambda);
        default: throw std::invalid_argument("norm_squared: mode must be generic or v0");
    }
}

}  // namespace macweyl
