#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "macweyl/affine_weyl.hpp"
#include "macweyl/qbg.hpp"
#include "macweyl/root_data.hpp"

namespace macweyl {

enum class WalkFilter { None, QuantumBruhat, ReverseQuantumBruhat };

/// Everything about one alcove walk p_J of a fixed type, with the derived
/// fold data: signs, positive/negative fold split, qwt and qwt*.
struct AlcoveWalk {
    std::uint64_t mask = 0;        // bit j-1 set = fold at position j
    std::vector<int> folds;        // J, ascending, 1-based
    std::vector<int> plus;         // J^+
    std::vector<int> minus;        // J^-
    Weight wt;                     // weight of the endpoint
    int dir = 0;                   // direction of the endpoint
    int dir_length = 0;
    std::vector<int> qwt_re;       // Y-root coordinates of Re(qwt)
    int qwt_deg = 0;               // delta-degree of qwt  = sum_{j in J^-} deg beta_j
    std::vector<int> qwtstar_re;
    int qwtstar_deg = 0;           // sum over J^+
};

/// Precomputed data shared by every walk of a given type (pi, i_1..i_l).
struct WalkContext {
    const RootDatum* D = nullptr;
    ReducedWord word;
    AffineElement w;                     // pi s_{i_1} ... s_{i_l}
    std::vector<AffineElement> letters;  // the simple reflections of the word
    std::vector<AffineRoot> betas;
    std::vector<AffineElement> sbeta;    // reflections s_{beta_j}
    std::vector<int> label;              // -Re(beta_j) as positive-root index
    std::vector<int> deg;                // deg(beta_j)
    std::vector<int> pair2rho;           // <2 rho^{vee Y}, Re beta_j>

    int length() const { return static_cast<int>(word.letters.size()); }
};

inline WalkContext make_walk_context(const RootDatum& D, const ReducedWord& word) {
    WalkContext ctx;
    ctx.D = &D;
    ctx.word = word;
    ctx.w = word.evaluate();
    ctx.betas = beta_sequence(word);
    ctx.sbeta = beta_reflections(word);
    for (int i : word.letters)
        ctx.letters.push_back(AffineElement::simple(D, word.pi.root_side, i));
    for (const auto& b : ctx.betas) {
        ctx.label.push_back(D.negative(b.root));
        ctx.deg.push_back(b.deg);
        ctx.pair2rho.push_back(D.two_rho_y_pairing_root(b.root));
    }
    return ctx;
}

inline WalkContext walk_context_for_weight(const RootDatum& D, const Weight& lambda) {
    return make_walk_context(D, reduced_word(minimal_rep(D, lambda)));
}

namespace detail {

struct WalkState {
    AffineElement y;  // partial endpoint product
    AffineElement z;  // current z_k
    AlcoveWalk walk;
};

template <typename Fn>
void walk_dfs(const WalkContext& ctx, WalkFilter filter, const QuantumBruhatGraph* qbg,
              WalkState& st, int pos, Fn&& fn) {
    const int l = ctx.length();
    if (pos == l) {
        if (st.z != st.y)
            throw std::logic_error("alcove walk: endpoint differs from hatted-word formula");
        st.walk.wt = st.y.wt;
        st.walk.dir = st.y.dir;
        st.walk.dir_length = ctx.D->weyl().length[st.y.dir];
        fn(st.walk);
        return;
    }
    // step through the wall (no fold at pos+1)
    {
        WalkState next = st;
        next.y = st.y * ctx.letters[pos];
        walk_dfs(ctx, filter, qbg, next, pos + 1, fn);
    }
    // fold at pos+1
    {
        AffineElement z2 = st.z * ctx.sbeta[pos];
        bool keep = true;
        if (filter == WalkFilter::QuantumBruhat)
            keep = qbg->has_edge(st.z.dir, ctx.label[pos]) != EdgeKind::None;
        else if (filter == WalkFilter::ReverseQuantumBruhat)
            keep = qbg->has_edge(z2.dir, ctx.label[pos]) != EdgeKind::None;
        if (keep) {
            WalkState next = st;
            next.z = z2;
            next.walk.mask |= (std::uint64_t(1) << pos);
            next.walk.folds.push_back(pos + 1);
            AffineRoot img = z2.act(ctx.betas[pos]);
            bool positive_fold = ctx.D->positive(img.root);
            const auto& yb = ctx.D->roots()[ctx.betas[pos].root].y_coords;
            if (positive_fold) {
                next.walk.plus.push_back(pos + 1);
                next.walk.qwtstar_deg += ctx.deg[pos];
                for (size_t i = 0; i < yb.size(); ++i) next.walk.qwtstar_re[i] += yb[i];
            } else {
                next.walk.minus.push_back(pos + 1);
                next.walk.qwt_deg += ctx.deg[pos];
                for (size_t i = 0; i < yb.size(); ++i) next.walk.qwt_re[i] += yb[i];
            }
            walk_dfs(ctx, filter, qbg, next, pos + 1, fn);
        }
    }
}

}  // namespace detail

/// Enumerate the walks of the given type starting at the finite element
/// sigma, optionally filtered to QB / reverse-QB walks. The callback sees
/// walks in depth-first order; collect_walks sorts them to binary-counter
/// order (mask ascending) for deterministic output.
template <typename Fn>
void enumerate_walks(const WalkContext& ctx, int sigma, WalkFilter filter, Fn&& fn) {
    const QuantumBruhatGraph* qbg =
        filter == WalkFilter::None ? nullptr : &qbg_for(*ctx.D);
    detail::WalkState st;
    st.y = AffineElement::finite(*ctx.D, ctx.word.pi.root_side, sigma) * ctx.word.pi;
    st.z = AffineElement::finite(*ctx.D, ctx.word.pi.root_side, sigma) * ctx.w;
    st.walk.qwt_re.assign(ctx.D->rank(), 0);
    st.walk.qwtstar_re.assign(ctx.D->rank(), 0);
    detail::walk_dfs(ctx, filter, qbg, st, 0, fn);
}

inline std::vector<AlcoveWalk> collect_walks(const WalkContext& ctx, int sigma,
                                             WalkFilter filter) {
    if (ctx.length() > 28)
        throw std::invalid_argument("walk enumeration: word longer than the supported cap");
    std::vector<AlcoveWalk> out;
    enumerate_walks(ctx, sigma, filter, [&](const AlcoveWalk& w) { out.push_back(w); });
    std::sort(out.begin(), out.end(),
              [](const AlcoveWalk& a, const AlcoveWalk& b) { return a.mask < b.mask; });
    return out;
}

}  // namespace macweyl
