#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "macweyl/root_data.hpp"
#include "macweyl/weight.hpp"

namespace macweyl {

/// Real affine root alpha + m*delta of one of the two affinized systems;
/// the side tag names the system the real part belongs to.
struct AffineRoot {
    LatticeTag side = LatticeTag::Y;
    int root = -1;  // index into RootDatum::roots()
    int deg = 0;

    bool operator==(const AffineRoot& o) const {
        return side == o.side && root == o.root && deg == o.deg;
    }
    bool operator<(const AffineRoot& o) const {
        if (side != o.side) return side < o.side;
        if (root != o.root) return root < o.root;
        return deg < o.deg;
    }
};

inline bool affine_root_valid(const RootDatum& D, const AffineRoot& b) {
    const auto& s = D.side(b.side);
    int d = (b.side == LatticeTag::X) ? D.roots()[b.root].x_d : D.roots()[b.root].y_d;
    if (d > 1 && s.stride > 1) return b.deg % s.stride == 0;
    return true;
}

inline bool affine_root_positive(const RootDatum& D, const AffineRoot& b) {
    return b.deg > 0 || (b.deg == 0 && D.positive(b.root));
}

inline AffineRoot affine_root_negate(const RootDatum& D, const AffineRoot& b) {
    return AffineRoot{b.side, D.negative(b.root), -b.deg};
}

/// Element w = t_wt * dir of an extended affine Weyl group. Elements of
/// W(X-tilde) translate by Y and act on X-side affine roots; elements of
/// W(Y-tilde) translate by X and act on Y-side roots.
struct AffineElement {
    const RootDatum* D = nullptr;
    LatticeTag root_side = LatticeTag::Y;  // side of the roots it acts on
    Weight wt;                             // translation part (opposite lattice)
    int dir = 0;                           // finite Weyl part

    static AffineElement identity(const RootDatum& D, LatticeTag root_side) {
        AffineElement e;
        e.D = &D;
        e.root_side = root_side;
        e.wt = Weight::zero(D.side(root_side).translation_side, D.rank());
        e.dir = D.weyl().id;
        return e;
    }

    static AffineElement translation(const RootDatum& D, LatticeTag root_side, const Weight& mu) {
        AffineElement e = identity(D, root_side);
        if (mu.tag != e.wt.tag) throw std::invalid_argument("translation weight on wrong lattice");
        e.wt = mu;
        return e;
    }

    static AffineElement finite(const RootDatum& D, LatticeTag root_side, int g) {
        AffineElement e = identity(D, root_side);
        e.dir = g;
        return e;
    }

    /// Simple reflection s_i, i in {0, 1, ..., rank}.
    static AffineElement simple(const RootDatum& D, LatticeTag root_side, int i) {
        if (i == 0) {
            const auto& s = D.side(root_side);
            AffineElement e = identity(D, root_side);
            e.wt = s.s0_translation;
            e.dir = s.s0_reflection;
            return e;
        }
        return finite(D, root_side, D.weyl().gen(i));
    }

    bool is_identity() const { return dir == D->weyl().id && wt.is_zero(); }

    friend AffineElement operator*(const AffineElement& a, const AffineElement& b) {
        if (a.D != b.D || a.root_side != b.root_side)
            throw std::invalid_argument("affine element mismatch");
        AffineElement r = a;
        r.wt = a.wt + a.D->act(a.dir, b.wt);
        r.dir = a.D->weyl().mult(a.dir, b.dir);
        return r;
    }

    AffineElement inverse() const {
        AffineElement r = *this;
        r.dir = D->weyl().inv(dir);
        r.wt = -(D->act(r.dir, wt));
        return r;
    }

    /// (x, sigma) . (b + m delta) = sigma(b) + (m - (x, sigma(b))) delta.
    AffineRoot act(const AffineRoot& b) const {
        if (b.side != root_side)
            throw std::invalid_argument("affine root belongs to the other system");
        int img = D->act_root(dir, b.root);
        int pairing = (root_side == LatticeTag::Y) ? D->pair_xweight_yroot(wt, img)
                                                   : D->pair_xroot_yweight(img, wt);
        return AffineRoot{b.side, img, b.deg - pairing};
    }

    bool operator==(const AffineElement& o) const {
        return root_side == o.root_side && dir == o.dir && wt == o.wt;
    }
    bool operator!=(const AffineElement& o) const { return !(*this == o); }
    bool operator<(const AffineElement& o) const {
        if (dir != o.dir) return dir < o.dir;
        return wt.c < o.wt.c;
    }

    std::string str() const {
        return "t" + wt.str() + "*" + D->weyl().name(dir);
    }
};

/// The affine simple root alpha_i of the given side.
inline AffineRoot affine_simple_root(const RootDatum& D, LatticeTag side, int i) {
    if (i == 0) return AffineRoot{side, D.side(side).alpha0_re, 1};
    return AffineRoot{side, D.simple_root_index(i), 0};
}

/// Right descent: w(alpha_i) is a negative affine root.
inline bool descent(const AffineElement& w, int i) {
    return !affine_root_positive(*w.D, w.act(affine_simple_root(*w.D, w.root_side, i)));
}

struct ReducedWord {
    AffineElement pi;          // length-zero residue
    std::vector<int> letters;  // over {0, 1, ..., rank}

    AffineElement evaluate() const {
        AffineElement w = pi;
        for (int i : letters) w = w * AffineElement::simple(*pi.D, pi.root_side, i);
        return w;
    }
};

/// Greedy right-descent peeling; ties broken toward the smallest index.
/// The residue must have no descents left, i.e. be a length-zero element.
inline ReducedWord reduced_word(const AffineElement& w) {
    ReducedWord out;
    AffineElement x = w;
    std::vector<int> rev;
    const int rank = w.D->rank();
    for (;;) {
        int found = -1;
        for (int i = 0; i <= rank; ++i) {
            if (descent(x, i)) { found = i; break; }
        }
        if (found < 0) break;
        rev.push_back(found);
        x = x * AffineElement::simple(*w.D, w.root_side, found);
    }
    out.pi = x;
    out.letters.assign(rev.rbegin(), rev.rend());
    return out;
}

inline int length(const AffineElement& w) {
    return static_cast<int>(reduced_word(w).letters.size());
}

/// beta_j = s_{i_l} ... s_{i_{j+1}} (alpha_{i_j}); as a set this is Inv(w).
inline std::vector<AffineRoot> beta_sequence(const ReducedWord& word) {
    const RootDatum& D = *word.pi.D;
    LatticeTag side = word.pi.root_side;
    int l = static_cast<int>(word.letters.size());
    std::vector<AffineRoot> betas(l, AffineRoot{});
    AffineElement suffix = AffineElement::identity(D, side);
    for (int j = l - 1; j >= 0; --j) {
        betas[j] = suffix.act(affine_simple_root(D, side, word.letters[j]));
        suffix = suffix * AffineElement::simple(D, side, word.letters[j]);
    }
    return betas;
}

/// The reflections s_{beta_j} (elements of the affine group, no pi part).
inline std::vector<AffineElement> beta_reflections(const ReducedWord& word) {
    const RootDatum& D = *word.pi.D;
    LatticeTag side = word.pi.root_side;
    int l = static_cast<int>(word.letters.size());
    std::vector<AffineElement> refs(l, AffineElement::identity(D, side));
    AffineElement suffix = AffineElement::identity(D, side);
    for (int j = l - 1; j >= 0; --j) {
        AffineElement s = AffineElement::simple(D, side, word.letters[j]);
        refs[j] = suffix * s * suffix.inverse();
        suffix = suffix * s;
    }
    return refs;
}

/// Inversion set computed from a reduced word, validated against positivity.
inline std::set<AffineRoot> inversion_set(const AffineElement& w) {
    auto word = reduced_word(w);
    auto betas = beta_sequence(word);
    std::set<AffineRoot> inv;
    for (const auto& b : betas) {
        if (!affine_root_positive(*w.D, b))
            throw std::logic_error("inversion_set: negative beta, word not reduced");
        if (!inv.insert(b).second)
            throw std::logic_error("inversion_set: repeated beta, word not reduced");
    }
    return inv;
}

/// Minimal coset representative of t_lambda W in W(Y-tilde). With
/// sigma_lambda the minimal element taking lambda to its antidominant
/// representative, the Bruhat-minimal element is m_lambda = t_lambda
/// sigma_lambda^{-1} (its direction part is sigma_lambda^{-1}); this is the
/// choice under which every Re(beta_j) of Inv(m_lambda) is a negative root.
inline AffineElement minimal_rep(const RootDatum& D, const Weight& lambda, int* sigma_out = nullptr) {
    if (lambda.tag != LatticeTag::X)
        throw std::invalid_argument("minimal_rep expects an X-weight");
    int sigma = D.sigma_lambda(lambda);
    if (sigma_out) *sigma_out = sigma;
    return AffineElement::translation(D, LatticeTag::Y, lambda) *
           AffineElement::finite(D, LatticeTag::Y, D.weyl().inv(sigma));
}

/// Bruhat order on the extended group: elements with different pi-components
/// are incomparable; within a component, the usual recursive criterion.
inline bool bruhat_leq(const AffineElement& u, const AffineElement& w) {
    auto wu = reduced_word(u);
    auto ww = reduced_word(w);
    if (!(wu.pi == ww.pi)) return false;
    // strip pi: compare pi^{-1} u <= pi^{-1} w inside the affine Coxeter group
    AffineElement a = wu.pi.inverse() * u;
    AffineElement b = ww.pi.inverse() * w;
    const int rank = u.D->rank();
    std::vector<std::pair<AffineElement, AffineElement>> stack{{a, b}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        int i = -1;
        for (int j = 0; j <= rank; ++j)
            if (descent(y, j)) { i = j; break; }
        if (i < 0) {
            // y is the identity: x <= y iff x is the identity
            if (!x.is_identity()) return false;
            continue;
        }
        AffineElement si = AffineElement::simple(*u.D, u.root_side, i);
        AffineElement ys = y * si;
        if (descent(x, i)) {
            stack.emplace_back(x * si, ys);
        } else {
            stack.emplace_back(x, ys);
        }
    }
    return true;
}

/// Partial order on X via the minimal representatives.
inline bool weight_leq(const RootDatum& D, const Weight& mu, const Weight& lambda) {
    return bruhat_leq(minimal_rep(D, mu), minimal_rep(D, lambda));
}

/// Bruhat order on the finite Weyl group.
inline bool finite_bruhat_leq(const RootDatum& D, int u, int w) {
    const WeylGroup& W = D.weyl();
    while (true) {
        if (u == w) return true;
        if (W.length[u] >= W.length[w]) return false;
        int i = -1;
        for (int j = 1; j <= D.rank(); ++j) {
            int img = W.perm[w][D.simple_root_index(j)];
            if (!D.positive(img)) { i = j; break; }
        }
        if (i < 0) return false;  // w = id handled by the checks above
        int si = W.gen(i);
        int ws = W.mult(w, si);
        int us = W.mult(u, si);
        if (!D.positive(W.perm[u][D.simple_root_index(i)])) u = us;
        w = ws;
    }
}

/// All reduced words of w (pi part shared), capped at `max_words`.
inline std::vector<ReducedWord> all_reduced_words(const AffineElement& w, size_t max_words) {
    std::vector<ReducedWord> out;
    std::vector<int> current;
    const int rank = w.D->rank();
    // peel descents in all possible orders (DFS)
    std::function<void(const AffineElement&)> go = [&](const AffineElement& x) {
        if (out.size() >= max_words) return;
        bool any = false;
        for (int i = 0; i <= rank && out.size() < max_words; ++i) {
            if (descent(x, i)) {
                any = true;
                current.push_back(i);
                go(x * AffineElement::simple(*w.D, w.root_side, i));
                current.pop_back();
            }
        }
        if (!any) {
            ReducedWord rw;
            rw.pi = x;
            rw.letters.assign(current.rbegin(), current.rend());
            out.push_back(rw);
        }
    };
    go(w);
    return out;
}

}  // namespace macweyl
