#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "macweyl/weight.hpp"

namespace macweyl {

using Int = mpz_class;
using Rational = mpq_class;

enum class CartanType { A1, A2, A3, C2, G2 };
enum class Affinization { Untwisted, DualUntwisted };

inline std::string cartan_type_name(CartanType t) {
    switch (t) {
        case CartanType::A1: return "A1";
        case CartanType::A2: return "A2";
        case CartanType::A3: return "A3";
        case CartanType::C2: return "C2";
        case CartanType::G2: return "G2";
    }
    return "?";
}

inline CartanType cartan_type_from_string(const std::string& s) {
    if (s == "A1") return CartanType::A1;
    if (s == "A2") return CartanType::A2;
    if (s == "A3") return CartanType::A3;
    if (s == "C2") return CartanType::C2;
    if (s == "G2") return CartanType::G2;
    throw std::invalid_argument("unsupported Cartan type: " + s +
                                " (supported: A1 A2 A3 C2 G2)");
}

inline Affinization affinization_from_string(const std::string& s) {
    if (s == "u") return Affinization::Untwisted;
    if (s == "d") return Affinization::DualUntwisted;
    throw std::invalid_argument("unsupported affinization: " + s + " (use u or d)");
}

inline bool simply_laced(CartanType t) {
    return t == CartanType::A1 || t == CartanType::A2 || t == CartanType::A3;
}

/// One root, seen simultaneously inside Delta(X) and inside the auxiliary
/// system Delta(Y) under the shared indexing (for the untwisted affinization
/// the Y-root with the same index is the coroot of the X-root).
struct RootInfo {
    std::vector<int> x_coords;    // in simple roots of Delta(X)
    std::vector<int> x_coroot;    // coroot in simple coroots of Delta(X)
    std::vector<int> x_fw;        // fundamental-weight coordinates (X)
    std::vector<int> y_coords;    // in simple roots of Delta(Y)
    std::vector<int> y_coroot;    // coroot of the Y-root in simple Y-coroots
    int x_d = 1;                  // (alpha,alpha)/2, short = 1
    int y_d = 1;
    int x_height = 0;
    int y_height = 0;
    bool positive = false;
    int negative = -1;            // index of the opposite root
    int reflection = -1;          // Weyl group element id of s_alpha
};

/// The finite Weyl group as lookup tables (|W| <= 24 at the supported ranks).
struct WeylGroup {
    int rank = 0;
    int size = 0;
    int id = 0;
    int w0 = 0;
    std::vector<std::vector<int>> x_mat;   // action on X fundamental-weight coords
    std::vector<std::vector<int>> y_mat;   // action on Y fundamental-weight coords
    std::vector<std::vector<int>> perm;    // action on the root index set
    std::vector<int> length;
    std::vector<std::vector<int>> word;    // shortlex reduced word (1-based letters)
    std::vector<int> inverse;
    std::vector<std::vector<int>> product; // product[g][h] = gh

    int mult(int g, int h) const { return product[g][h]; }
    int inv(int g) const { return inverse[g]; }
    int gen(int i) const { return simple_[i - 1]; }  // i in 1..rank

    std::vector<int> apply(const std::vector<int>& mat, const std::vector<int>& v) const {
        std::vector<int> r(rank, 0);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) r[i] += mat[i * rank + j] * v[j];
        return r;
    }

    std::string name(int g) const {
        if (g == id) return "id";
        std::string s;
        for (int i : word[g]) s += "s" + std::to_string(i);
        return s;
    }

    std::vector<int> simple_;  // element ids of the simple reflections
};

struct AffineRoot;  // defined in affine_weyl.hpp

/// Descriptor of one affinized system (X-tilde or Y-tilde): which finite
/// roots appear as real parts, which lattice translates, and the data of the
/// affine simple reflection s_0.
struct AffineRootSystem {
    LatticeTag root_side = LatticeTag::X;         // lattice of the real parts
    LatticeTag translation_side = LatticeTag::Y;  // lattice of the translations
    int stride = 1;                               // long real parts need deg in stride*Z
    int alpha0_re = -1;                           // root index of Re(alpha_0) (negative root)
    int phi = -1;                                 // positive root index with alpha_0 = -phi + delta
    Weight s0_translation;                        // translation part of s_0
    int s0_reflection = -1;                       // finite part of s_0
};

/// Everything derived from a Cartan type and a choice of affinization:
/// the finite root system, the auxiliary system Delta(Y-tilde), the pairing
/// (.,.) : X x Y -> (1/e) Z, and the finite Weyl group tables.
class RootDatum {
public:
    static const RootDatum& get(CartanType t, Affinization k);

    CartanType type() const { return type_; }
    Affinization kind() const { return kind_; }
    int rank() const { return rank_; }
    int e() const { return e_; }
    int two_e() const { return 2 * e_; }

    const WeylGroup& weyl() const { return w_; }
    const std::vector<RootInfo>& roots() const { return roots_; }
    int num_positive() const { return num_positive_; }
    int negative(int r) const { return roots_[r].negative; }
    bool positive(int r) const { return roots_[r].positive; }

    const std::vector<std::vector<int>>& cartan() const { return A_; }
    const std::vector<int>& d_values() const { return d_; }

    int theta() const { return theta_; }        // dominant long root (X)
    int vartheta() const { return vartheta_; }  // dominant short root (X)
    int simple_root_index(int i) const { return simple_idx_[i - 1]; }  // i in 1..rank
    const std::vector<int>& two_rho_y_coroot() const { return two_rho_y_coroot_; }

    const AffineRootSystem& xside() const { return xside_; }
    const AffineRootSystem& yside() const { return yside_; }
    const AffineRootSystem& side(LatticeTag root_side) const {
        return root_side == LatticeTag::X ? xside_ : yside_;
    }

    Weight rho(LatticeTag tag) const { return Weight(tag, std::vector<int>(rank_, 1)); }

    Weight fundamental_weight(LatticeTag tag, int i) const {
        Weight w = Weight::zero(tag, rank_);
        w.c[i - 1] = 1;
        return w;
    }

    Weight simple_root_weight(LatticeTag tag, int i) const {
        const auto& M = (tag == LatticeTag::X) ? A_ : ay_;
        std::vector<int> c(rank_);
        for (int j = 0; j < rank_; ++j) c[j] = M[j][i - 1];
        return Weight(tag, c);
    }

    /// Fundamental-weight coordinates of a root on the given side.
    Weight root_as_weight(LatticeTag tag, int r) const {
        const auto& info = roots_[r];
        const auto& coords = (tag == LatticeTag::X) ? info.x_coords : info.y_coords;
        const auto& M = (tag == LatticeTag::X) ? A_ : ay_;
        std::vector<int> c(rank_, 0);
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) c[j] += M[j][i] * coords[i];
        return Weight(tag, c);
    }

    Weight act(int g, const Weight& w) const {
        return Weight(w.tag, w_.apply(w.tag == LatticeTag::X ? w_.x_mat[g] : w_.y_mat[g], w.c));
    }

    int act_root(int g, int r) const { return w_.perm[g][r]; }

    /// <alpha^vee, mu> for a root on the given side and a weight of that side.
    int coroot_pairing(LatticeTag tag, int r, const Weight& mu) const {
        if (mu.tag != tag) throw std::invalid_argument("coroot_pairing: lattice mismatch");
        const auto& cr = (tag == LatticeTag::X) ? roots_[r].x_coroot : roots_[r].y_coroot;
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += cr[i] * mu.c[i];
        return s;
    }

    /// (x, b) for x in X and b a Y-root: always an integer.
    int pair_xweight_yroot(const Weight& x, int yroot) const {
        if (x.tag != LatticeTag::X) throw std::invalid_argument("expected an X-weight");
        const auto& b = roots_[yroot].y_coords;
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += pair_coeff_[i] * b[i] * x.c[i];
        return s;
    }

    /// (a, y) for an X-root a and y in Y: always an integer.
    int pair_xroot_yweight(int xroot, const Weight& y) const {
        if (y.tag != LatticeTag::Y) throw std::invalid_argument("expected a Y-weight");
        const auto& a = roots_[xroot].x_coords;
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += pair_coeff_[i] * a[i] * y.c[i];
        return s;
    }

    /// 2e * (x, y) for x in X, y in Y.
    int pairing_2e(const Weight& x, const Weight& y) const {
        if (x.tag != LatticeTag::X || y.tag != LatticeTag::Y)
            throw std::invalid_argument("pairing_2e expects (X, Y) weights");
        long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long>(p2e_[i][j]) * x.c[i] * y.c[j];
        return static_cast<int>(s);
    }

    /// <2 rho^{vee Y}, alpha> for a Y-root alpha: twice its height.
    int two_rho_y_pairing_root(int yroot) const { return 2 * roots_[yroot].y_height; }

    /// <2 rho^{vee Y}, mu> for mu in Y.
    int two_rho_y_pairing(const Weight& mu) const {
        if (mu.tag != LatticeTag::Y) throw std::invalid_argument("expected a Y-weight");
        int s = 0;
        for (int i = 0; i < rank_; ++i) s += two_rho_y_coroot_[i] * mu.c[i];
        return s;
    }

    /// The antidominant representative of the W-orbit of lambda.
    Weight antidominant(const Weight& lambda) const {
        Weight w = lambda;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 1; i <= rank_; ++i) {
                if (w.c[i - 1] > 0) {
                    w = act(w_.gen(i), w);
                    changed = true;
                }
            }
        }
        return w;
    }

    /// The minimal-length sigma with sigma(lambda) antidominant.
    int sigma_lambda(const Weight& lambda) const {
        Weight target = antidominant(lambda);
        int best = -1;
        for (int g = 0; g < w_.size; ++g) {
            if (act(g, lambda) == target) {
                if (best < 0 || w_.length[g] < w_.length[best]) best = g;
            }
        }
        return best;
    }

    /// The reflection s_alpha as a finite Weyl group element.
    int reflection(int root) const { return roots_[root].reflection; }

    /// Generators of the affine nilpotent subalgebra attached to a positive
    /// root: f_{-alpha} (x) t and e_alpha (x) 1.
    struct CurrentGenerator {
        enum Kind { FT, E1 } kind;
        int root;  // positive root index

        /// The affine root naturally attached to the generator:
        /// -alpha + delta for FT, alpha for E1.
        std::pair<int, int> attached_root(const RootDatum& D) const {
            return kind == FT ? std::make_pair(D.negative(root), 1) : std::make_pair(root, 0);
        }
        bool operator==(const CurrentGenerator& o) const {
            return kind == o.kind && root == o.root;
        }
    };

    /// The four-case table defining hat-sigma on generators.
    CurrentGenerator hat_sigma_generator(int sigma, const CurrentGenerator& g) const {
        if (!positive(g.root))
            throw std::invalid_argument("hat_sigma: generator root must be positive");
        int img = act_root(sigma, g.root);
        bool img_positive = positive(img);
        if (g.kind == CurrentGenerator::FT)
            return img_positive ? CurrentGenerator{CurrentGenerator::FT, img}
                                : CurrentGenerator{CurrentGenerator::E1, negative(img)};
        return img_positive ? CurrentGenerator{CurrentGenerator::E1, img}
                            : CurrentGenerator{CurrentGenerator::FT, negative(img)};
    }

    /// hat-sigma on the affine roots {-alpha + delta, alpha : alpha positive},
    /// returned as (root index, delta degree). Input degree must be 0 (alpha)
    /// or 1 with a negative real part (-alpha + delta).
    std::pair<int, int> hat_sigma_root(int sigma, int root, int deg) const {
        int pos = positive(root) ? root : negative(root);
        if (deg == 0) {
            if (!positive(root)) throw std::invalid_argument("hat_sigma: alpha must be positive");
            int img = act_root(sigma, root);
            return positive(img) ? std::make_pair(img, 0) : std::make_pair(img, 1);
        }
        if (deg == 1 && !positive(root)) {
            int img = act_root(sigma, pos);  // sigma(alpha)
            if (positive(img)) return {negative(img), 1};  // -sigma(alpha) + delta
            return {negative(img), 0};                     // -sigma(alpha)
        }
        throw std::invalid_argument("hat_sigma: root must be alpha or -alpha + delta");
    }

    std::string describe() const {
        return cartan_type_name(type_) + std::string("(") +
               (kind_ == Affinization::Untwisted ? "u" : "d") + ")";
    }

private:
    RootDatum(CartanType t, Affinization k) { build(t, k); }

    void build(CartanType t, Affinization k);

    CartanType type_;
    Affinization kind_;
    int rank_ = 0;
    int e_ = 1;
    int num_positive_ = 0;
    std::vector<std::vector<int>> A_;    // Cartan matrix of Delta(X)
    std::vector<std::vector<int>> ay_;   // Cartan matrix of Delta(Y)
    std::vector<int> d_;                 // (alpha_i, alpha_i)/2 for Delta(X)
    std::vector<int> pair_coeff_;        // (x, b) = sum_i pair_coeff_[i] b_i x_i
    std::vector<std::vector<int>> p2e_;  // 2e * (omega_i^X, omega_j^Y)
    std::vector<RootInfo> roots_;
    std::vector<int> two_rho_y_coroot_;
    std::vector<int> simple_idx_;
    int theta_ = -1;
    int vartheta_ = -1;
    WeylGroup w_;
    AffineRootSystem xside_;
    AffineRootSystem yside_;
};

namespace detail {

struct CartanSeed {
    int rank;
    std::vector<std::vector<int>> A;
    std::vector<int> d;
};

inline CartanSeed cartan_seed(CartanType t) {
    switch (t) {
        case CartanType::A1: return {1, {{2}}, {1}};
        case CartanType::A2: return {2, {{2, -1}, {-1, 2}}, {1, 1}};
        case CartanType::A3: return {3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
        case CartanType::C2: return {2, {{2, -2}, {-1, 2}}, {1, 2}};
        case CartanType::G2: return {2, {{2, -3}, {-1, 2}}, {1, 3}};
    }
    throw std::invalid_argument("unsupported Cartan type");
}

/// s_i acting on root coordinates of the system with Cartan matrix A.
inline std::vector<int> reflect_root_coords(const std::vector<std::vector<int>>& A, int i,
                                            std::vector<int> b) {
    int n = static_cast<int>(b.size());
    int pairing = 0;
    for (int j = 0; j < n; ++j) pairing += A[i][j] * b[j];
    b[i] -= pairing;
    return b;
}

inline std::vector<std::vector<Rational>> invert_matrix(const std::vector<std::vector<int>>& A) {
    int n = static_cast<int>(A.size());
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = A[i][j];
        m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) throw std::logic_error("singular Cartan matrix");
        std::swap(m[col], m[pivot]);
        Rational p = m[col][col];
        for (int j = 0; j < 2 * n; ++j) m[col][j] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

}  // namespace detail

inline void RootDatum::build(CartanType t, Affinization k) {
    using detail::cartan_seed;
    using detail::reflect_root_coords;

    type_ = t;
    kind_ = k;
    auto seed = cartan_seed(t);
    rank_ = seed.rank;
    A_ = seed.A;
    d_ = seed.d;

    const bool dual = (k == Affinization::DualUntwisted);
    // Cartan matrix of Delta(Y): transpose for the dual system, same for (d).
    ay_.assign(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) ay_[i][j] = dual ? A_[i][j] : A_[j][i];

    pair_coeff_.resize(rank_);
    for (int i = 0; i < rank_; ++i) pair_coeff_[i] = dual ? d_[i] : 1;

    // ---- positive roots by reflection closure -------------------------------
    std::vector<std::vector<int>> pos;
    {
        std::map<std::vector<int>, bool> seen;
        std::vector<std::vector<int>> queue;
        for (int i = 0; i < rank_; ++i) {
            std::vector<int> b(rank_, 0);
            b[i] = 1;
            queue.push_back(b);
            seen[b] = true;
        }
        while (!queue.empty()) {
            auto b = queue.back();
            queue.pop_back();
            pos.push_back(b);
            for (int i = 0; i < rank_; ++i) {
                auto nb = reflect_root_coords(A_, i, b);
                bool negative = std::any_of(nb.begin(), nb.end(), [](int x) { return x < 0; });
                if (!negative && !seen.count(nb)) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
        std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
            int ha = std::accumulate(a.begin(), a.end(), 0);
            int hb = std::accumulate(b.begin(), b.end(), 0);
            if (ha != hb) return ha < hb;
            return a < b;
        });
    }
    num_positive_ = static_cast<int>(pos.size());
    roots_.assign(2 * num_positive_, RootInfo{});
    const int dmax = *std::max_element(d_.begin(), d_.end());

    auto norm_half = [&](const std::vector<int>& b) {
        long s = 0;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                s += static_cast<long>(b[i]) * b[j] * d_[i] * A_[i][j];
        if (s % 2 != 0) throw std::logic_error("odd root norm");
        return static_cast<int>(s / 2);
    };

    for (int p = 0; p < num_positive_; ++p) {
        for (int sign = 0; sign < 2; ++sign) {
            int idx = p + sign * num_positive_;
            RootInfo& r = roots_[idx];
            r.x_coords = pos[p];
            if (sign) for (int& x : r.x_coords) x = -x;
            r.positive = (sign == 0);
            r.negative = p + (1 - sign) * num_positive_;
            r.x_d = norm_half(pos[p]);
            r.x_height = std::accumulate(r.x_coords.begin(), r.x_coords.end(), 0);
            // coroot: alpha^vee = sum_i b_i (d_i / d_alpha) alpha_i^vee
            r.x_coroot.resize(rank_);
            for (int i = 0; i < rank_; ++i) {
                int num = r.x_coords[i] * d_[i];
                if (num % r.x_d != 0) throw std::logic_error("non-integral coroot");
                r.x_coroot[i] = num / r.x_d;
            }
            r.x_fw.resize(rank_);
            for (int j = 0; j < rank_; ++j) {
                r.x_fw[j] = 0;
                for (int i = 0; i < rank_; ++i) r.x_fw[j] += A_[j][i] * r.x_coords[i];
            }
            // the Y-root of the same index: dual for (u), identical for (d)
            r.y_coords = dual ? r.x_coords : r.x_coroot;
            r.y_coroot = dual ? r.x_coroot : r.x_coords;
            r.y_d = dual ? r.x_d : dmax / r.x_d;
            r.y_height = std::accumulate(r.y_coords.begin(), r.y_coords.end(), 0);
        }
    }

    simple_idx_.assign(rank_, -1);
    for (int p = 0; p < num_positive_; ++p) {
        if (roots_[p].x_height == 1) {
            for (int i = 0; i < rank_; ++i)
                if (roots_[p].x_coords[i] == 1) simple_idx_[i] = p;
        }
    }

    // dominant long and short roots
    for (int p = 0; p < num_positive_; ++p) {
        const RootInfo& r = roots_[p];
        bool dom = std::all_of(r.x_fw.begin(), r.x_fw.end(), [](int x) { return x >= 0; });
        if (!dom) continue;
        if (r.x_d == dmax) theta_ = p;
        if (r.x_d == 1) vartheta_ = p;
    }
    if (theta_ < 0 || vartheta_ < 0) throw std::logic_error("missing dominant root");

    // ---- Weyl group ---------------------------------------------------------
    {
        auto flat = [&](const std::vector<std::vector<int>>& m) {
            std::vector<int> f(rank_ * rank_, 0);
            for (int i = 0; i < rank_; ++i)
                for (int j = 0; j < rank_; ++j) f[i * rank_ + j] = m[i][j];
            return f;
        };
        auto matmul = [&](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> c(rank_ * rank_, 0);
            for (int i = 0; i < rank_; ++i)
                for (int kk = 0; kk < rank_; ++kk)
                    for (int j = 0; j < rank_; ++j)
                        c[i * rank_ + j] += a[i * rank_ + kk] * b[kk * rank_ + j];
            return c;
        };

        // generator matrices: (s_i lambda)_j = lambda_j - A[j][i] lambda_i
        std::vector<std::vector<int>> gen_x(rank_), gen_y(rank_), gen_perm(rank_);
        for (int i = 0; i < rank_; ++i) {
            std::vector<std::vector<int>> mx(rank_, std::vector<int>(rank_, 0));
            std::vector<std::vector<int>> my(rank_, std::vector<int>(rank_, 0));
            for (int a = 0; a < rank_; ++a) {
                mx[a][a] = 1;
                my[a][a] = 1;
                mx[a][i] -= A_[a][i];
                my[a][i] -= ay_[a][i];
            }
            gen_x[i] = flat(mx);
            gen_y[i] = flat(my);
            gen_perm[i].resize(2 * num_positive_);
            for (int r = 0; r < 2 * num_positive_; ++r) {
                auto img = reflect_root_coords(A_, i, roots_[r].x_coords);
                int found = -1;
                for (int s = 0; s < 2 * num_positive_; ++s)
                    if (roots_[s].x_coords == img) { found = s; break; }
                if (found < 0) throw std::logic_error("reflection left the root system");
                gen_perm[i][r] = found;
            }
        }

        std::vector<int> idmat(rank_ * rank_, 0);
        for (int i = 0; i < rank_; ++i) idmat[i * rank_ + i] = 1;
        std::map<std::vector<int>, int> index;
        w_.rank = rank_;
        w_.x_mat = {idmat};
        std::vector<int> idperm(2 * num_positive_);
        std::iota(idperm.begin(), idperm.end(), 0);
        w_.perm = {idperm};
        std::vector<int> idy(rank_ * rank_, 0);
        for (int i = 0; i < rank_; ++i) idy[i * rank_ + i] = 1;
        w_.y_mat = {idy};
        w_.word = {{}};
        w_.length = {0};
        index[idmat] = 0;

        for (size_t g = 0; g < w_.x_mat.size(); ++g) {
            for (int i = 0; i < rank_; ++i) {
                auto nm = matmul(w_.x_mat[g], gen_x[i]);
                if (index.count(nm)) continue;
                int idx = static_cast<int>(w_.x_mat.size());
                index[nm] = idx;
                w_.x_mat.push_back(nm);
                w_.y_mat.push_back(matmul(w_.y_mat[g], gen_y[i]));
                std::vector<int> perm(2 * num_positive_);
                for (int r = 0; r < 2 * num_positive_; ++r)
                    perm[r] = w_.perm[g][gen_perm[i][r]];
                w_.perm.push_back(perm);
                auto word = w_.word[g];
                word.push_back(i + 1);
                w_.word.push_back(word);
                w_.length.push_back(static_cast<int>(word.size()));
            }
        }
        w_.size = static_cast<int>(w_.x_mat.size());
        w_.simple_.resize(rank_);
        for (int i = 0; i < rank_; ++i) w_.simple_[i] = index.at(gen_x[i]);

        w_.product.assign(w_.size, std::vector<int>(w_.size, 0));
        for (int g = 0; g < w_.size; ++g)
            for (int h = 0; h < w_.size; ++h)
                w_.product[g][h] = index.at(matmul(w_.x_mat[g], w_.x_mat[h]));
        w_.inverse.assign(w_.size, -1);
        for (int g = 0; g < w_.size; ++g)
            for (int h = 0; h < w_.size; ++h)
                if (w_.product[g][h] == 0) { w_.inverse[g] = h; break; }
        w_.w0 = 0;
        for (int g = 0; g < w_.size; ++g)
            if (w_.length[g] > w_.length[w_.w0]) w_.w0 = g;

        // reflections: build the matrix of s_alpha on X-fw coordinates and
        // look it up: (s_alpha x)_j = x_j - <alpha^vee, x> * fw(alpha)_j
        for (int p = 0; p < num_positive_; ++p) {
            std::vector<int> m(rank_ * rank_, 0);
            for (int j = 0; j < rank_; ++j)
                for (int kcol = 0; kcol < rank_; ++kcol)
                    m[j * rank_ + kcol] =
                        (j == kcol ? 1 : 0) - roots_[p].x_fw[j] * roots_[p].x_coroot[kcol];
            auto it = index.find(m);
            if (it == index.end()) throw std::logic_error("missing reflection");
            roots_[p].reflection = it->second;
            roots_[roots_[p].negative].reflection = it->second;
        }
    }

    // recompute lengths from the geometric definition as a safety net
    for (int g = 0; g < w_.size; ++g) {
        int inv = 0;
        for (int r = 0; r < num_positive_; ++r)
            if (!roots_[w_.perm[g][r]].positive) ++inv;
        if (inv != w_.length[g]) throw std::logic_error("length table mismatch");
    }

    // ---- pairing matrix and e ----------------------------------------------
    {
        auto ainv = detail::invert_matrix(A_);
        std::vector<std::vector<Rational>> P(rank_, std::vector<Rational>(rank_));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                P[i][j] = dual ? Rational(d_[i]) * ainv[i][j] : ainv[j][i];
        long lcm = 1;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) {
                long den = P[i][j].get_den().get_si();
                lcm = std::lcm(lcm, den);
            }
        e_ = static_cast<int>(lcm);
        p2e_.assign(rank_, std::vector<int>(rank_, 0));
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) {
                Rational v = P[i][j] * 2 * e_;
                if (v.get_den() != 1) throw std::logic_error("pairing not in (1/e)Z");
                p2e_[i][j] = static_cast<int>(v.get_num().get_si());
            }
    }

    // ---- 2 rho^{vee Y} in Y-coroot coordinates ------------------------------
    two_rho_y_coroot_.assign(rank_, 0);
    for (int p = 0; p < num_positive_; ++p)
        for (int i = 0; i < rank_; ++i) two_rho_y_coroot_[i] += roots_[p].y_coroot[i];

    // ---- the two affinized systems ------------------------------------------
    xside_.root_side = LatticeTag::X;
    xside_.translation_side = LatticeTag::Y;
    xside_.stride = dual ? dmax : 1;
    xside_.phi = dual ? vartheta_ : theta_;
    xside_.alpha0_re = roots_[xside_.phi].negative;
    xside_.s0_reflection = roots_[xside_.phi].reflection;
    {
        // translation y0 in Y with (x, y0) = <phi^vee, x>: the coroot of phi
        // for (u), phi itself for (d).
        const RootInfo& phi = roots_[xside_.phi];
        std::vector<int> coords = dual ? phi.x_coords : phi.x_coroot;
        // convert root coordinates of Delta(Y) to Y fundamental-weight coords
        std::vector<int> c(rank_, 0);
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) c[j] += ay_[j][i] * coords[i];
        xside_.s0_translation = Weight(LatticeTag::Y, c);
    }

    yside_.root_side = LatticeTag::Y;
    yside_.translation_side = LatticeTag::X;
    yside_.stride = dual ? dmax : 1;
    // (u): alpha_0^Y = -theta^Y + delta, theta^Y = (vartheta^X)^vee;
    // (d): alpha_0^Y = alpha_0^X = -vartheta^X + delta. Shared index: vartheta.
    yside_.phi = vartheta_;
    yside_.alpha0_re = roots_[vartheta_].negative;
    yside_.s0_reflection = roots_[vartheta_].reflection;
    {
        // translation x0 in X with (x0, b) matching <phi^vee, .>: vartheta^X.
        const RootInfo& phi = roots_[vartheta_];
        std::vector<int> c(rank_, 0);
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) c[j] += A_[j][i] * phi.x_coords[i];
        yside_.s0_translation = Weight(LatticeTag::X, c);
    }
}

inline const RootDatum& RootDatum::get(CartanType t, Affinization k) {
    static std::map<std::pair<int, int>, const RootDatum*> cache;
    auto key = std::make_pair(static_cast<int>(t), static_cast<int>(k));
    auto it = cache.find(key);
    if (it == cache.end()) {
        const RootDatum* d = new RootDatum(t, k);
        it = cache.emplace(key, d).first;
    }
    return *it->second;
}

}  // namespace macweyl
