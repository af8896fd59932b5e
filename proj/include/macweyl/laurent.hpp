#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "macweyl/scalar.hpp"
#include "macweyl/weight.hpp"

namespace macweyl {

/// Finite linear combination of monomials X^lambda with CoefficientScalar
/// coefficients; lambda runs over a fixed lattice. Zero coefficients are
/// never stored, and terms are kept in lexicographic weight order.
class LaurentPolynomial {
public:
    using TermMap = std::map<std::vector<int>, CoefficientScalar>;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(LatticeTag tag, int rank) : tag_(tag), rank_(rank) {}

    static LaurentPolynomial zero(LatticeTag tag, int rank) {
        return LaurentPolynomial(tag, rank);
    }

    static LaurentPolynomial one(LatticeTag tag, int rank) {
        LaurentPolynomial p(tag, rank);
        p.add_term(Weight::zero(tag, rank), CoefficientScalar::one());
        return p;
    }

    static LaurentPolynomial monomial(const Weight& w, CoefficientScalar c) {
        LaurentPolynomial p(w.tag, w.rank());
        p.add_term(w, std::move(c));
        return p;
    }

    LatticeTag tag() const { return tag_; }
    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Weight weight_of(const TermMap::const_iterator& it) const {
        return Weight(tag_, it->first);
    }

    void add_term(const Weight& w, const CoefficientScalar& c) {
        if (w.tag != tag_ || w.rank() != rank_)
            throw std::invalid_argument("LaurentPolynomial: weight lattice mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(w.c);
        if (it == terms_.end()) {
            terms_.emplace(w.c, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CoefficientScalar coefficient(const Weight& w) const {
        auto it = terms_.find(w.c);
        return it == terms_.end() ? CoefficientScalar::zero() : it->second;
    }

    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(Weight(tag_, w), c);
        return *this;
    }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
        check_compatible(o);
        for (const auto& [w, c] : o.terms_) add_term(Weight(tag_, w), -c);
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a += b;
    }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) {
        return a -= b;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r(tag_, rank_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        a.check_compatible(b);
        LaurentPolynomial r(a.tag_, a.rank_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                std::vector<int> w(wa);
                for (size_t i = 0; i < w.size(); ++i) w[i] += wb[i];
                r.add_term(Weight(a.tag_, w), ca * cb);
            }
        return r;
    }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

    friend LaurentPolynomial operator*(const CoefficientScalar& s, const LaurentPolynomial& p) {
        LaurentPolynomial r(p.tag_, p.rank_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : p.terms_) r.add_term(Weight(p.tag_, w), s * c);
        return r;
    }

    /// Multiply every term by c * u^ue * X^shift.
    LaurentPolynomial shifted(const Weight& shift, const CoefficientScalar& c) const {
        LaurentPolynomial r(tag_, rank_);
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) {
            std::vector<int> nw(w);
            for (size_t i = 0; i < nw.size(); ++i) nw[i] += shift.c[i];
            r.add_term(Weight(tag_, nw), k * c);
        }
        return r;
    }

    bool operator==(const LaurentPolynomial& o) const {
        return tag_ == o.tag_ && rank_ == o.rank_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

    /// X^lambda -> X^-lambda together with u -> u^-1, v -> v^-1.
    LaurentPolynomial star() const {
        LaurentPolynomial r(tag_, rank_);
        for (const auto& [w, c] : terms_) {
            std::vector<int> nw(w);
            for (int& x : nw) x = -x;
            r.add_term(Weight(tag_, nw), c.star());
        }
        return r;
    }

    /// u -> u^-1 in every coefficient (q -> q^-1), X-monomials untouched.
    LaurentPolynomial invert_q() const {
        LaurentPolynomial r(tag_, rank_);
        for (const auto& [w, c] : terms_) r.add_term(Weight(tag_, w), c.invert_u());
        return r;
    }

    LaurentPolynomial specialize_v(bool at_infinity) const {
        LaurentPolynomial r(tag_, rank_);
        for (const auto& [w, c] : terms_)
            r.add_term(Weight(tag_, w), at_infinity ? c.at_v_infinity() : c.at_v_zero());
        return r;
    }

    /// Value at X = 1 (all monomials collapsed).
    CoefficientScalar sum_of_coefficients() const {
        CoefficientScalar s = CoefficientScalar::zero();
        for (const auto& [w, c] : terms_) s += c;
        return s;
    }

    /// Value at X = 1, q = 1, v = 1 (graded dimension of a character).
    Rational evaluate_at_one() const {
        Rational acc(0);
        for (const auto& [w, c] : terms_) acc += c.evaluate(1, 1);
        return acc;
    }

    std::string str(int two_e = 0) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            std::string cs = c.str(two_e);
            bool trivial_weight = true;
            for (int x : w) if (x != 0) trivial_weight = false;
            if (trivial_weight) {
                s += cs;
            } else {
                if (cs == "1") cs.clear();
                if (!cs.empty()) cs += "*";
                s += cs + "X^" + Weight(tag_, w).str();
            }
        }
        return s;
    }

private:
    void check_compatible(const LaurentPolynomial& o) const {
        if (tag_ != o.tag_ || rank_ != o.rank_)
            throw std::invalid_argument("LaurentPolynomial: lattice mismatch");
    }

    LatticeTag tag_ = LatticeTag::X;
    int rank_ = 0;
    TermMap terms_;
};

/// Exact division in the Laurent group ring (scalars form a field, so only
/// the monomial support can obstruct): throws when not exact.
inline LaurentPolynomial laurent_divexact(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("laurent_divexact: zero divisor");
    if (a.is_zero()) return LaurentPolynomial::zero(a.tag(), a.rank());
    const int n = a.rank();
    std::vector<int> amin(n), bmin(n);
    auto mins = [&](const LaurentPolynomial& p, std::vector<int>& m) {
        m.assign(n, 0);
        bool first = true;
        for (const auto& [w, c] : p.terms()) {
            for (int i = 0; i < n; ++i) m[i] = first ? w[i] : std::min(m[i], w[i]);
            first = false;
        }
    };
    mins(a, amin);
    mins(b, bmin);
    auto shift = [&](const LaurentPolynomial& p, const std::vector<int>& m, int sign) {
        LaurentPolynomial r(p.tag(), n);
        for (const auto& [w, c] : p.terms()) {
            std::vector<int> nw(w);
            for (int i = 0; i < n; ++i) nw[i] += sign * m[i];
            r.add_term(Weight(p.tag(), nw), c);
        }
        return r;
    };
    LaurentPolynomial rem = shift(a, amin, -1);
    LaurentPolynomial bs = shift(b, bmin, -1);
    LaurentPolynomial quot(a.tag(), n);
    const auto blead = std::prev(bs.terms().end());
    while (!rem.is_zero()) {
        auto rlead = std::prev(rem.terms().end());
        std::vector<int> dw(rlead->first);
        for (int i = 0; i < n; ++i) {
            dw[i] -= blead->first[i];
            if (dw[i] < 0) throw std::logic_error("laurent_divexact: not divisible");
        }
        CoefficientScalar q = rlead->second / blead->second;
        Weight qw(a.tag(), dw);
        quot.add_term(qw, q);
        rem -= bs.shifted(qw, q);
    }
    std::vector<int> back(n);
    for (int i = 0; i < n; ++i) back[i] = amin[i] - bmin[i];
    return shift(quot, back, +1);
}

}  // namespace macweyl
