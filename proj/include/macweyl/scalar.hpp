#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "macweyl/bivariate.hpp"

namespace macweyl {

/*
 * Exact rational function in u and v with integer coefficients, where u is a
 * fixed root of q (q = u^(2e) for the e of the ambient root datum).
 *
 * Canonical form:
 *   - zero is 0/1;
 *   - the denominator is an honest polynomial with min exponent 0 in each
 *     variable and positive lex-leading coefficient;
 *   - numerator and denominator have polynomial gcd 1 and coprime integer
 *     contents (the numerator keeps any monomial unit u^a v^b).
 * Equality of values is therefore structural equality of representations.
 */
class CoefficientScalar {
public:
    CoefficientScalar() : num_(BiPoly::zero()), den_(BiPoly::constant(1)) {}

    CoefficientScalar(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("CoefficientScalar: zero denominator");
        normalize();
    }

    explicit CoefficientScalar(BiPoly num) : num_(std::move(num)), den_(BiPoly::constant(1)) {
        normalize();
    }

    static CoefficientScalar zero() { return CoefficientScalar(); }
    static CoefficientScalar one() { return integer(1); }

    static CoefficientScalar integer(Int n) {
        return CoefficientScalar(BiPoly::constant(std::move(n)));
    }

    /// c * u^ue * v^ve
    static CoefficientScalar monomial(Int c, int ue, int ve) {
        return CoefficientScalar(BiPoly::monomial(std::move(c), ue, ve));
    }

    static CoefficientScalar u_power(int e) { return monomial(1, e, 0); }
    static CoefficientScalar v_power(int e) { return monomial(1, 0, e); }

    static CoefficientScalar rational(const Rational& r) {
        return CoefficientScalar(BiPoly::constant(r.get_num()),
                                 BiPoly::constant(r.get_den()));
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    /// True when the value is a Laurent polynomial (denominator is a positive
    /// integer constant; 1 after reduction against the numerator content).
    bool is_polynomial() const { return den_.is_constant(); }

    bool is_integer_polynomial() const { return den_.is_one(); }

    CoefficientScalar operator-() const {
        CoefficientScalar r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend CoefficientScalar operator+(const CoefficientScalar& a, const CoefficientScalar& b) {
        return add_sub(a, b, false);
    }

    friend CoefficientScalar operator-(const CoefficientScalar& a, const CoefficientScalar& b) {
        return add_sub(a, b, true);
    }

    friend CoefficientScalar operator*(const CoefficientScalar& a, const CoefficientScalar& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        // cross-reduce before multiplying to keep the normalization gcd small
        BiPoly na = a.num_, db = b.den_;
        cross_reduce(na, db);
        BiPoly nb = b.num_, da = a.den_;
        cross_reduce(nb, da);
        return CoefficientScalar(na * nb, da * db);
    }

    friend CoefficientScalar operator/(const CoefficientScalar& a, const CoefficientScalar& b) {
        if (b.is_zero()) throw std::domain_error("CoefficientScalar: division by zero");
        if (a.is_zero()) return zero();
        BiPoly na = a.num_, nb = b.num_;
        cross_reduce(na, nb);
        BiPoly da = a.den_, db = b.den_;
        cross_reduce(db, da);
        return CoefficientScalar(na * db, da * nb);
    }

    CoefficientScalar& operator+=(const CoefficientScalar& o) { return *this = *this + o; }
    CoefficientScalar& operator-=(const CoefficientScalar& o) { return *this = *this - o; }
    CoefficientScalar& operator*=(const CoefficientScalar& o) { return *this = *this * o; }
    CoefficientScalar& operator/=(const CoefficientScalar& o) { return *this = *this / o; }

    bool operator==(const CoefficientScalar& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const CoefficientScalar& o) const { return !(*this == o); }

    /// u -> u^-1, v -> v^-1; the coefficient-level piece of the * involution.
    CoefficientScalar star() const {
        return CoefficientScalar(num_.exponent_flip(), den_.exponent_flip());
    }

    /// u -> u^-1 only (q -> q^-1 at the scalar level).
    CoefficientScalar invert_u() const {
        BiPoly n, d;
        for (const auto& [e, c] : num_.terms()) n.add_term(c, -e.first, e.second);
        for (const auto& [e, c] : den_.terms()) d.add_term(c, -e.first, e.second);
        return CoefficientScalar(std::move(n), std::move(d));
    }

    /// Exact value at the point v = 0; throws if there is a pole there.
    CoefficientScalar at_v_zero() const {
        if (is_zero()) return zero();
        int on = num_.min_v();
        int od = den_.min_v();
        if (on < od)
            throw std::domain_error("specialize v=0: pole in coefficient (" + str() + ")");
        if (on > od) return zero();
        return CoefficientScalar(v_slice(num_, on), v_slice(den_, od));
    }

    /// Exact value at v = infinity, computed as the value of f(v -> 1/w) at
    /// w = 0.
    CoefficientScalar at_v_infinity() const {
        CoefficientScalar g;
        g.num_ = num_.v_flip();
        g.den_ = den_.v_flip();
        g.normalize();
        return g.at_v_zero();
    }

    bool v_free() const { return num_.min_v() == 0 && max_v(num_) == 0 &&
                                 den_.min_v() == 0 && max_v(den_) == 0; }

    Rational evaluate(const Rational& u, const Rational& v) const {
        Rational d = den_.evaluate(u, v);
        if (d == 0) throw std::domain_error("CoefficientScalar: evaluation hits pole");
        return num_.evaluate(u, v) / d;
    }

    /// Printable form; exponents of q are shown as multiples of 1/(2e) when a
    /// granularity is supplied.
    std::string str(int two_e = 0) const;

private:
    static void cross_reduce(BiPoly& x, BiPoly& y) {
        if (x.is_constant() && y.is_constant()) return;
        BiPoly g = bipoly_gcd(x, y);
        if (g.is_one() || g.is_constant()) return;
        x = bipoly_divexact(x, g);
        y = bipoly_divexact(y, g);
    }

    static CoefficientScalar add_sub(const CoefficientScalar& a, const CoefficientScalar& b,
                                     bool subtract) {
        if (a.is_zero()) return subtract ? -b : b;
        if (b.is_zero()) return a;
        // common-denominator fast paths: equality, divisibility, then gcd
        if (a.den_ == b.den_) {
            return CoefficientScalar(subtract ? a.num_ - b.num_ : a.num_ + b.num_, a.den_);
        }
        if (BiPoly q; bipoly_try_divexact(b.den_, a.den_, q)) {
            BiPoly num = subtract ? a.num_ * q - b.num_ : a.num_ * q + b.num_;
            return CoefficientScalar(std::move(num), b.den_);
        }
        if (BiPoly q; bipoly_try_divexact(a.den_, b.den_, q)) {
            BiPoly num = subtract ? a.num_ - b.num_ * q : a.num_ + b.num_ * q;
            return CoefficientScalar(std::move(num), a.den_);
        }
        BiPoly g = bipoly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            return CoefficientScalar(subtract ? a.num_ * b.den_ - b.num_ * a.den_
                                              : a.num_ * b.den_ + b.num_ * a.den_,
                                     a.den_ * b.den_);
        }
        BiPoly da = bipoly_divexact(a.den_, g);
        BiPoly db = bipoly_divexact(b.den_, g);
        BiPoly num = subtract ? a.num_ * db - b.num_ * da : a.num_ * db + b.num_ * da;
        return CoefficientScalar(std::move(num), a.den_ * db);
    }

    static int max_v(const BiPoly& p) {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : p.terms()) {
            if (first || e.second > m) m = e.second;
            first = false;
        }
        return m;
    }

    static BiPoly v_slice(const BiPoly& p, int ve) {
        BiPoly r;
        for (const auto& [e, c] : p.terms())
            if (e.second == ve) r.add_term(c, e.first, 0);
        return r;
    }

    void normalize() {
        if (num_.is_zero()) {
            den_ = BiPoly::constant(1);
            return;
        }
        // make the denominator an honest polynomial
        int du = den_.min_u(), dv = den_.min_v();
        den_ = den_.shifted(1, -du, -dv);
        num_ = num_.shifted(1, -du, -dv);
        // split the numerator into monomial * polynomial
        int nu = num_.min_u(), nv = num_.min_v();
        BiPoly npoly = num_.shifted(1, -nu, -nv);
        BiPoly g = bipoly_gcd(npoly, den_);
        if (!g.is_one()) {
            npoly = bipoly_divexact(npoly, g);
            den_ = bipoly_divexact(den_, g);
        }
        Int cn = npoly.content(), cd = den_.content();
        Int cg;
        mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (cg != 1) {
            npoly.divide_content(cg);
            den_.divide_content(cg);
        }
        if (den_.leading_coeff() < 0) {
            npoly = -npoly;
            den_ = -den_;
        }
        num_ = npoly.shifted(1, nu, nv);
    }

    BiPoly num_;
    BiPoly den_;
};

inline std::string scalar_term_str(const Int& c, int ue, int ve, int two_e) {
    std::string s;
    Int a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    bool unit = (a == 1) && (ue != 0 || ve != 0);
    std::string body;
    if (!unit) body = a.get_str();
    if (ue != 0) {
        if (!body.empty()) body += "*";
        if (two_e > 0) {
            if (ue % two_e == 0) {
                int k = ue / two_e;
                body += (k == 1) ? "q" : "q^" + std::to_string(k);
            } else {
                int g = std::gcd(std::abs(ue), two_e);
                body += "q^(" + std::to_string(ue / g) + "/" + std::to_string(two_e / g) + ")";
            }
        } else {
            body += "u^" + std::to_string(ue);
        }
    }
    if (ve != 0) {
        if (!body.empty()) body += "*";
        body += (ve == 1) ? "v" : "v^" + std::to_string(ve);
    }
    if (body.empty()) body = a.get_str();
    return (neg ? "-" : "") + body;
}

inline std::string poly_str(const BiPoly& p, int two_e) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        std::string t = scalar_term_str(c, e.first, e.second, two_e);
        if (first) {
            s = t;
        } else if (!t.empty() && t[0] == '-') {
            s += " - " + t.substr(1);
        } else {
            s += " + " + t;
        }
        first = false;
    }
    return s;
}

inline std::string CoefficientScalar::str(int two_e) const {
    if (den_.is_one()) {
        if (num_.terms().size() <= 1) return poly_str(num_, two_e);
        return "(" + poly_str(num_, two_e) + ")";
    }
    return "(" + poly_str(num_, two_e) + ")/(" + poly_str(den_, two_e) + ")";
}

}  // namespace macweyl
