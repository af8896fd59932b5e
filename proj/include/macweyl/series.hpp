#pragma once

#include <stdexcept>
#include <vector>

#include "macweyl/laurent.hpp"

namespace macweyl {

/// Dense polynomial in q with rational coefficients (index = q degree).
using QPoly = std::vector<Rational>;

inline QPoly qpoly_one() { return {Rational(1)}; }

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// (q)_m = prod_{j=1..m} (1 - q^j)
inline QPoly q_factorial(int m) {
    QPoly r = qpoly_one();
    for (int j = 1; j <= m; ++j) {
        QPoly f(j + 1, Rational(0));
        f[0] = 1;
        f[j] = -1;
        r = qpoly_mul(r, f);
    }
    return r;
}

/// Power series in q truncated at a fixed order, with X-polynomial
/// coefficients whose scalars are q- and v-free rational constants.
class CharacterSeries {
public:
    CharacterSeries(LatticeTag tag, int rank, int order)
        : order_(order), coeffs_(order + 1, LaurentPolynomial(tag, rank)) {}

    int order() const { return order_; }
    LatticeTag tag() const { return coeffs_.empty() ? LatticeTag::X : coeffs_[0].tag(); }
    int rank() const { return coeffs_.empty() ? 0 : coeffs_[0].rank(); }

    const LaurentPolynomial& operator[](int j) const {
        if (j < 0 || j > order_) throw std::out_of_range("CharacterSeries index");
        return coeffs_[j];
    }
    LaurentPolynomial& operator[](int j) {
        if (j < 0 || j > order_) throw std::out_of_range("CharacterSeries index");
        return coeffs_[j];
    }

    void set(int j, LaurentPolynomial p) {
        for (const auto& [w, c] : p.terms())
            if (!c.v_free() || !c.is_polynomial() || c.num().min_u() != 0 ||
                c.num().terms().rbegin()->first.first != 0)
                throw std::invalid_argument("CharacterSeries: coefficient not a constant");
        coeffs_[j] = std::move(p);
    }

    bool operator==(const CharacterSeries& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CharacterSeries& o) const { return !(*this == o); }

    CharacterSeries truncated(int new_order) const {
        CharacterSeries r(tag(), rank(), new_order);
        for (int j = 0; j <= std::min(new_order, order_); ++j) r.coeffs_[j] = coeffs_[j];
        return r;
    }

    friend CharacterSeries operator+(const CharacterSeries& a, const CharacterSeries& b) {
        int n = std::min(a.order_, b.order_);
        CharacterSeries r(a.tag(), a.rank(), n);
        for (int j = 0; j <= n; ++j) r.coeffs_[j] = a.coeffs_[j] + b.coeffs_[j];
        return r;
    }
    friend CharacterSeries operator-(const CharacterSeries& a, const CharacterSeries& b) {
        int n = std::min(a.order_, b.order_);
        CharacterSeries r(a.tag(), a.rank(), n);
        for (int j = 0; j <= n; ++j) r.coeffs_[j] = a.coeffs_[j] - b.coeffs_[j];
        return r;
    }

    /// Multiply by an X-monomial with a q-degree shift (drops terms past the
    /// truncation order).
    CharacterSeries shifted(const Weight& xshift, int qshift,
                            const CoefficientScalar& c = CoefficientScalar::one()) const {
        CharacterSeries r(tag(), rank(), order_);
        for (int j = 0; j <= order_; ++j) {
            if (j + qshift < 0 || j + qshift > order_) continue;
            r.coeffs_[j + qshift] = coeffs_[j].shifted(xshift, c);
        }
        return r;
    }

    friend CharacterSeries qpoly_times(const QPoly& f, const CharacterSeries& s) {
        CharacterSeries r(s.tag(), s.rank(), s.order_);
        for (int k = 0; k < static_cast<int>(f.size()); ++k) {
            if (f[k] == 0) continue;
            CoefficientScalar c = CoefficientScalar::rational(f[k]);
            for (int j = 0; j + k <= s.order_; ++j) r.coeffs_[j + k] += c * s.coeffs_[j];
        }
        return r;
    }

    bool is_zero() const {
        for (const auto& p : coeffs_)
            if (!p.is_zero()) return false;
        return true;
    }

private:
    int order_;
    std::vector<LaurentPolynomial> coeffs_;
};

/// Truncated power-series quotient num / den to the given order; den must
/// have a nonzero constant term.
inline CharacterSeries series_divide(const CharacterSeries& num, const QPoly& den, int order) {
    if (den.empty() || den[0] == 0)
        throw std::domain_error("series_divide: denominator has zero constant term");
    CharacterSeries out(num.tag(), num.rank(), order);
    CoefficientScalar inv0 = CoefficientScalar::rational(1 / den[0]);
    for (int n = 0; n <= order; ++n) {
        LaurentPolynomial acc =
            n <= num.order() ? num[n] : LaurentPolynomial::zero(num.tag(), num.rank());
        for (int k = 1; k <= n && k < static_cast<int>(den.size()); ++k) {
            if (den[k] == 0) continue;
            acc -= CoefficientScalar::rational(den[k]) * out[n - k];
        }
        out[n] = inv0 * acc;
    }
    return out;
}

/// A q-polynomial scalar (u-exponents in 2e Z, v-free) as a dense QPoly.
inline QPoly scalar_to_qpoly(int two_e, const CoefficientScalar& c) {
    if (!c.is_polynomial() || !c.v_free())
        throw std::invalid_argument("expected a polynomial in q");
    const Int& den = c.den().terms().begin()->second;
    QPoly out;
    for (const auto& [e, k] : c.num().terms()) {
        if (e.first < 0 || e.first % two_e != 0)
            throw std::invalid_argument("expected integral q powers");
        size_t j = e.first / two_e;
        if (out.size() <= j) out.resize(j + 1, Rational(0));
        out[j] = Rational(k) / Rational(den);
    }
    if (out.empty()) out.push_back(Rational(0));
    return out;
}

/// Splits a Laurent polynomial whose scalars are polynomials in q (u
/// exponents divisible by 2e, v-free) into a truncated q-power series.
inline CharacterSeries to_series(const LaurentPolynomial& p, int two_e, int order) {
    CharacterSeries out(p.tag(), p.rank(), order);
    for (const auto& [w, c] : p.terms()) {
        if (!c.is_polynomial() || !c.v_free())
            throw std::invalid_argument("to_series: coefficient is not a polynomial in q");
        const Int& d = c.den().terms().begin()->second;
        for (const auto& [e, k] : c.num().terms()) {
            if (e.first < 0 || e.first % two_e != 0)
                throw std::invalid_argument("to_series: fractional or negative q power");
            int j = e.first / two_e;
            if (j > order) continue;
            out[j].add_term(Weight(p.tag(), w),
                            CoefficientScalar(BiPoly::constant(k), BiPoly::constant(d)));
        }
    }
    return out;
}

}  // namespace macweyl
