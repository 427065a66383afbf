#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ars {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Exponent pair (e_r, e_s) of a Laurent monomial r^{e_r} s^{e_s}.
struct ExponentPair {
    int er = 0;
    int es = 0;

    friend bool operator==(const ExponentPair&, const ExponentPair&) = default;
};

/// Degree-lex order on (e_r, e_s): total degree first, then e_r, then e_s.
struct DegLexLess {
    bool operator()(const ExponentPair& x, const ExponentPair& y) const {
        const int dx = x.er + x.es, dy = y.er + y.es;
        if (dx != dy) return dx < dy;
        if (x.er != y.er) return x.er < y.er;
        return x.es < y.es;
    }
};

/// Laurent polynomial in the two deformation parameters with integer
/// coefficients. Terms are kept in degree-lex order and never store a zero
/// coefficient, so equality is plain term-map equality.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentPair, BigInt, DegLexLess>;

    LaurentPoly() = default;
    static LaurentPoly zero() { return {}; }
    static LaurentPoly constant(BigInt c);
    static LaurentPoly monomial(BigInt c, int er, int es);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }

    void add_term(const ExponentPair& e, const BigInt& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// gcd of the absolute values of all coefficients; 0 for the zero poly.
    BigInt content() const;
    /// Minimal exponents over all terms; (0,0) for the zero poly.
    ExponentPair min_exponents() const;
    ExponentPair max_exponents() const;
    /// Leading coefficient under degree-lex (the map's last term).
    const BigInt& leading_coeff() const;

    LaurentPoly divided_by_content(const BigInt& g) const;
    LaurentPoly shifted(int der, int des) const;

    /// Exact value at (r0, s0); requires r0, s0 != 0 when negative exponents occur.
    Rational evaluate(const Rational& r0, const Rational& s0) const;

    bool depends_on_s() const;
    /// Formal partial derivative with respect to s.
    LaurentPoly d_ds() const;
    /// True when this equals q * other for a rational q (both nonzero).
    bool proportional_over_q(const LaurentPoly& other) const;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Element of the coefficient field: a fraction of Laurent polynomials kept in
/// canonical form. The common integer content and the common monomial factor
/// of numerator and denominator are removed, and the denominator's degree-lex
/// leading coefficient is positive. Equality is decided by cross-multiplication,
/// so no multivariate gcd is ever needed.
class Scalar {
public:
    Scalar() : Scalar(LaurentPoly::zero(), LaurentPoly::constant(1), false) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar zero() { return {}; }
    static Scalar one() { return integer(1); }
    static Scalar integer(long v);
    static Scalar rational(long num, long den);
    static Scalar rational(const Rational& q);
    static Scalar r(int power = 1) { return monomial(1, power, 0); }
    static Scalar s(int power = 1) { return monomial(1, 0, power); }
    static Scalar monomial(BigInt c, int er, int es);
    /// lambda = r - r^{-1}
    static Scalar lambda();

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    /// True when the canonical presentation carries no power of s.
    bool is_s_free() const { return !num_.depends_on_s() && !den_.depends_on_s(); }
    /// Value-level s-independence: the formal s-derivative vanishes
    /// (num' den = num den'), exact without any gcd computation.
    bool is_s_free_value() const;
    /// True when num and den are single terms (value is +-c r^i s^j).
    bool is_monomial() const;
    /// Exponents (i, j) when the value equals c r^i s^j for a rational c,
    /// detected up to common polynomial factors of num and den.
    std::optional<ExponentPair> monomial_exponents() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Multiplicative inverse; throws std::domain_error on zero.
    Scalar inv() const;
    Scalar pow(int e) const;

    /// Field equality by cross-multiplication.
    bool eq(const Scalar& o) const;

    /// Exact rational value at (r0, s0). Throws std::domain_error when the
    /// denominator vanishes there; the message names the offending scalar.
    Rational specialize(const Rational& r0, const Rational& s0) const;

    /// Canonical text form, e.g. "(r^2 - 1)/(r)".
    std::string to_string() const;
    /// Like to_string, but values that are clean monomials render as
    /// c r^i s^j even when the fraction carries a common polynomial factor.
    std::string to_monomial_string() const;

private:
    Scalar(LaurentPoly num, LaurentPoly den, bool /*already_canonical*/)
        : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

}  // namespace ars
