#include "ars/scalar.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ars {

LaurentPoly LaurentPoly::constant(BigInt c) {
    LaurentPoly p;
    p.add_term({0, 0}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(BigInt c, int er, int es) {
    LaurentPoly p;
    p.add_term({er, es}, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExponentPair{0, 0});
}

void LaurentPoly::add_term(const ExponentPair& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term({e1.er + e2.er, e1.es + e2.es}, c1 * c2);
    return out;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ExponentPair LaurentPoly::min_exponents() const {
    ExponentPair m{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            m.er = std::min(m.er, e.er);
            m.es = std::min(m.es, e.es);
        }
    }
    return m;
}

ExponentPair LaurentPoly::max_exponents() const {
    ExponentPair m{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
            first = false;
        } else {
            m.er = std::max(m.er, e.er);
            m.es = std::max(m.es, e.es);
        }
    }
    return m;
}

const BigInt& LaurentPoly::leading_coeff() const {
    static const BigInt zero = 0;
    if (terms_.empty()) return zero;
    return terms_.rbegin()->second;
}

LaurentPoly LaurentPoly::divided_by_content(const BigInt& g) const {
    if (g == 0 || g == 1) return *this;
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c / g);
    return out;
}

LaurentPoly LaurentPoly::shifted(int der, int des) const {
    if (der == 0 && des == 0) return *this;
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(ExponentPair{e.er + der, e.es + des}, c);
    return out;
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("rational_pow: zero base with negative exponent");
        b = Rational(1) / b;
        e = -e;
    }
    Rational out(1);
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    out.canonicalize();
    return out;
}

}  // namespace

Rational LaurentPoly::evaluate(const Rational& r0, const Rational& s0) const {
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term(c);
        term *= rational_pow(r0, e.er);
        term *= rational_pow(s0, e.es);
        total += term;
    }
    total.canonicalize();
    return total;
}

bool LaurentPoly::depends_on_s() const {
    for (const auto& [e, c] : terms_)
        if (e.es != 0) return true;
    return false;
}

LaurentPoly LaurentPoly::d_ds() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) {
        if (e.es == 0) continue;
        out.add_term({e.er, e.es - 1}, c * e.es);
    }
    return out;
}

bool LaurentPoly::proportional_over_q(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return false;
    if (terms_.size() != other.terms_.size()) return false;
    auto it = terms_.begin();
    auto ot = other.terms_.begin();
    // this * q == other with q = other.lead / this.lead, cross-multiplied.
    const BigInt& p = leading_coeff();
    const BigInt& q = other.leading_coeff();
    for (; it != terms_.end(); ++it, ++ot) {
        if (!(it->first == ot->first)) return false;
        if (it->second * q != ot->second * p) return false;
    }
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending degree-lex, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt abs_c = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const bool has_var = (e.er != 0 || e.es != 0);
        if (abs_c != 1 || !has_var) {
            os << abs_c.get_str();
            if (has_var) os << " ";
        }
        if (e.er != 0) {
            os << "r";
            if (e.er != 1) os << "^" << e.er;
            if (e.es != 0) os << " ";
        }
        if (e.es != 0) {
            os << "s";
            if (e.es != 1) os << "^" << e.es;
        }
    }
    return os.str();
}

Scalar::Scalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    normalize();
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1);
        return;
    }
    // Common monomial factor: shift so the min exponent over num and den is 0.
    const ExponentPair mn = num_.min_exponents();
    const ExponentPair md = den_.min_exponents();
    const int er = std::min(mn.er, md.er);
    const int es = std::min(mn.es, md.es);
    if (er != 0 || es != 0) {
        num_ = num_.shifted(-er, -es);
        den_ = den_.shifted(-er, -es);
    }
    // Common integer content.
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (g > 1) {
        num_ = num_.divided_by_content(g);
        den_ = den_.divided_by_content(g);
    }
    // Sign: degree-lex leading coefficient of the denominator positive.
    if (den_.leading_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

Scalar Scalar::integer(long v) {
    return Scalar(LaurentPoly::constant(v), LaurentPoly::constant(1));
}

Scalar Scalar::rational(long num, long den) {
    return Scalar(LaurentPoly::constant(num), LaurentPoly::constant(den));
}

Scalar Scalar::rational(const Rational& q) {
    return Scalar(LaurentPoly::constant(q.get_num()), LaurentPoly::constant(q.get_den()));
}

Scalar Scalar::monomial(BigInt c, int er, int es) {
    return Scalar(LaurentPoly::monomial(std::move(c), er, es), LaurentPoly::constant(1));
}

Scalar Scalar::lambda() {
    return r() - r(-1);
}

bool Scalar::is_one() const {
    return num_ == den_;
}

bool Scalar::is_monomial() const {
    return num_.terms().size() == 1 && den_.terms().size() == 1;
}

bool Scalar::is_s_free_value() const {
    return num_.d_ds() * den_ == num_ * den_.d_ds();
}

std::optional<ExponentPair> Scalar::monomial_exponents() const {
    if (is_zero()) return std::nullopt;
    const ExponentPair n_min = num_.min_exponents();
    const ExponentPair n_max = num_.max_exponents();
    const ExponentPair d_min = den_.min_exponents();
    const ExponentPair d_max = den_.max_exponents();
    const int er = n_min.er - d_min.er;
    const int es = n_min.es - d_min.es;
    if (er != n_max.er - d_max.er || es != n_max.es - d_max.es) return std::nullopt;
    if (!num_.proportional_over_q(den_.shifted(er, es))) return std::nullopt;
    return ExponentPair{er, es};
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    return Scalar(-num_, den_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar::inv: division by zero");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    Scalar out = one();
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

bool Scalar::eq(const Scalar& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational Scalar::specialize(const Rational& r0, const Rational& s0) const {
    const Rational dv = den_.evaluate(r0, s0);
    if (dv == 0)
        throw std::domain_error("Scalar::specialize: denominator vanishes at the chosen point for " +
                                to_string());
    Rational nv = num_.evaluate(r0, s0);
    nv /= dv;
    nv.canonicalize();
    return nv;
}

std::string Scalar::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string Scalar::to_monomial_string() const {
    const auto exps = monomial_exponents();
    if (!exps) return to_string();
    Rational coeff(num_.leading_coeff(), den_.shifted(exps->er, exps->es).leading_coeff());
    coeff.canonicalize();
    const Scalar canonical =
        Scalar::rational(coeff) * Scalar::r(1).pow(exps->er) * Scalar::s(1).pow(exps->es);
    return canonical.to_string();
}

}  // namespace ars
