#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ars/scalar.hpp"

namespace ars {

/// Generator letters of the algebra, in the canonical order used by the
/// normal-form monomials f^k a^i b^j c^l d^m (f and its inverse share slot k).
enum class Gen : std::uint8_t { F, Finv, A, B, C, D };

const char* gen_name(Gen g);

/// Normal-form monomial f^k a^i b^j c^l d^m; the unit is all exponents zero.
struct Monomial {
    int k = 0;       // power of f (may be negative)
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;
    std::uint32_t d = 0;

    int degree() const {
        return k + static_cast<int>(a + b + c + d);
    }
    int abs_degree() const {
        return (k < 0 ? -k : k) + static_cast<int>(a + b + c + d);
    }
    bool is_unit() const { return k == 0 && a == 0 && b == 0 && c == 0 && d == 0; }

    static Monomial unit() { return {}; }
    static Monomial of(Gen g, int power = 1);

    std::vector<Gen> letters() const;
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Degree-lex order on (k, a, b, c, d); stable term ordering for output.
struct MonomialLess {
    bool operator()(const Monomial& x, const Monomial& y) const;
};

/// Linear combination of normal-form monomials. No zero coefficients stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialLess>;

    Poly() = default;
    static Poly zero() { return {}; }
    static Poly unit() { return term(Monomial::unit(), Scalar::one()); }
    static Poly term(const Monomial& m, const Scalar& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    int max_abs_degree() const;

    void add_term(const Monomial& m, const Scalar& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly scaled(const Scalar& c) const;
    /// Product with straightening to normal form.
    Poly operator*(const Poly& o) const;

    bool eq(const Poly& o) const { return (*this - o).is_zero(); }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// Reduction strategy of the straightening engine: which reducible adjacent
/// pair of a word is rewritten first.
enum class Strategy { LeftmostFirst, RightmostFirst };

/// Rewrites an arbitrary word in the generators to its normal-form expansion
/// under the defining relations. Always terminates; both strategies agree.
Poly straighten(std::span<const Gen> word, Strategy strategy = Strategy::LeftmostFirst);
Poly straighten(std::initializer_list<Gen> word, Strategy strategy = Strategy::LeftmostFirst);
/// Same, with letters given as (generator, integer power) factors; negative
/// powers are only meaningful for f.
Poly straighten(std::span<const std::pair<Gen, int>> word,
                Strategy strategy = Strategy::LeftmostFirst);

/// Element delta^{-p} * poly of the localized algebra, where
/// delta = ad - r^{-1}bc is the central quantum determinant of the GL block.
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(std::uint32_t delta_pow, Poly poly)
        : delta_pow_(delta_pow), poly_(std::move(poly)) {
        trim();
    }

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one() { return {0, Poly::unit()}; }
    static AlgebraElement gen(Gen g, int power = 1);
    static AlgebraElement from_poly(Poly p) { return {0, std::move(p)}; }
    static AlgebraElement scalar(const Scalar& c) { return {0, Poly::term(Monomial::unit(), c)}; }
    /// delta = ad - r^{-1}bc
    static AlgebraElement delta();
    /// delta^{-p}
    static AlgebraElement delta_inv(std::uint32_t p = 1);
    /// D = delta * f; group-like but not central.
    static AlgebraElement quantum_determinant();

    std::uint32_t delta_pow() const { return delta_pow_; }
    const Poly& poly() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }

    AlgebraElement operator*(const AlgebraElement& o) const;
    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement scaled(const Scalar& c) const { return {delta_pow_, poly_.scaled(c)}; }

    /// Localization-aware equality: delta^{q} x == delta^{p} y cross-check.
    bool eq(const AlgebraElement& o) const;

    /// Optional normalization: divides the poly part by delta while exactly
    /// divisible, decrementing the delta power. Equality never relies on it.
    AlgebraElement normalized() const;

    std::string to_string() const;

private:
    void trim() {
        if (poly_.is_zero()) delta_pow_ = 0;
    }

    std::uint32_t delta_pow_ = 0;
    Poly poly_;
};

/// Exact division of a poly by delta; nullopt when not divisible.
std::optional<Poly> divide_by_delta(const Poly& p);

/// The module action of f extended as an algebra automorphism:
/// f acts trivially on a, d, f^{+-1}, delta^{-1} and scales b, c by s^{+-1}.
AlgebraElement act_f(const AlgebraElement& x);

/// One defining relation, stored as the formal combination lhs - rhs of
/// two-letter words so it can be compared against extracted relation sets
/// before any reduction.
struct DefiningRelation {
    std::string name;
    // formal word-combination: word -> coefficient
    std::map<std::vector<Gen>, Scalar> combo;
    /// The same combination assembled in the algebra (always reduces to zero).
    AlgebraElement element() const;
};

/// The ten defining relations of the algebra (six from the GL block, four
/// cross relations with f).
const std::vector<DefiningRelation>& defining_relations();

/// Verifies f*x == (f.x)*f for x in {a,b,c,d}: the smash-product law
/// regenerates exactly the cross relations.
bool check_smash_consistency();

/// Element of the tensor square A (x) A in the normal tensor-monomial basis.
/// Multiplication is leg-wise with no braiding.
class TensorElement {
public:
    struct Leg {
        std::uint32_t delta_pow = 0;
        Monomial mono;
        friend bool operator==(const Leg&, const Leg&) = default;
    };
    struct LegLess {
        bool operator()(const Leg& x, const Leg& y) const {
            if (x.delta_pow != y.delta_pow) return x.delta_pow < y.delta_pow;
            return MonomialLess{}(x.mono, y.mono);
        }
    };
    struct KeyLess {
        bool operator()(const std::pair<Leg, Leg>& x, const std::pair<Leg, Leg>& y) const {
            LegLess less;
            if (less(x.first, y.first)) return true;
            if (less(y.first, x.first)) return false;
            return less(x.second, y.second);
        }
    };
    using TermMap = std::map<std::pair<Leg, Leg>, Scalar, KeyLess>;

    TensorElement() = default;
    static TensorElement zero() { return {}; }
    static TensorElement unit();
    static TensorElement simple(const AlgebraElement& left, const AlgebraElement& right);

    bool is_term_free() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Leg& l, const Leg& r, const Scalar& c);

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;
    TensorElement scaled(const Scalar& c) const;

    /// Equality in A (x) A: legs are aligned to common delta powers (delta is
    /// a central non-zero-divisor) and compared term-wise.
    bool eq(const TensorElement& o) const;
    bool is_zero() const { return eq(TensorElement::zero()); }

    std::string to_string() const;

private:
    TermMap terms_;
};

}  // namespace ars
