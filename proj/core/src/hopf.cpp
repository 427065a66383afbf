#include "ars/hopf.hpp"

#include <map>

namespace ars {

GeneratorMatrix::GeneratorMatrix() {
    entries_[0][0] = AlgebraElement::gen(Gen::F);
    entries_[1][1] = AlgebraElement::gen(Gen::A);
    entries_[1][2] = AlgebraElement::gen(Gen::B);
    entries_[2][1] = AlgebraElement::gen(Gen::C);
    entries_[2][2] = AlgebraElement::gen(Gen::D);
}

namespace {

TensorElement generator_coproduct(Gen g) {
    using enum Gen;
    auto simple = [](Gen x, Gen y) {
        return TensorElement::simple(AlgebraElement::gen(x), AlgebraElement::gen(y));
    };
    switch (g) {
        case F: return simple(F, F);
        case Finv: return simple(Finv, Finv);
        case A: return simple(A, A) + simple(B, C);
        case B: return simple(A, B) + simple(B, D);
        case C: return simple(C, A) + simple(D, C);
        case D: return simple(C, B) + simple(D, D);
    }
    return TensorElement::zero();
}

TensorElement delta_inv_coproduct() {
    TensorElement t;
    t.add_term({1, Monomial::unit()}, {1, Monomial::unit()}, Scalar::one());
    return t;
}

}  // namespace

TensorElement coproduct(const AlgebraElement& x) {
    TensorElement out;
    for (const auto& [m, c] : x.poly().terms()) {
        TensorElement t = TensorElement::unit();
        for (std::uint32_t i = 0; i < x.delta_pow(); ++i) t = t * delta_inv_coproduct();
        for (Gen g : m.letters()) t = t * generator_coproduct(g);
        out = out + t.scaled(c);
    }
    return out;
}

Scalar counit(const AlgebraElement& x) {
    Scalar total = Scalar::zero();
    for (const auto& [m, c] : x.poly().terms())
        if (m.b == 0 && m.c == 0) total += c;
    return total;
}

AlgebraElement antipode(const AlgebraElement& x) {
    AlgebraElement out = AlgebraElement::zero();
    for (const auto& [m, c] : x.poly().terms()) {
        // Reverse the word d^m c^l b^j a^i f^k and apply S letter-wise.
        AlgebraElement acc = AlgebraElement::one();
        for (std::uint32_t i = 0; i < m.d; ++i)
            acc = acc * AlgebraElement(1, Poly::term(Monomial::of(Gen::A), Scalar::one()));
        for (std::uint32_t i = 0; i < m.c; ++i)
            acc = acc * AlgebraElement(1, Poly::term(Monomial::of(Gen::C), -Scalar::r(-1)));
        for (std::uint32_t i = 0; i < m.b; ++i)
            acc = acc * AlgebraElement(1, Poly::term(Monomial::of(Gen::B), -Scalar::r(1)));
        for (std::uint32_t i = 0; i < m.a; ++i)
            acc = acc * AlgebraElement(1, Poly::term(Monomial::of(Gen::D), Scalar::one()));
        if (m.k != 0)
            acc = acc * AlgebraElement::gen(Gen::F, -m.k);
        out = out + acc.scaled(c);
    }
    // S(delta^-p) = delta^p: cancel against the accumulated delta powers.
    if (x.delta_pow() == 0) return out;
    if (out.delta_pow() >= x.delta_pow())
        return AlgebraElement(out.delta_pow() - x.delta_pow(), out.poly());
    Poly p = out.poly();
    const Poly dp = AlgebraElement::delta().poly();
    for (std::uint32_t i = out.delta_pow(); i < x.delta_pow(); ++i) p = p * dp;
    return AlgebraElement(0, p);
}

AlgebraElement counit_left_collapse(const TensorElement& t) {
    AlgebraElement out = AlgebraElement::zero();
    for (const auto& [key, c] : t.terms()) {
        const Scalar e = counit(AlgebraElement(key.first.delta_pow,
                                               Poly::term(key.first.mono, Scalar::one())));
        if (e.is_zero()) continue;
        out = out + AlgebraElement(key.second.delta_pow,
                                   Poly::term(key.second.mono, c * e));
    }
    return out;
}

AlgebraElement counit_right_collapse(const TensorElement& t) {
    AlgebraElement out = AlgebraElement::zero();
    for (const auto& [key, c] : t.terms()) {
        const Scalar e = counit(AlgebraElement(key.second.delta_pow,
                                               Poly::term(key.second.mono, Scalar::one())));
        if (e.is_zero()) continue;
        out = out + AlgebraElement(key.first.delta_pow,
                                   Poly::term(key.first.mono, c * e));
    }
    return out;
}

AlgebraElement antipode_convolution_left(const AlgebraElement& x) {
    AlgebraElement out = AlgebraElement::zero();
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement left(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement right(key.second.delta_pow, Poly::term(key.second.mono, Scalar::one()));
        out = out + (antipode(left) * right).scaled(c);
    }
    return out;
}

AlgebraElement antipode_convolution_right(const AlgebraElement& x) {
    AlgebraElement out = AlgebraElement::zero();
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement left(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement right(key.second.delta_pow, Poly::term(key.second.mono, Scalar::one()));
        out = out + (left * antipode(right)).scaled(c);
    }
    return out;
}

namespace {

// Triple tensor terms keyed by three legs; only needed to witness
// coassociativity, so a plain map with aligned delta powers suffices.
struct TripleKey {
    TensorElement::Leg l1, l2, l3;
};
struct TripleLess {
    bool operator()(const TripleKey& x, const TripleKey& y) const {
        TensorElement::LegLess less;
        if (less(x.l1, y.l1)) return true;
        if (less(y.l1, x.l1)) return false;
        if (less(x.l2, y.l2)) return true;
        if (less(y.l2, x.l2)) return false;
        return less(x.l3, y.l3);
    }
};
using Triple = std::map<TripleKey, Scalar, TripleLess>;

void triple_add(Triple& t, const TripleKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
        t.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Triple expand_leg(const TensorElement& t, bool expand_first) {
    Triple out;
    for (const auto& [key, c] : t.terms()) {
        const auto& fixed = expand_first ? key.second : key.first;
        const auto& split = expand_first ? key.first : key.second;
        const TensorElement inner =
            coproduct(AlgebraElement(split.delta_pow, Poly::term(split.mono, Scalar::one())));
        for (const auto& [ikey, ic] : inner.terms()) {
            TripleKey k;
            if (expand_first) {
                k.l1 = ikey.first;
                k.l2 = ikey.second;
                k.l3 = fixed;
            } else {
                k.l1 = fixed;
                k.l2 = ikey.first;
                k.l3 = ikey.second;
            }
            triple_add(out, k, c * ic);
        }
    }
    return out;
}

bool triple_eq(const Triple& x, const Triple& y) {
    // Compare with per-slot delta alignment, expanding each leg against the
    // common maximal power (delta is central and regular).
    std::uint32_t p1 = 0, p2 = 0, p3 = 0;
    for (const Triple* t : {&x, &y}) {
        for (const auto& [k, c] : *t) {
            p1 = std::max(p1, k.l1.delta_pow);
            p2 = std::max(p2, k.l2.delta_pow);
            p3 = std::max(p3, k.l3.delta_pow);
        }
    }
    const Poly dp = AlgebraElement::delta().poly();
    auto expand = [&](const TensorElement::Leg& leg, std::uint32_t target) {
        Poly p = Poly::term(leg.mono, Scalar::one());
        for (std::uint32_t i = leg.delta_pow; i < target; ++i) p = p * dp;
        return p;
    };
    struct MonoTripleLess {
        bool operator()(const std::array<Monomial, 3>& u, const std::array<Monomial, 3>& v) const {
            MonomialLess less;
            for (int i = 0; i < 3; ++i) {
                if (less(u[i], v[i])) return true;
                if (less(v[i], u[i])) return false;
            }
            return false;
        }
    };
    std::map<std::array<Monomial, 3>, Scalar, MonoTripleLess> acc;
    auto accumulate = [&](const Triple& t, bool negate) {
        for (const auto& [k, c] : t) {
            const Poly e1 = expand(k.l1, p1), e2 = expand(k.l2, p2), e3 = expand(k.l3, p3);
            for (const auto& [m1, c1] : e1.terms())
                for (const auto& [m2, c2] : e2.terms())
                    for (const auto& [m3, c3] : e3.terms()) {
                        Scalar add = c * c1 * c2 * c3;
                        if (negate) add = -add;
                        auto it = acc.find({m1, m2, m3});
                        if (it == acc.end()) {
                            if (!add.is_zero()) acc.emplace(std::array{m1, m2, m3}, add);
                        } else {
                            it->second += add;
                            if (it->second.is_zero()) acc.erase(it);
                        }
                    }
        }
    };
    accumulate(x, false);
    accumulate(y, true);
    return acc.empty();
}

TensorElement coproduct_of_word_combo(const std::map<std::vector<Gen>, Scalar>& combo) {
    TensorElement out;
    for (const auto& [w, c] : combo) {
        TensorElement t = TensorElement::unit();
        for (Gen g : w) t = t * generator_coproduct(g);
        out = out + t.scaled(c);
    }
    return out;
}

}  // namespace

bool coassociative_on(const AlgebraElement& x) {
    const TensorElement t = coproduct(x);
    return triple_eq(expand_leg(t, true), expand_leg(t, false));
}

CheckResult check_hopf_axioms(const std::vector<AlgebraElement>& samples) {
    CheckResult res;
    res.name = "hopf";
    res.passed = true;
    res.cases = samples.size();

    std::size_t coassoc_fail = 0, counit_fail = 0, antipode_fail = 0;
    for (const AlgebraElement& x : samples) {
        if (!coassociative_on(x)) {
            ++coassoc_fail;
            res.fail("coassociativity fails on " + x.to_string());
        }
        const TensorElement dx = coproduct(x);
        if (!counit_left_collapse(dx).eq(x) || !counit_right_collapse(dx).eq(x)) {
            ++counit_fail;
            res.fail("counit law fails on " + x.to_string());
        }
        const AlgebraElement target = AlgebraElement::one().scaled(counit(x));
        if (!antipode_convolution_left(x).eq(target) ||
            !antipode_convolution_right(x).eq(target)) {
            ++antipode_fail;
            res.fail("antipode identity fails on " + x.to_string());
        }
    }
    res.notes.push_back("coassociativity: " +
                        std::to_string(samples.size() - coassoc_fail) + "/" +
                        std::to_string(samples.size()));
    res.notes.push_back("counit laws: " + std::to_string(samples.size() - counit_fail) + "/" +
                        std::to_string(samples.size()));
    res.notes.push_back("antipode identities: " +
                        std::to_string(samples.size() - antipode_fail) + "/" +
                        std::to_string(samples.size()));

    // Bialgebra compatibility: Delta and eps annihilate the defining relations.
    std::size_t rel_ok = 0;
    for (const DefiningRelation& rel : defining_relations()) {
        const TensorElement dt = coproduct_of_word_combo(rel.combo);
        Scalar e = Scalar::zero();
        for (const auto& [w, c] : rel.combo) {
            Scalar prod = c;
            for (Gen g : w) prod *= counit(AlgebraElement::gen(g));
            e += prod;
        }
        if (dt.is_zero() && e.is_zero()) {
            ++rel_ok;
        } else {
            res.fail("bialgebra compatibility fails on relation " + rel.name);
        }
    }
    res.notes.push_back("relations annihilated by Delta and eps: " + std::to_string(rel_ok) +
                        "/" + std::to_string(defining_relations().size()));
    return res;
}

CheckResult check_grouplike() {
    CheckResult res;
    res.name = "grouplike";
    res.passed = true;

    const AlgebraElement delta = AlgebraElement::delta();
    const AlgebraElement qdet = AlgebraElement::quantum_determinant();
    const AlgebraElement b = AlgebraElement::gen(Gen::B);
    const AlgebraElement a = AlgebraElement::gen(Gen::A);

    if (coproduct(delta).eq(TensorElement::simple(delta, delta))) {
        res.notes.push_back("Delta(delta) = delta (x) delta");
    } else {
        res.fail("delta is not group-like");
    }
    if (coproduct(qdet).eq(TensorElement::simple(qdet, qdet))) {
        res.notes.push_back("Delta(D) = D (x) D");
    } else {
        res.fail("D = delta f is not group-like");
    }
    if (counit(qdet).eq(Scalar::one())) {
        res.notes.push_back("eps(D) = 1");
    } else {
        res.fail("eps(D) != 1");
    }
    if ((qdet * a).eq(a * qdet)) {
        res.notes.push_back("D commutes with a");
    } else {
        res.fail("D unexpectedly fails to commute with a");
    }
    if (!(qdet * b).eq(b * qdet)) {
        res.notes.push_back("D b != b D (witness of non-centrality)");
    } else {
        res.fail("D commutes with b; non-centrality witness missing");
    }
    res.cases = 5;
    return res;
}

}  // namespace ars
