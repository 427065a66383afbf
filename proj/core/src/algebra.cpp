#include "ars/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ars {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::F: return "f";
        case Gen::Finv: return "f^-1";
        case Gen::A: return "a";
        case Gen::B: return "b";
        case Gen::C: return "c";
        case Gen::D: return "d";
    }
    return "?";
}

Monomial Monomial::of(Gen g, int power) {
    Monomial m;
    if (power < 0 && g != Gen::F && g != Gen::Finv)
        throw std::invalid_argument("Monomial::of: negative power only for f");
    switch (g) {
        case Gen::F: m.k = power; break;
        case Gen::Finv: m.k = -power; break;
        case Gen::A: m.a = power; break;
        case Gen::B: m.b = power; break;
        case Gen::C: m.c = power; break;
        case Gen::D: m.d = power; break;
    }
    return m;
}

std::vector<Gen> Monomial::letters() const {
    std::vector<Gen> out;
    out.reserve(abs_degree());
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) out.push_back(k >= 0 ? Gen::F : Gen::Finv);
    for (std::uint32_t i = 0; i < a; ++i) out.push_back(Gen::A);
    for (std::uint32_t i = 0; i < b; ++i) out.push_back(Gen::B);
    for (std::uint32_t i = 0; i < c; ++i) out.push_back(Gen::C);
    for (std::uint32_t i = 0; i < d; ++i) out.push_back(Gen::D);
    return out;
}

std::string Monomial::to_string() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto put = [&](const char* name, int e) {
        if (e == 0) return;
        if (!first) os << " ";
        first = false;
        os << name;
        if (e != 1) os << "^" << e;
    };
    put("f", k);
    put("a", static_cast<int>(a));
    put("b", static_cast<int>(b));
    put("c", static_cast<int>(c));
    put("d", static_cast<int>(d));
    return os.str();
}

bool MonomialLess::operator()(const Monomial& x, const Monomial& y) const {
    const int dx = x.degree(), dy = y.degree();
    if (dx != dy) return dx < dy;
    if (x.k != y.k) return x.k < y.k;
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
    Poly p;
    p.add_term(m, c);
    return p;
}

int Poly::max_abs_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.abs_degree());
    return deg;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly out;
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.add_term(m, k * c);
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << m.to_string() << " : " << c.to_string();
    }
    return os.str();
}

namespace {

// One rewrite step on an adjacent out-of-order pair. Every replacement word is
// strictly smaller in the induced PBW order, which gives termination.
struct RuleTerm {
    Scalar coeff;
    std::vector<Gen> replacement;
};

std::optional<std::vector<RuleTerm>> rule_for(Gen x, Gen y) {
    using enum Gen;
    if (x == F && y == Finv) return std::vector<RuleTerm>{{Scalar::one(), {}}};
    if (x == Finv && y == F) return std::vector<RuleTerm>{{Scalar::one(), {}}};
    if (x == F || x == Finv) return std::nullopt;
    if (y == F) {
        switch (x) {
            case A: return std::vector<RuleTerm>{{Scalar::one(), {F, A}}};
            case B: return std::vector<RuleTerm>{{Scalar::s(-1), {F, B}}};
            case C: return std::vector<RuleTerm>{{Scalar::s(1), {F, C}}};
            case D: return std::vector<RuleTerm>{{Scalar::one(), {F, D}}};
            default: return std::nullopt;
        }
    }
    if (y == Finv) {
        switch (x) {
            case A: return std::vector<RuleTerm>{{Scalar::one(), {Finv, A}}};
            case B: return std::vector<RuleTerm>{{Scalar::s(1), {Finv, B}}};
            case C: return std::vector<RuleTerm>{{Scalar::s(-1), {Finv, C}}};
            case D: return std::vector<RuleTerm>{{Scalar::one(), {Finv, D}}};
            default: return std::nullopt;
        }
    }
    if (x == B && y == A) return std::vector<RuleTerm>{{Scalar::r(1), {A, B}}};
    if (x == C && y == A) return std::vector<RuleTerm>{{Scalar::r(1), {A, C}}};
    if (x == D && y == B) return std::vector<RuleTerm>{{Scalar::r(1), {B, D}}};
    if (x == D && y == C) return std::vector<RuleTerm>{{Scalar::r(1), {C, D}}};
    if (x == C && y == B) return std::vector<RuleTerm>{{Scalar::one(), {B, C}}};
    if (x == D && y == A)
        return std::vector<RuleTerm>{{Scalar::one(), {A, D}},
                                     {-(Scalar::r(-1) - Scalar::r(1)), {B, C}}};
    return std::nullopt;
}

Monomial normal_word_to_monomial(const std::vector<Gen>& w) {
    Monomial m;
    for (Gen g : w) {
        switch (g) {
            case Gen::F: ++m.k; break;
            case Gen::Finv: --m.k; break;
            case Gen::A: ++m.a; break;
            case Gen::B: ++m.b; break;
            case Gen::C: ++m.c; break;
            case Gen::D: ++m.d; break;
        }
    }
    return m;
}

struct WordLess {
    bool operator()(const std::vector<Gen>& x, const std::vector<Gen>& y) const {
        if (x.size() != y.size()) return x.size() < y.size();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
};

}  // namespace

Poly straighten(std::span<const Gen> word, Strategy strategy) {
    std::map<std::vector<Gen>, Scalar, WordLess> pending;
    pending.emplace(std::vector<Gen>(word.begin(), word.end()), Scalar::one());
    Poly out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const std::vector<Gen>& w = node.key();
        const Scalar& coeff = node.mapped();
        if (coeff.is_zero()) continue;

        std::optional<std::size_t> pos;
        std::optional<std::vector<RuleTerm>> red;
        if (strategy == Strategy::LeftmostFirst) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
                if (auto r = rule_for(w[i], w[i + 1])) {
                    pos = i;
                    red = std::move(r);
                    break;
                }
            }
        } else {
            for (std::size_t i = w.size(); i >= 2; --i) {
                if (auto r = rule_for(w[i - 2], w[i - 1])) {
                    pos = i - 2;
                    red = std::move(r);
                    break;
                }
            }
        }

        if (!pos) {
            out.add_term(normal_word_to_monomial(w), coeff);
            continue;
        }
        for (const RuleTerm& term : *red) {
            std::vector<Gen> next;
            next.reserve(w.size());
            next.insert(next.end(), w.begin(), w.begin() + *pos);
            next.insert(next.end(), term.replacement.begin(), term.replacement.end());
            next.insert(next.end(), w.begin() + *pos + 2, w.end());
            const Scalar add = coeff * term.coeff;
            auto it = pending.find(next);
            if (it == pending.end()) {
                pending.emplace(std::move(next), add);
            } else {
                it->second += add;
                if (it->second.is_zero()) pending.erase(it);
            }
        }
    }
    return out;
}

Poly straighten(std::initializer_list<Gen> word, Strategy strategy) {
    return straighten(std::span<const Gen>(word.begin(), word.size()), strategy);
}

Poly straighten(std::span<const std::pair<Gen, int>> word, Strategy strategy) {
    std::vector<Gen> letters;
    for (const auto& [g, power] : word) {
        if (power >= 0) {
            for (int i = 0; i < power; ++i) letters.push_back(g);
        } else {
            if (g != Gen::F && g != Gen::Finv)
                throw std::invalid_argument("straighten: negative power only for f");
            const Gen inv = (g == Gen::F) ? Gen::Finv : Gen::F;
            for (int i = 0; i < -power; ++i) letters.push_back(inv);
        }
    }
    return straighten(letters, strategy);
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [m1, c1] : terms_) {
        for (const auto& [m2, c2] : o.terms_) {
            std::vector<Gen> w = m1.letters();
            const std::vector<Gen> w2 = m2.letters();
            w.insert(w.end(), w2.begin(), w2.end());
            const Poly reduced = straighten(w);
            for (const auto& [m, c] : reduced.terms()) out.add_term(m, c1 * c2 * c);
        }
    }
    return out;
}

AlgebraElement AlgebraElement::gen(Gen g, int power) {
    if (power == 0) return one();
    if (power < 0 && g != Gen::F && g != Gen::Finv)
        throw std::invalid_argument("AlgebraElement::gen: negative power only for f");
    return {0, Poly::term(Monomial::of(g, power), Scalar::one())};
}

AlgebraElement AlgebraElement::delta() {
    Poly p;
    p.add_term(Monomial{0, 1, 0, 0, 1}, Scalar::one());
    p.add_term(Monomial{0, 0, 1, 1, 0}, -Scalar::r(-1));
    return {0, p};
}

AlgebraElement AlgebraElement::delta_inv(std::uint32_t p) {
    return {p, Poly::unit()};
}

AlgebraElement AlgebraElement::quantum_determinant() {
    return delta() * gen(Gen::F);
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    return {delta_pow_ + o.delta_pow_, poly_ * o.poly_};
}

namespace {

Poly delta_power_times(const Poly& p, std::uint32_t n) {
    Poly out = p;
    const Poly dp = AlgebraElement::delta().poly();
    for (std::uint32_t i = 0; i < n; ++i) out = out * dp;
    return out;
}

}  // namespace

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    const std::uint32_t p = std::max(delta_pow_, o.delta_pow_);
    Poly left = delta_power_times(poly_, p - delta_pow_);
    Poly right = delta_power_times(o.poly_, p - o.delta_pow_);
    return {p, left + right};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    return *this + o.scaled(-Scalar::one());
}

bool AlgebraElement::eq(const AlgebraElement& o) const {
    const Poly left = delta_power_times(poly_, o.delta_pow_);
    const Poly right = delta_power_times(o.poly_, delta_pow_);
    return left.eq(right);
}

std::optional<Poly> divide_by_delta(const Poly& p) {
    // Greedy multivariate division. The leading monomial of delta * q is the
    // exponent sum (the bc term of delta is deg-lex smaller), so cancelling
    // the current leading term strictly shrinks it and the loop terminates.
    Poly rem = p;
    Poly quot;
    const Poly dp = AlgebraElement::delta().poly();
    while (!rem.is_zero()) {
        const auto& [lead, coeff] = *rem.terms().rbegin();
        if (lead.a == 0 || lead.d == 0) return std::nullopt;
        Monomial q = lead;
        --q.a;
        --q.d;
        // Straightening scales the product's leading coefficient, so divide
        // by the coefficient delta * q actually produces there.
        const Poly dq = dp * Poly::term(q, Scalar::one());
        const auto& [dq_lead, dq_coeff] = *dq.terms().rbegin();
        if (!(dq_lead == lead)) return std::nullopt;
        const Scalar factor = coeff * dq_coeff.inv();
        quot = quot + Poly::term(q, factor);
        rem = rem - dq.scaled(factor);
    }
    return quot;
}

AlgebraElement AlgebraElement::normalized() const {
    std::uint32_t p = delta_pow_;
    Poly poly = poly_;
    while (p > 0) {
        auto q = divide_by_delta(poly);
        if (!q) break;
        poly = std::move(*q);
        --p;
    }
    return {p, poly};
}

std::string AlgebraElement::to_string() const {
    std::ostringstream os;
    if (delta_pow_ > 0) {
        os << "delta^-" << delta_pow_ << " * ";
    }
    os << "( " << poly_.to_string() << " )";
    return os.str();
}

AlgebraElement act_f(const AlgebraElement& x) {
    Poly out;
    for (const auto& [m, c] : x.poly().terms()) {
        const int sexp = static_cast<int>(m.b) - static_cast<int>(m.c);
        out.add_term(m, c * Scalar::s(1).pow(sexp));
    }
    return {x.delta_pow(), out};
}

namespace {

std::vector<DefiningRelation> make_defining_relations() {
    using enum Gen;
    auto two = [](Gen x, Gen y) { return std::vector<Gen>{x, y}; };
    std::vector<DefiningRelation> rels;
    auto add = [&](std::string name, std::vector<std::pair<std::vector<Gen>, Scalar>> combo) {
        DefiningRelation rel;
        rel.name = std::move(name);
        for (auto& [w, c] : combo) rel.combo.emplace(std::move(w), std::move(c));
        rels.push_back(std::move(rel));
    };
    add("ab = r^-1 ba", {{two(A, B), Scalar::one()}, {two(B, A), -Scalar::r(-1)}});
    add("ac = r^-1 ca", {{two(A, C), Scalar::one()}, {two(C, A), -Scalar::r(-1)}});
    add("bd = r^-1 db", {{two(B, D), Scalar::one()}, {two(D, B), -Scalar::r(-1)}});
    add("cd = r^-1 dc", {{two(C, D), Scalar::one()}, {two(D, C), -Scalar::r(-1)}});
    add("bc = cb", {{two(B, C), Scalar::one()}, {two(C, B), -Scalar::one()}});
    add("[a,d] = (r^-1 - r) bc",
        {{two(A, D), Scalar::one()},
         {two(D, A), -Scalar::one()},
         {two(B, C), -(Scalar::r(-1) - Scalar::r(1))}});
    add("af = fa", {{two(A, F), Scalar::one()}, {two(F, A), -Scalar::one()}});
    add("cf = s fc", {{two(C, F), Scalar::one()}, {two(F, C), -Scalar::s(1)}});
    add("bf = s^-1 fb", {{two(B, F), Scalar::one()}, {two(F, B), -Scalar::s(-1)}});
    add("df = fd", {{two(D, F), Scalar::one()}, {two(F, D), -Scalar::one()}});
    return rels;
}

}  // namespace

AlgebraElement DefiningRelation::element() const {
    AlgebraElement out = AlgebraElement::zero();
    for (const auto& [w, c] : combo)
        out = out + AlgebraElement::from_poly(straighten(w)).scaled(c);
    return out;
}

const std::vector<DefiningRelation>& defining_relations() {
    static const std::vector<DefiningRelation> rels = make_defining_relations();
    return rels;
}

bool check_smash_consistency() {
    const AlgebraElement f = AlgebraElement::gen(Gen::F);
    for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D}) {
        const AlgebraElement x = AlgebraElement::gen(g);
        if (!(f * x).eq(act_f(x) * f)) return false;
    }
    return true;
}

TensorElement TensorElement::unit() {
    TensorElement t;
    t.add_term({}, {}, Scalar::one());
    return t;
}

TensorElement TensorElement::simple(const AlgebraElement& left, const AlgebraElement& right) {
    TensorElement t;
    for (const auto& [ml, cl] : left.poly().terms())
        for (const auto& [mr, cr] : right.poly().terms())
            t.add_term({left.delta_pow(), ml}, {right.delta_pow(), mr}, cl * cr);
    return t;
}

void TensorElement::add_term(const Leg& l, const Leg& r, const Scalar& c) {
    if (c.is_zero()) return;
    const std::pair<Leg, Leg> key{l, r};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    TensorElement out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    TensorElement out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out;
    if (c.is_zero()) return out;
    for (const auto& [key, k] : terms_) out.add_term(key.first, key.second, k * c);
    return out;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement out;
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : o.terms_) {
            std::vector<Gen> wl = k1.first.mono.letters();
            {
                const auto more = k2.first.mono.letters();
                wl.insert(wl.end(), more.begin(), more.end());
            }
            std::vector<Gen> wr = k1.second.mono.letters();
            {
                const auto more = k2.second.mono.letters();
                wr.insert(wr.end(), more.begin(), more.end());
            }
            const Poly left = straighten(wl);
            const Poly right = straighten(wr);
            const Scalar c = c1 * c2;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    out.add_term({k1.first.delta_pow + k2.first.delta_pow, ml},
                                 {k1.second.delta_pow + k2.second.delta_pow, mr}, c * cl * cr);
        }
    }
    return out;
}

bool TensorElement::eq(const TensorElement& o) const {
    // Align both sides to common per-leg delta powers, then compare term-wise.
    const TensorElement diff = *this - o;
    std::uint32_t pl = 0, pr = 0;
    for (const auto& [key, c] : diff.terms_) {
        pl = std::max(pl, key.first.delta_pow);
        pr = std::max(pr, key.second.delta_pow);
    }
    struct MonoPairLess {
        bool operator()(const std::pair<Monomial, Monomial>& x,
                        const std::pair<Monomial, Monomial>& y) const {
            MonomialLess less;
            if (less(x.first, y.first)) return true;
            if (less(y.first, x.first)) return false;
            return less(x.second, y.second);
        }
    };
    std::map<std::pair<Monomial, Monomial>, Scalar, MonoPairLess> acc;
    const Poly dp = AlgebraElement::delta().poly();
    for (const auto& [key, c] : diff.terms_) {
        Poly left = Poly::term(key.first.mono, Scalar::one());
        for (std::uint32_t i = key.first.delta_pow; i < pl; ++i) left = left * dp;
        Poly right = Poly::term(key.second.mono, Scalar::one());
        for (std::uint32_t i = key.second.delta_pow; i < pr; ++i) right = right * dp;
        for (const auto& [ml, cl] : left.terms()) {
            for (const auto& [mr, cr] : right.terms()) {
                auto it = acc.find({ml, mr});
                const Scalar add = c * cl * cr;
                if (it == acc.end()) {
                    if (!add.is_zero()) acc.emplace(std::pair{ml, mr}, add);
                } else {
                    it->second += add;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
    }
    return acc.empty();
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto leg_str = [](const Leg& leg) {
        std::string s;
        if (leg.delta_pow > 0) s += "delta^-" + std::to_string(leg.delta_pow) + " ";
        s += leg.mono.to_string();
        return s;
    };
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << leg_str(key.first) << " (x) " << leg_str(key.second) << ") : "
           << c.to_string();
    }
    return os.str();
}

}  // namespace ars
