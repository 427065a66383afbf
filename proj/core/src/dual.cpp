#include "ars/dual.hpp"

#include <sstream>
#include <stdexcept>

#include "ars/hopf.hpp"

namespace ars {

Mat3::Mat3() {
    for (auto& row : m_)
        for (auto& e : row) e = Scalar::zero();
}

Mat3 Mat3::identity() {
    Mat3 id;
    for (int i = 0; i < 3; ++i) id.m_[i][i] = Scalar::one();
    return id;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (m_[i][k].is_zero()) continue;
            for (int j = 0; j < 3; ++j) {
                if (o.m_[k][j].is_zero()) continue;
                out.m_[i][j] += m_[i][k] * o.m_[k][j];
            }
        }
    return out;
}

Mat3 Mat3::operator+(const Mat3& o) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.m_[i][j] = m_[i][j] + o.m_[i][j];
    return out;
}

Mat3 Mat3::scaled(const Scalar& c) const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.m_[i][j] = m_[i][j] * c;
    return out;
}

Mat3 Mat3::inverse() const {
    std::array<std::array<Scalar, 6>, 3> aug;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            aug[i][j] = m_[i][j];
            aug[i][3 + j] = (i == j) ? Scalar::one() : Scalar::zero();
        }
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int row = col; row < 3; ++row)
            if (!aug[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw std::domain_error("Mat3::inverse: singular matrix");
        if (pivot != col) std::swap(aug[pivot], aug[col]);
        const Scalar ip = aug[col][col].inv();
        for (int j = 0; j < 6; ++j) aug[col][j] *= ip;
        for (int row = 0; row < 3; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            const Scalar f = aug[row][col];
            for (int j = 0; j < 6; ++j) aug[row][j] = aug[row][j] - f * aug[col][j];
        }
    }
    Mat3 out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.m_[i][j] = aug[i][3 + j];
    return out;
}

bool Mat3::eq(const Mat3& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!m_[i][j].eq(o.m_[i][j])) return false;
    return true;
}

bool Mat3::is_zero() const {
    for (const auto& row : m_)
        for (const auto& e : row)
            if (!e.is_zero()) return false;
    return true;
}

std::string Mat3::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < 3; ++i) {
        os << "[";
        for (int j = 0; j < 3; ++j) {
            if (j) os << ", ";
            os << m_[i][j].to_string();
        }
        os << "]";
        if (i < 2) os << " ";
    }
    return os.str();
}

std::string PairingConvention::to_string() const {
    std::string out;
    out += transpose_plus ? "flip" : "noflip";
    out += ",";
    out += minus_uses_inverse ? "inv" : "flipinv";
    out += ",";
    out += (star_leg == StarLeg::Second) ? "second" : "first";
    return out;
}

std::vector<PairingConvention> all_conventions() {
    std::vector<PairingConvention> out;
    for (bool tp : {true, false})
        for (bool mi : {true, false})
            for (StarLeg leg : {StarLeg::Second, StarLeg::First}) {
                PairingConvention c;
                c.transpose_plus = tp;
                c.minus_uses_inverse = mi;
                c.star_leg = leg;
                out.push_back(c);
            }
    return out;
}

const Mat3& LFunctionals::Table::image(Gen g) const {
    switch (g) {
        case Gen::F: return f;
        case Gen::Finv: return finv;
        case Gen::A: return a;
        case Gen::B: return b;
        case Gen::C: return c;
        case Gen::D: return d;
    }
    throw std::logic_error("Table::image: bad generator");
}

namespace {

struct TPos {
    Gen g;
    int c_idx;
    int d_idx;
};
constexpr std::array<TPos, 5> kTPositions{{{Gen::F, 0, 0},
                                           {Gen::A, 1, 1},
                                           {Gen::B, 1, 2},
                                           {Gen::C, 2, 1},
                                           {Gen::D, 2, 2}}};

// Generator value matrix read off the 9x9 matrix. Index pairs of the pairing
// label columns of the matrix as built; `flipped` selects the index-flipped
// form of the pairing.
Mat3 value_matrix(const RMatrix& m, int c_idx, int d_idx, bool flipped, const Scalar& norm) {
    Mat3 out;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const Scalar& v = flipped
                                  ? m.entry(pair_index(d_idx, b), pair_index(c_idx, a))
                                  : m.entry(pair_index(b, d_idx), pair_index(a, c_idx));
            if (!v.is_zero()) out.at(a, b) = v * norm;
        }
    return out;
}

}  // namespace

LFunctionals::LFunctionals(const PairingConvention& conv) : conv_(conv) {
    if (conv_.cplus.is_zero() || conv_.cminus.is_zero())
        throw std::invalid_argument("LFunctionals: c+ and c- must be nonzero");
    const RMatrix r = build_r();
    const RMatrix rinv = invert(r);
    auto fill = [&](Table& t, const RMatrix& m, bool flipped, const Scalar& norm) {
        for (const TPos& pos : kTPositions) {
            Mat3 v = value_matrix(m, pos.c_idx, pos.d_idx, flipped, norm);
            switch (pos.g) {
                case Gen::F: t.f = v; break;
                case Gen::A: t.a = v; break;
                case Gen::B: t.b = v; break;
                case Gen::C: t.c = v; break;
                case Gen::D: t.d = v; break;
                default: break;
            }
        }
        t.finv = t.f.inverse();
        const Mat3 delta_img = t.a * t.d + (t.b * t.c).scaled(-Scalar::r(-1));
        t.delta_inv = delta_img.inverse();
    };
    fill(plus_, r, conv_.transpose_plus, conv_.cplus);
    fill(minus_, rinv, !conv_.minus_uses_inverse, conv_.cminus);
}

Mat3 LFunctionals::eval_with(const Table& t, const AlgebraElement& x) const {
    Mat3 out;
    for (const auto& [m, c] : x.poly().terms()) {
        Mat3 acc = Mat3::identity();
        for (std::uint32_t i = 0; i < x.delta_pow(); ++i) acc = acc * t.delta_inv;
        for (Gen g : m.letters()) acc = acc * t.image(g);
        out = out + acc.scaled(c);
    }
    return out;
}

Mat3 LFunctionals::eval_plus(const AlgebraElement& x) const { return eval_with(plus_, x); }
Mat3 LFunctionals::eval_minus(const AlgebraElement& x) const { return eval_with(minus_, x); }

Mat3 LFunctionals::eval(char sign, const AlgebraElement& x) const {
    return sign == '+' ? eval_plus(x) : eval_minus(x);
}

const Mat3& LFunctionals::plus_image(Gen g) const { return plus_.image(g); }
const Mat3& LFunctionals::minus_image(Gen g) const { return minus_.image(g); }

Mat3 LFunctionals::g_matrix(const AlgebraElement& x) const {
    Mat3 out;
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement left(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement right(key.second.delta_pow,
                                   Poly::term(key.second.mono, Scalar::one()));
        out = out + (eval_plus(antipode(left)) * eval_minus(right)).scaled(c);
    }
    return out;
}

Scalar LFunctionals::chi_value(int i, int j, const AlgebraElement& x) const {
    Scalar v = g_matrix(x).at(i, j);
    if (i == j) v = v - counit(x);
    return v;
}

Mat3 LFunctionals::chi_matrix(const AlgebraElement& x) const {
    Mat3 g = g_matrix(x);
    const Scalar e = counit(x);
    for (int i = 0; i < 3; ++i) g.at(i, i) = g.at(i, i) - e;
    return g;
}

AlgebraElement LFunctionals::star(int i, int j, const AlgebraElement& x) const {
    AlgebraElement out = AlgebraElement::zero();
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement left(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement right(key.second.delta_pow,
                                   Poly::term(key.second.mono, Scalar::one()));
        if (conv_.star_leg == StarLeg::Second) {
            out = out + left.scaled(c * chi_value(i, j, right));
        } else {
            out = out + right.scaled(c * chi_value(i, j, left));
        }
    }
    return out;
}

Scalar convolve(const LFunctionals& lf,
                const FunctionalDescriptor& u,
                const FunctionalDescriptor& v,
                const AlgebraElement& x) {
    auto apply = [&](const FunctionalDescriptor& d, const AlgebraElement& leg) {
        if (d.kind == FunctionalDescriptor::Kind::Counit) return counit(leg);
        const AlgebraElement arg = d.s_twisted ? antipode(leg) : leg;
        return lf.eval(d.sign, arg).at(d.row, d.col);
    };
    Scalar total = Scalar::zero();
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement left(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement right(key.second.delta_pow,
                                   Poly::term(key.second.mono, Scalar::one()));
        total += c * apply(u, left) * apply(v, right);
    }
    return total;
}

namespace {

// Deterministic 64-bit generator for seeded samples.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Monomial random_monomial(SplitMix64& rng, int max_deg) {
    Monomial m;
    const int deg = static_cast<int>(rng.below(max_deg + 1));
    for (int i = 0; i < deg; ++i) {
        switch (rng.below(6)) {
            case 0: ++m.k; break;
            case 1: --m.k; break;
            case 2: ++m.a; break;
            case 3: ++m.b; break;
            case 4: ++m.c; break;
            default: ++m.d; break;
        }
    }
    return m;
}

}  // namespace

CheckResult check_representation(const PairingConvention& conv,
                                 std::uint64_t seed,
                                 std::size_t random_pairs) {
    CheckResult res;
    res.name = "representation";
    res.passed = true;

    const LFunctionals lf(conv);
    std::size_t killed = 0;
    for (const DefiningRelation& rel : defining_relations()) {
        for (char sign : {'+', '-'}) {
            Mat3 acc;
            for (const auto& [w, c] : rel.combo) {
                Mat3 prod = Mat3::identity();
                for (Gen g : w)
                    prod = prod * (sign == '+' ? lf.plus_image(g) : lf.minus_image(g));
                acc = acc + prod.scaled(c);
            }
            if (acc.is_zero()) {
                ++killed;
            } else {
                res.fail(std::string("eval_") + sign + " does not kill relation " + rel.name);
            }
        }
    }
    res.notes.push_back("relations killed: " + std::to_string(killed) + "/" +
                        std::to_string(2 * defining_relations().size()));

    SplitMix64 rng{seed};
    std::size_t mult_ok = 0;
    for (std::size_t n = 0; n < random_pairs; ++n) {
        const AlgebraElement x =
            AlgebraElement::from_poly(Poly::term(random_monomial(rng, 3), Scalar::one()));
        const AlgebraElement y =
            AlgebraElement::from_poly(Poly::term(random_monomial(rng, 3), Scalar::one()));
        bool ok = true;
        if (!lf.eval_plus(x * y).eq(lf.eval_plus(x) * lf.eval_plus(y))) ok = false;
        if (!lf.eval_minus(x * y).eq(lf.eval_minus(x) * lf.eval_minus(y))) ok = false;
        if (ok) {
            ++mult_ok;
        } else {
            res.fail("eval not multiplicative on " + x.to_string() + " , " + y.to_string());
        }
    }
    res.notes.push_back("multiplicativity on random pairs: " + std::to_string(mult_ok) + "/" +
                        std::to_string(random_pairs));
    res.cases = 2 * defining_relations().size() + random_pairs;
    return res;
}

std::vector<Monomial> monomials_up_to(int degree_bound) {
    std::vector<Monomial> out;
    for (int k = -degree_bound; k <= degree_bound; ++k) {
        const int rest = degree_bound - (k < 0 ? -k : k);
        for (int a = 0; a <= rest; ++a)
            for (int b = 0; a + b <= rest; ++b)
                for (int c = 0; a + b + c <= rest; ++c)
                    for (int d = 0; a + b + c + d <= rest; ++d) {
                        Monomial m;
                        m.k = k;
                        m.a = a;
                        m.b = b;
                        m.c = c;
                        m.d = d;
                        out.push_back(m);
                    }
    }
    return out;
}

CheckResult check_rll(const PairingConvention& conv, int degree_bound) {
    CheckResult res;
    res.name = "rll";
    res.passed = true;
    if (degree_bound < 1) throw std::invalid_argument("check_rll: degree_bound must be >= 1");

    const LFunctionals lf(conv);
    const RMatrix r = build_r();
    const std::vector<Monomial> monos = monomials_up_to(degree_bound);

    struct Relation {
        const char* label;
        char leg1_sign;   // sign carried on the first tensor leg
        char leg2_sign;   // sign carried on the second tensor leg
    };
    // Same-sign relations and the mixed one (plus on the second leg).
    const Relation relations[] = {{"plus-plus", '+', '+'},
                                  {"minus-minus", '-', '-'},
                                  {"mixed", '-', '+'}};

    for (const Relation& rel : relations) {
        std::size_t bad_entries = 0;
        std::string first_witness;
        for (const Monomial& mono : monos) {
            const AlgebraElement x =
                AlgebraElement::from_poly(Poly::term(mono, Scalar::one()));
            // Sweedler-term value pairs for both sides.
            std::vector<std::pair<Mat3, Mat3>> lhs_legs;   // (leg2-sign on x1, leg1-sign on x2)
            std::vector<std::pair<Mat3, Mat3>> rhs_legs;   // (leg1-sign on x1, leg2-sign on x2)
            std::vector<Scalar> coeffs;
            const TensorElement dx = coproduct(x);
            for (const auto& [key, c] : dx.terms()) {
                const AlgebraElement x1(key.first.delta_pow,
                                        Poly::term(key.first.mono, Scalar::one()));
                const AlgebraElement x2(key.second.delta_pow,
                                        Poly::term(key.second.mono, Scalar::one()));
                lhs_legs.emplace_back(lf.eval(rel.leg2_sign, x1), lf.eval(rel.leg1_sign, x2));
                rhs_legs.emplace_back(lf.eval(rel.leg1_sign, x1), lf.eval(rel.leg2_sign, x2));
                coeffs.push_back(c);
            }
            // Index pairs label columns of the matrix as built.
            for (const auto& [i, k] : kPairOrder) {
                for (const auto& [j, l] : kPairOrder) {
                    Scalar lhs = Scalar::zero();
                    Scalar rhs = Scalar::zero();
                    for (const auto& [m, n] : kPairOrder) {
                        const Scalar& rl = r.entry(pair_index(m, n), pair_index(i, k));
                        if (!rl.is_zero()) {
                            Scalar ba = Scalar::zero();
                            for (std::size_t t = 0; t < coeffs.size(); ++t)
                                ba += coeffs[t] * lhs_legs[t].first.at(n, l) *
                                      lhs_legs[t].second.at(m, j);
                            lhs += rl * ba;
                        }
                        const Scalar& rr = r.entry(pair_index(j, l), pair_index(m, n));
                        if (!rr.is_zero()) {
                            Scalar ab = Scalar::zero();
                            for (std::size_t t = 0; t < coeffs.size(); ++t)
                                ab += coeffs[t] * rhs_legs[t].first.at(i, m) *
                                      rhs_legs[t].second.at(k, n);
                            rhs += ab * rr;
                        }
                    }
                    if (!lhs.eq(rhs)) {
                        ++bad_entries;
                        if (first_witness.empty()) {
                            first_witness = std::string(rel.label) + " on " + mono.to_string() +
                                            " at ((" + std::to_string(i) + std::to_string(k) +
                                            "),(" + std::to_string(j) + std::to_string(l) +
                                            ")): lhs=" + lhs.to_string() +
                                            " rhs=" + rhs.to_string();
                            if (!lhs.is_zero() && !rhs.is_zero())
                                first_witness +=
                                    " (lhs/rhs = " + (lhs * rhs.inv()).to_monomial_string() + ")";
                        }
                    }
                }
            }
        }
        if (bad_entries == 0) {
            res.notes.push_back(std::string(rel.label) + ": holds on " +
                                std::to_string(monos.size()) + " monomials");
        } else {
            res.notes.push_back(std::string(rel.label) + ": " + std::to_string(bad_entries) +
                                " failing entries over " + std::to_string(monos.size()) +
                                " monomials");
            res.fail(first_witness);
        }
    }
    res.cases = monos.size() * 3;
    return res;
}

}  // namespace ars
