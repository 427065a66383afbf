#include "ars/calculus.hpp"

#include <algorithm>
#include <sstream>

#include "ars/hopf.hpp"

namespace ars {

OneForm OneForm::operator+(const OneForm& o) const {
    OneForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.coeffs_[i][j] = coeffs_[i][j] + o.coeffs_[i][j];
    return out;
}

OneForm OneForm::scaled_left(const AlgebraElement& x) const {
    OneForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.coeffs_[i][j] = x * coeffs_[i][j];
    return out;
}

OneForm OneForm::scaled(const Scalar& c) const {
    OneForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.coeffs_[i][j] = coeffs_[i][j].scaled(c);
    return out;
}

bool OneForm::eq(const OneForm& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!coeffs_[i][j].eq(o.coeffs_[i][j])) return false;
    return true;
}

bool OneForm::is_zero() const {
    for (const auto& row : coeffs_)
        for (const auto& c : row)
            if (!c.is_zero()) return false;
    return true;
}

std::vector<std::pair<int, int>> OneForm::support() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!coeffs_[i][j].is_zero()) out.emplace_back(i, j);
    return out;
}

const char* OneForm::basis_name(int i, int j) {
    if (i == 0 && j == 0) return "w0";
    if (i == 1 && j == 1) return "w1";
    if (i == 1 && j == 2) return "w+";
    if (i == 2 && j == 1) return "w-";
    if (i == 2 && j == 2) return "w2";
    static thread_local char buf[8];
    buf[0] = 'w';
    buf[1] = '_';
    buf[2] = static_cast<char>('0' + i);
    buf[3] = static_cast<char>('0' + j);
    buf[4] = 0;
    return buf;
}

std::string OneForm::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (coeffs_[i][j].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << coeffs_[i][j].to_string() << " " << basis_name(i, j);
        }
    return os.str();
}

bool TensorForm::eq(const TensorForm& o) const {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!coeffs_[i][j].eq(o.coeffs_[i][j])) return false;
    return true;
}

OneForm Calculus::right_mul_basis(int i, int j, const AlgebraElement& x) const {
    OneForm out;
    const TensorElement dx = coproduct(x);
    for (const auto& [key, c] : dx.terms()) {
        const AlgebraElement x1(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement rest(key.second.delta_pow,
                                  Poly::term(key.second.mono, Scalar::one()));
        const TensorElement drest = coproduct(rest);
        for (const auto& [key2, c2] : drest.terms()) {
            const AlgebraElement x2(key2.first.delta_pow,
                                    Poly::term(key2.first.mono, Scalar::one()));
            const AlgebraElement x3(key2.second.delta_pow,
                                    Poly::term(key2.second.mono, Scalar::one()));
            const Mat3 p = lf_.eval_plus(antipode(x2));
            const Mat3 m = lf_.eval_minus(x3);
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l) {
                    const Scalar coeff = c * c2 * p.at(k, i) * m.at(j, l);
                    if (coeff.is_zero()) continue;
                    out.add_coeff(k, l, x1.scaled(coeff));
                }
        }
    }
    return out;
}

OneForm Calculus::right_mul(const OneForm& w, const AlgebraElement& x) const {
    OneForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (w.coeff(i, j).is_zero()) continue;
            const OneForm basis_moved = right_mul_basis(i, j, x);
            out = out + basis_moved.scaled_left(w.coeff(i, j));
        }
    return out;
}

OneForm Calculus::exterior_d(const AlgebraElement& x) const {
    OneForm out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set_coeff(i, j, lf_.star(i, j, x));
    return out;
}

bool Calculus::check_leibniz(const AlgebraElement& x, const AlgebraElement& y) const {
    const OneForm lhs = exterior_d(x * y);
    const OneForm rhs = right_mul(exterior_d(x), y) + exterior_d(y).scaled_left(x);
    return lhs.eq(rhs);
}

bool Calculus::check_left_covariance(const AlgebraElement& x) const {
    // (id (x) d) Delta(x)
    TensorForm lhs;
    const TensorElement dx_tensor = coproduct(x);
    for (const auto& [key, c] : dx_tensor.terms()) {
        const AlgebraElement x1(key.first.delta_pow, Poly::term(key.first.mono, Scalar::one()));
        const AlgebraElement x2(key.second.delta_pow,
                                Poly::term(key.second.mono, Scalar::one()));
        const OneForm dx2 = exterior_d(x2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (dx2.coeff(i, j).is_zero()) continue;
                lhs.add_coeff(i, j, TensorElement::simple(x1, dx2.coeff(i, j)).scaled(c));
            }
    }
    // Delta_L(d x): coefficients coacted on, basis forms left-invariant.
    TensorForm rhs;
    const OneForm dx = exterior_d(x);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (dx.coeff(i, j).is_zero()) continue;
            rhs.add_coeff(i, j, coproduct(dx.coeff(i, j)));
        }
    return lhs.eq(rhs);
}

const std::vector<ReferenceDifferential>& reference_differentials() {
    static const std::vector<ReferenceDifferential> table = [] {
        const Scalar rm2_minus_1 = Scalar::r(-2) - Scalar::one();
        const Scalar lam = Scalar::lambda();
        const Scalar lam2 = lam * lam;
        std::vector<ReferenceDifferential> t;
        t.push_back({Gen::A, {{1, 1, Gen::A, rm2_minus_1}, {1, 2, Gen::B, -lam}}});
        t.push_back({Gen::B,
                     {{1, 1, Gen::B, lam2}, {2, 1, Gen::A, -lam}, {2, 2, Gen::B, rm2_minus_1}}});
        t.push_back({Gen::C, {{1, 1, Gen::C, rm2_minus_1}, {1, 2, Gen::D, -lam}}});
        t.push_back({Gen::D,
                     {{1, 1, Gen::D, lam2}, {2, 1, Gen::C, -lam}, {2, 2, Gen::D, rm2_minus_1}}});
        t.push_back({Gen::F, {{0, 0, Gen::F, rm2_minus_1}}});
        return t;
    }();
    return table;
}

namespace {

// computed / expected when the two elements are proportional with a single
// scalar ratio; nullopt otherwise.
std::optional<Scalar> proportionality_ratio(const AlgebraElement& computed,
                                            const AlgebraElement& expected) {
    if (computed.delta_pow() != expected.delta_pow()) return std::nullopt;
    const auto& ct = computed.poly().terms();
    const auto& et = expected.poly().terms();
    if (ct.size() != et.size() || ct.empty()) return std::nullopt;
    std::optional<Scalar> ratio;
    auto ci = ct.begin();
    auto ei = et.begin();
    for (; ci != ct.end(); ++ci, ++ei) {
        if (!(ci->first == ei->first)) return std::nullopt;
        const Scalar r = ci->second * ei->second.inv();
        if (!ratio) {
            ratio = r;
        } else if (!ratio->eq(r)) {
            return std::nullopt;
        }
    }
    return ratio;
}

bool is_r_monomial(const Scalar& v) {
    const auto exps = v.monomial_exponents();
    return exps && exps->es == 0 && v.is_s_free_value();
}

}  // namespace

std::string canonical_ratio_text(const Scalar& v) {
    return v.to_monomial_string();
}

DifferentialReport check_reference_differentials(const PairingConvention& conv) {
    DifferentialReport rep;
    rep.convention = conv;
    rep.result.name = "differentials";
    rep.result.passed = true;

    const Calculus calc(conv);
    for (const ReferenceDifferential& ref : reference_differentials()) {
        const OneForm d = calc.exterior_d(AlgebraElement::gen(ref.generator));
        std::vector<TermComparison> comps;
        std::array<std::array<bool, 3>, 3> expected_here{};
        for (const ReferenceTerm& term : ref.terms) {
            expected_here[term.i][term.j] = true;
            TermComparison comp;
            comp.i = term.i;
            comp.j = term.j;
            const AlgebraElement expected =
                AlgebraElement::gen(term.coefficient_gen).scaled(term.coefficient);
            comp.expected = expected.to_string();
            const AlgebraElement& computed = d.coeff(term.i, term.j);
            comp.computed = computed.to_string();
            if (computed.is_zero()) {
                comp.status = TermComparison::Status::Missing;
                rep.support_exact = false;
                ++rep.mismatched_terms;
            } else if (computed.eq(expected)) {
                comp.status = TermComparison::Status::Exact;
            } else if (auto ratio = proportionality_ratio(computed, expected)) {
                comp.status = TermComparison::Status::Ratio;
                comp.ratio = *ratio;
                ++rep.mismatched_terms;
                ++rep.ratio_terms;
                if (!is_r_monomial(*ratio)) rep.ratios_are_r_monomials = false;
            } else {
                comp.status = TermComparison::Status::Ratio;
                ++rep.mismatched_terms;
                rep.ratios_are_r_monomials = false;
            }
            comps.push_back(std::move(comp));
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (expected_here[i][j] || d.coeff(i, j).is_zero()) continue;
                TermComparison comp;
                comp.i = i;
                comp.j = j;
                comp.status = TermComparison::Status::Extra;
                comp.computed = d.coeff(i, j).to_string();
                comp.expected = "0";
                comps.push_back(std::move(comp));
                rep.support_exact = false;
                ++rep.mismatched_terms;
            }
        rep.comparisons.emplace_back(ref.generator, std::move(comps));
    }
    rep.result.cases = rep.comparisons.size();
    rep.result.passed = rep.support_exact && rep.mismatched_terms == 0;
    if (!rep.result.passed) {
        rep.result.counterexample =
            "support_exact=" + std::string(rep.support_exact ? "yes" : "no") +
            ", mismatched terms=" + std::to_string(rep.mismatched_terms);
    }
    for (const auto& [g, comps] : rep.comparisons) {
        for (const TermComparison& c : comps) {
            std::string line = std::string("d") + gen_name(g) + " " +
                               OneForm::basis_name(c.i, c.j) + ": ";
            switch (c.status) {
                case TermComparison::Status::Exact: line += "exact"; break;
                case TermComparison::Status::Ratio:
                    line += "ratio " +
                            (c.ratio ? canonical_ratio_text(*c.ratio) : std::string("(none)"));
                    break;
                case TermComparison::Status::Extra: line += "extra term " + c.computed; break;
                case TermComparison::Status::Missing: line += "missing"; break;
            }
            rep.result.notes.push_back(std::move(line));
        }
    }
    return rep;
}

SearchReport convention_search() {
    SearchReport rep;
    rep.result.name = "convention-search";
    for (const PairingConvention& conv : all_conventions()) {
        DifferentialReport r = check_reference_differentials(conv);
        if (r.result.passed) rep.exact.push_back(conv);
        rep.outcomes.push_back(std::move(r));
    }
    if (rep.exact.empty()) {
        // Exact support first, then fewest mismatched terms.
        const DifferentialReport* best = nullptr;
        for (const DifferentialReport& r : rep.outcomes) {
            if (!best) {
                best = &r;
                continue;
            }
            const bool better_support = r.support_exact && !best->support_exact;
            const bool same_support = r.support_exact == best->support_exact;
            if (better_support ||
                (same_support && r.mismatched_terms < best->mismatched_terms))
                best = &r;
        }
        if (best) rep.best = *best;
    } else {
        for (const DifferentialReport& r : rep.outcomes) {
            if (r.result.passed) {
                rep.best = r;
                break;
            }
        }
    }
    rep.result.passed = false;
    if (!rep.exact.empty()) {
        rep.result.passed = true;
        rep.result.notes.push_back("exact convention(s) found: " +
                                   std::to_string(rep.exact.size()));
    } else if (rep.best) {
        rep.result.passed = rep.best->support_exact && rep.best->ratios_are_r_monomials;
        rep.result.notes.push_back("no exact convention; best = " +
                                   rep.best->convention.to_string() + " with " +
                                   std::to_string(rep.best->mismatched_terms) +
                                   " mismatched term(s), all clean r-monomial ratios: " +
                                   (rep.best->ratios_are_r_monomials ? "yes" : "no"));
        for (const std::string& n : rep.best->result.notes) rep.result.notes.push_back(n);
    }
    rep.result.cases = rep.outcomes.size();
    if (!rep.result.passed && rep.best)
        rep.result.counterexample = rep.best->result.counterexample;
    return rep;
}

CheckResult check_cross_consistency(const PairingConvention& conv) {
    CheckResult res;
    res.name = "cross-consistency";
    res.passed = true;
    const Calculus calc(conv);

    // d(xy - c yx) expanded by the Leibniz rule before normalizing: the four
    // cross identities must vanish, the deliberately wrong scalar must not.
    auto leibniz_cross = [&](Gen xg, Gen yg, const Scalar& c) {
        const AlgebraElement x = AlgebraElement::gen(xg);
        const AlgebraElement y = AlgebraElement::gen(yg);
        const OneForm dxy = calc.right_mul(calc.exterior_d(x), y) +
                            calc.exterior_d(y).scaled_left(x);
        const OneForm dyx = calc.right_mul(calc.exterior_d(y), x) +
                            calc.exterior_d(x).scaled_left(y);
        return dxy + dyx.scaled(-c);
    };

    struct Case {
        Gen x;
        Scalar c;
        const char* label;
    };
    const Case cases[] = {{Gen::A, Scalar::one(), "d(af - fa)"},
                          {Gen::C, Scalar::s(1), "d(cf - s fc)"},
                          {Gen::B, Scalar::s(-1), "d(bf - s^-1 fb)"},
                          {Gen::D, Scalar::one(), "d(df - fd)"}};
    for (const Case& k : cases) {
        if (leibniz_cross(k.x, Gen::F, k.c).is_zero()) {
            res.notes.push_back(std::string(k.label) + " = 0");
        } else {
            res.fail(std::string(k.label) + " != 0");
        }
    }
    if (!leibniz_cross(Gen::C, Gen::F, Scalar::one()).is_zero()) {
        res.notes.push_back("negative control d(cf - fc) != 0");
    } else {
        res.fail("negative control d(cf - fc) vanished");
    }
    res.cases = 5;
    return res;
}

std::vector<OmegaCommutationRow> omega_commutation_table(const PairingConvention& conv) {
    const Calculus calc(conv);
    std::vector<OmegaCommutationRow> rows;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D, Gen::F}) {
                OmegaCommutationRow row;
                row.i = i;
                row.j = j;
                row.generator = g;
                row.value = calc.right_mul_basis(i, j, AlgebraElement::gen(g)).to_string();
                rows.push_back(std::move(row));
            }
    return rows;
}

}  // namespace ars
