#include "ars/rmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ars {

int pair_index(int i, int j) {
    for (int n = 0; n < 9; ++n)
        if (kPairOrder[n].first == i && kPairOrder[n].second == j) return n;
    throw std::out_of_range("pair_index: indices out of range");
}

RMatrix::RMatrix() {
    for (auto& row : m_)
        for (auto& e : row) e = Scalar::zero();
}

RMatrix RMatrix::identity() {
    RMatrix id;
    for (int i = 0; i < 9; ++i) id.m_[i][i] = Scalar::one();
    return id;
}

RMatrix RMatrix::operator*(const RMatrix& o) const {
    RMatrix out;
    for (int i = 0; i < 9; ++i)
        for (int k = 0; k < 9; ++k) {
            if (m_[i][k].is_zero()) continue;
            for (int j = 0; j < 9; ++j) {
                if (o.m_[k][j].is_zero()) continue;
                out.m_[i][j] += m_[i][k] * o.m_[k][j];
            }
        }
    return out;
}

bool RMatrix::eq(const RMatrix& o) const {
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (!m_[i][j].eq(o.m_[i][j])) return false;
    return true;
}

RMatrix build_r() {
    RMatrix r;
    const Scalar lam = Scalar::lambda();
    auto set = [&](std::pair<int, int> row, std::pair<int, int> col, const Scalar& v) {
        r.entry(pair_index(row.first, row.second), pair_index(col.first, col.second)) = v;
    };
    set({0, 0}, {0, 0}, Scalar::r(1));
    set({0, 1}, {0, 1}, Scalar::s(-1));
    set({0, 2}, {0, 2}, Scalar::one());
    set({1, 0}, {0, 1}, lam);
    set({2, 0}, {0, 2}, lam);
    set({1, 0}, {1, 0}, Scalar::s(1));
    set({2, 0}, {2, 0}, Scalar::one());
    set({1, 1}, {1, 1}, Scalar::r(1));
    set({1, 2}, {1, 2}, Scalar::one());
    set({2, 1}, {1, 2}, lam);
    set({2, 1}, {2, 1}, Scalar::one());
    set({2, 2}, {2, 2}, Scalar::r(1));
    return r;
}

RMatrix invert(const RMatrix& m) {
    // Gauss-Jordan over the exact scalar field.
    std::array<std::array<Scalar, 18>, 9> aug;
    for (int i = 0; i < 9; ++i) {
        for (int j = 0; j < 9; ++j) {
            aug[i][j] = m.entry(i, j);
            aug[i][9 + j] = (i == j) ? Scalar::one() : Scalar::zero();
        }
    }
    for (int col = 0; col < 9; ++col) {
        int pivot = -1;
        for (int row = col; row < 9; ++row) {
            if (!aug[row][col].is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw std::domain_error("invert: singular matrix");
        if (pivot != col) std::swap(aug[pivot], aug[col]);
        const Scalar inv_p = aug[col][col].inv();
        for (int j = 0; j < 18; ++j) aug[col][j] *= inv_p;
        for (int row = 0; row < 9; ++row) {
            if (row == col || aug[row][col].is_zero()) continue;
            const Scalar factor = aug[row][col];
            for (int j = 0; j < 18; ++j)
                aug[row][j] = aug[row][j] - factor * aug[col][j];
        }
    }
    RMatrix out;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) out.entry(i, j) = aug[i][9 + j];
    return out;
}

namespace {

// 27x27 scalar matrices for the three-leg checks, stored densely.
using Mat27 = std::vector<std::vector<Scalar>>;

Mat27 zeros27() {
    return Mat27(27, std::vector<Scalar>(27, Scalar::zero()));
}

int triple_index(int i1, int i2, int i3) { return i1 * 9 + i2 * 3 + i3; }

// Places the 9x9 matrix on two of the three legs, identity on the third.
Mat27 embed(const RMatrix& r, int leg_a, int leg_b) {
    Mat27 out = zeros27();
    for (int i1 = 0; i1 < 3; ++i1)
        for (int i2 = 0; i2 < 3; ++i2)
            for (int i3 = 0; i3 < 3; ++i3)
                for (int j1 = 0; j1 < 3; ++j1)
                    for (int j2 = 0; j2 < 3; ++j2)
                        for (int j3 = 0; j3 < 3; ++j3) {
                            const int idx[3] = {i1, i2, i3};
                            const int jdx[3] = {j1, j2, j3};
                            const int spectator = 3 - leg_a - leg_b;
                            if (idx[spectator] != jdx[spectator]) continue;
                            const Scalar& v = r.entry(pair_index(idx[leg_a], idx[leg_b]),
                                                      pair_index(jdx[leg_a], jdx[leg_b]));
                            if (v.is_zero()) continue;
                            out[triple_index(i1, i2, i3)][triple_index(j1, j2, j3)] = v;
                        }
    return out;
}

Mat27 mul27(const Mat27& x, const Mat27& y) {
    Mat27 out = zeros27();
    for (int i = 0; i < 27; ++i)
        for (int k = 0; k < 27; ++k) {
            if (x[i][k].is_zero()) continue;
            for (int j = 0; j < 27; ++j) {
                if (y[k][j].is_zero()) continue;
                out[i][j] += x[i][k] * y[k][j];
            }
        }
    return out;
}

}  // namespace

bool check_ybe(const RMatrix& r) {
    const Mat27 r12 = embed(r, 0, 1);
    const Mat27 r13 = embed(r, 0, 2);
    const Mat27 r23 = embed(r, 1, 2);
    const Mat27 lhs = mul27(mul27(r12, r13), r23);
    const Mat27 rhs = mul27(mul27(r23, r13), r12);
    for (int i = 0; i < 27; ++i)
        for (int j = 0; j < 27; ++j)
            if (!lhs[i][j].eq(rhs[i][j])) return false;
    return true;
}

namespace {

std::optional<Gen> t_entry(int i, int j) {
    if (i == 0 && j == 0) return Gen::F;
    if (i == 1 && j == 1) return Gen::A;
    if (i == 1 && j == 2) return Gen::B;
    if (i == 2 && j == 1) return Gen::C;
    if (i == 2 && j == 2) return Gen::D;
    return std::nullopt;
}

struct WordComboLess {
    bool operator()(const std::map<std::vector<Gen>, Scalar>& x,
                    const std::map<std::vector<Gen>, Scalar>& y) const {
        auto xi = x.begin();
        auto yi = y.begin();
        for (; xi != x.end() && yi != y.end(); ++xi, ++yi) {
            if (xi->first != yi->first) return xi->first < yi->first;
            const std::string xs = xi->second.to_string();
            const std::string ys = yi->second.to_string();
            if (xs != ys) return xs < ys;
        }
        return x.size() < y.size();
    }
};

void combo_add(std::map<std::vector<Gen>, Scalar>& combo, std::vector<Gen> w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = combo.find(w);
    if (it == combo.end()) {
        combo.emplace(std::move(w), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) combo.erase(it);
    }
}

std::map<std::vector<Gen>, Scalar> normalize_combo(const std::map<std::vector<Gen>, Scalar>& combo) {
    // Divide through by the coefficient of the lex-largest word.
    const Scalar lead = combo.rbegin()->second;
    std::map<std::vector<Gen>, Scalar> out;
    const Scalar inv = lead.inv();
    for (const auto& [w, c] : combo) out.emplace(w, c * inv);
    return out;
}

AlgebraElement combo_element(const std::map<std::vector<Gen>, Scalar>& combo) {
    AlgebraElement out = AlgebraElement::zero();
    for (const auto& [w, c] : combo)
        out = out + AlgebraElement::from_poly(straighten(w)).scaled(c);
    return out;
}

bool combos_match(const std::map<std::vector<Gen>, Scalar>& x,
                  const std::map<std::vector<Gen>, Scalar>& y) {
    // Equal as formal combinations up to an overall scalar.
    if (x.size() != y.size()) return false;
    auto xn = normalize_combo(x);
    auto yn = normalize_combo(y);
    auto xi = xn.begin();
    auto yi = yn.begin();
    for (; xi != xn.end(); ++xi, ++yi) {
        if (xi->first != yi->first || !xi->second.eq(yi->second)) return false;
    }
    return true;
}

}  // namespace

std::string ExtractedRelation::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : combo) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << "*";
        for (Gen g : w) os << gen_name(g);
    }
    return os.str();
}

RttReport check_rtt() {
    RttReport report;
    report.result.name = "rtt";
    report.result.passed = true;

    const RMatrix r = build_r();
    // Index pairs in the commutation identities label columns of the matrix as
    // built; the contractions below follow that convention.
    std::vector<std::map<std::vector<Gen>, Scalar>> raw;
    std::size_t entries_checked = 0;
    for (const auto& [i, k] : kPairOrder) {
        for (const auto& [j, l] : kPairOrder) {
            std::map<std::vector<Gen>, Scalar> combo;
            for (const auto& [m, n] : kPairOrder) {
                const Scalar& c_left = r.entry(pair_index(m, n), pair_index(i, k));
                if (!c_left.is_zero()) {
                    const auto g1 = t_entry(m, j);
                    const auto g2 = t_entry(n, l);
                    if (g1 && g2) combo_add(combo, {*g1, *g2}, c_left);
                }
                const Scalar& c_right = r.entry(pair_index(j, l), pair_index(m, n));
                if (!c_right.is_zero()) {
                    const auto g1 = t_entry(k, n);
                    const auto g2 = t_entry(i, m);
                    if (g1 && g2) combo_add(combo, {*g1, *g2}, -c_right);
                }
            }
            ++entries_checked;
            if (combo.empty()) continue;
            if (!combo_element(combo).is_zero()) {
                report.result.fail("entry ((" + std::to_string(i) + std::to_string(k) + "),(" +
                                   std::to_string(j) + std::to_string(l) +
                                   ")) does not reduce to zero");
            }
            raw.push_back(std::move(combo));
        }
    }
    report.result.cases = entries_checked;

    // Distinct relations up to an overall scalar, leading-normalized.
    std::map<std::map<std::vector<Gen>, Scalar>, bool, WordComboLess> seen;
    for (const auto& combo : raw) {
        const auto n = normalize_combo(combo);
        if (!seen.count(n)) {
            seen.emplace(n, true);
            report.relations.push_back({n});
        }
    }

    for (const DefiningRelation& rel : defining_relations()) {
        const bool found = std::any_of(report.relations.begin(), report.relations.end(),
                                       [&](const ExtractedRelation& e) {
                                           return combos_match(e.combo, rel.combo);
                                       });
        if (found) {
            ++report.matched_defining;
        } else {
            report.result.fail("defining relation not recovered: " + rel.name);
        }
    }
    report.result.notes.push_back("distinct extracted relations: " +
                                  std::to_string(report.relations.size()));
    report.result.notes.push_back("defining relations recovered: " +
                                  std::to_string(report.matched_defining) + "/" +
                                  std::to_string(defining_relations().size()));
    return report;
}

}  // namespace ars
