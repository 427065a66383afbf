#pragma once

// Brute-force reduction oracle, independent of the engine's strategy loop:
// every reducible position of a word is rewritten and all branches must agree.
// Exponential, so only for short test words.

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ars/algebra.hpp"

namespace ars::testing {

struct NaiveRule {
    Scalar coeff;
    std::vector<Gen> replacement;
};

inline std::optional<std::vector<NaiveRule>> naive_rule(Gen x, Gen y) {
    using enum Gen;
    if ((x == F && y == Finv) || (x == Finv && y == F))
        return std::vector<NaiveRule>{{Scalar::one(), {}}};
    if (x == F || x == Finv) return std::nullopt;
    if (y == F || y == Finv) {
        const int sgn = (y == F) ? 1 : -1;
        switch (x) {
            case A: return std::vector<NaiveRule>{{Scalar::one(), {y, A}}};
            case B: return std::vector<NaiveRule>{{Scalar::s(-sgn), {y, B}}};
            case C: return std::vector<NaiveRule>{{Scalar::s(sgn), {y, C}}};
            case D: return std::vector<NaiveRule>{{Scalar::one(), {y, D}}};
            default: return std::nullopt;
        }
    }
    if (x == B && y == A) return std::vector<NaiveRule>{{Scalar::r(1), {A, B}}};
    if (x == C && y == A) return std::vector<NaiveRule>{{Scalar::r(1), {A, C}}};
    if (x == D && y == B) return std::vector<NaiveRule>{{Scalar::r(1), {B, D}}};
    if (x == D && y == C) return std::vector<NaiveRule>{{Scalar::r(1), {C, D}}};
    if (x == C && y == B) return std::vector<NaiveRule>{{Scalar::one(), {B, C}}};
    if (x == D && y == A)
        return std::vector<NaiveRule>{{Scalar::one(), {A, D}},
                                      {-(Scalar::r(-1) - Scalar::r(1)), {B, C}}};
    return std::nullopt;
}

class NaiveReducer {
public:
    Poly normal_form(const std::vector<Gen>& word) {
        if (auto it = memo_.find(word); it != memo_.end()) return it->second;
        std::vector<Poly> branch_results;
        for (std::size_t pos = 0; pos + 1 < word.size(); ++pos) {
            const auto rule = naive_rule(word[pos], word[pos + 1]);
            if (!rule) continue;
            Poly branch;
            for (const NaiveRule& t : *rule) {
                std::vector<Gen> next;
                next.insert(next.end(), word.begin(), word.begin() + pos);
                next.insert(next.end(), t.replacement.begin(), t.replacement.end());
                next.insert(next.end(), word.begin() + pos + 2, word.end());
                branch = branch + normal_form(next).scaled(t.coeff);
            }
            branch_results.push_back(std::move(branch));
        }
        Poly result;
        if (branch_results.empty()) {
            Monomial m;
            for (Gen g : word) {
                switch (g) {
                    case Gen::F: ++m.k; break;
                    case Gen::Finv: --m.k; break;
                    case Gen::A: ++m.a; break;
                    case Gen::B: ++m.b; break;
                    case Gen::C: ++m.c; break;
                    case Gen::D: ++m.d; break;
                }
            }
            result = Poly::term(m, Scalar::one());
        } else {
            result = branch_results.front();
            for (std::size_t i = 1; i < branch_results.size(); ++i)
                if (!result.eq(branch_results[i]))
                    throw std::logic_error("naive reducer: branches disagree (not confluent)");
        }
        memo_.emplace(word, result);
        return result;
    }

private:
    std::map<std::vector<Gen>, Poly> memo_;
};

template <typename Rng>
std::vector<Gen> random_word(Rng& rng, std::size_t max_len) {
    static constexpr Gen kGens[] = {Gen::F, Gen::Finv, Gen::A, Gen::B, Gen::C, Gen::D};
    std::vector<Gen> w;
    const std::size_t len = rng.below(max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w.push_back(kGens[rng.below(6)]);
    return w;
}

}  // namespace ars::testing
