#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ars/algebra.hpp"
#include "ars/calculus.hpp"
#include "ars/dual.hpp"
#include "ars/report.hpp"
#include "ars/scalar.hpp"

namespace ars {

/// Deterministic 64-bit generator used for every seeded sample in the suite.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

Monomial random_monomial(SeededRng& rng, int max_degree);
/// Random monomial element, occasionally carrying a delta^{-1} power.
AlgebraElement random_element(SeededRng& rng, int max_degree, bool allow_delta_inv = true);

/// How the suite decides scalar identities: exactly, or at a rational point.
struct EqOracle {
    bool numeric = false;
    Rational r0{1};
    Rational s0{1};

    bool scalar_is_zero(const Scalar& v) const;
    bool scalar_eq(const Scalar& x, const Scalar& y) const;
    bool element_is_zero(const AlgebraElement& x) const;
    bool element_eq(const AlgebraElement& x, const AlgebraElement& y) const;
    bool oneform_eq(const OneForm& x, const OneForm& y) const;
};

enum class SuiteMode : std::uint8_t { Symbolic, Specialized };
enum class OutputFormat : std::uint8_t { Markdown, Json };

/// Which pairing convention the convention-sensitive checks use.
struct ConventionChoice {
    bool search = false;
    PairingConvention convention = PairingConvention::defaults();
};

struct SuiteConfig {
    SuiteMode mode = SuiteMode::Symbolic;
    std::optional<Rational> r0;
    std::optional<Rational> s0;
    int degree_bound = 3;
    std::uint64_t seed = 1;
    ConventionChoice convention;
    OutputFormat output = OutputFormat::Markdown;
    std::set<std::string> checks;   // empty set = all
    bool timing = false;

    /// Throws std::invalid_argument when ill-formed (unknown check names,
    /// missing or invalid specialization point).
    void validate() const;
};

/// Names of every available check, in execution (= report) order.
const std::vector<std::string>& all_check_names();

struct SuiteReport {
    SuiteConfig config;
    std::vector<CheckResult> checks;   // ordered by check name
    bool verdict = true;
};

/// Executes the selected checks and merges the results deterministically.
SuiteReport run_suite(const SuiteConfig& config);

std::string render_markdown(const SuiteReport& report);
std::string render_json(const SuiteReport& report);

/// Emits the pairing tables, the one-form commutation table, the differential
/// comparison table and the extracted commutation-relation list.
std::string report_tables(const SuiteConfig& config);
std::string report_tables_json(const SuiteConfig& config);

}  // namespace ars
