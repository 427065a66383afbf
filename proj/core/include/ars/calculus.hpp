#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ars/algebra.hpp"
#include "ars/dual.hpp"
#include "ars/report.hpp"

namespace ars {

/// Element of the one-form bimodule: left coefficients over the nine basis
/// forms w_ij. Named aliases (0-indexed): w0 = w_00, w1 = w_11, w+ = w_12,
/// w- = w_21, w2 = w_22.
class OneForm {
public:
    OneForm() = default;

    const AlgebraElement& coeff(int i, int j) const { return coeffs_[i][j]; }
    void set_coeff(int i, int j, AlgebraElement v) { coeffs_[i][j] = std::move(v); }
    void add_coeff(int i, int j, const AlgebraElement& v) {
        coeffs_[i][j] = coeffs_[i][j] + v;
    }

    OneForm operator+(const OneForm& o) const;
    OneForm scaled_left(const AlgebraElement& x) const;
    OneForm scaled(const Scalar& c) const;

    bool eq(const OneForm& o) const;
    bool is_zero() const;
    /// Indices (i, j) with nonzero coefficient.
    std::vector<std::pair<int, int>> support() const;

    std::string to_string() const;

    static const char* basis_name(int i, int j);

private:
    std::array<std::array<AlgebraElement, 3>, 3> coeffs_;
};

/// Element of A (x) Gamma with left-invariant basis forms.
class TensorForm {
public:
    const TensorElement& coeff(int i, int j) const { return coeffs_[i][j]; }
    void add_coeff(int i, int j, const TensorElement& t) {
        coeffs_[i][j] = coeffs_[i][j] + t;
    }
    bool eq(const TensorForm& o) const;

private:
    std::array<std::array<TensorElement, 3>, 3> coeffs_;
};

/// First-order differential calculus over a fixed pairing convention.
class Calculus {
public:
    explicit Calculus(const PairingConvention& conv = PairingConvention::defaults())
        : lf_(conv) {}

    const LFunctionals& functionals() const { return lf_; }
    const PairingConvention& convention() const { return lf_.convention(); }

    /// w_ij * x commuted to left-coefficient form: the coefficients are
    /// x_(1) < l+_{ki}, S(x_(2)) > < l-_{jl}, x_(3) > over the basis w_kl.
    OneForm right_mul_basis(int i, int j, const AlgebraElement& x) const;
    /// Right action extended to a whole form.
    OneForm right_mul(const OneForm& w, const AlgebraElement& x) const;

    /// d(x) = sum_ij (chi_ij * x) w_ij.
    OneForm exterior_d(const AlgebraElement& x) const;

    /// d(xy) == d(x) y + x d(y).
    bool check_leibniz(const AlgebraElement& x, const AlgebraElement& y) const;

    /// (id (x) d) Delta(x) == Delta_L(d x), basis forms left-invariant.
    bool check_left_covariance(const AlgebraElement& x) const;

private:
    LFunctionals lf_;
};

/// One reference line of the expected differential table.
struct ReferenceTerm {
    int i, j;              // basis form index
    Gen coefficient_gen;   // the generator appearing as the left coefficient
    Scalar coefficient;    // scalar multiplier
};
struct ReferenceDifferential {
    Gen generator;
    std::vector<ReferenceTerm> terms;
};

/// The expected one-parameter differential table for the five generators.
const std::vector<ReferenceDifferential>& reference_differentials();

/// Per-term comparison outcome against the reference table.
struct TermComparison {
    int i = 0, j = 0;
    enum class Status { Exact, Ratio, Extra, Missing } status = Status::Exact;
    std::string computed;
    std::string expected;
    std::optional<Scalar> ratio;   // computed / expected when proportional
};

struct DifferentialReport {
    CheckResult result;
    PairingConvention convention;
    bool support_exact = true;
    std::size_t mismatched_terms = 0;        // every non-exact term
    std::size_t ratio_terms = 0;             // mismatches that are clean ratios
    bool ratios_are_r_monomials = true;      // each ratio a monomial in r alone
    std::vector<std::pair<Gen, std::vector<TermComparison>>> comparisons;
};

/// Computes the exterior derivative of every generator under the convention
/// and compares it term-by-term against the reference table.
DifferentialReport check_reference_differentials(const PairingConvention& conv);

struct SearchReport {
    std::vector<DifferentialReport> outcomes;   // all 8 conventions
    std::vector<PairingConvention> exact;       // conventions matching exactly
    /// Best convention when none is exact: exact support first, then fewest
    /// mismatching terms.
    std::optional<DifferentialReport> best;
    CheckResult result;
};

/// Runs check_reference_differentials over the 8 discrete conventions.
SearchReport convention_search();

/// Canonical text of a ratio: clean monomial values render as c r^i s^j even
/// when the fraction carries a common polynomial factor.
std::string canonical_ratio_text(const Scalar& v);

/// The four cross-consistency identities: each d(xy - c yx) is expanded by
/// the Leibniz rule term-wise before the argument is normalized and must be
/// the zero one-form; a deliberately wrong scalar must give a nonzero form.
CheckResult check_cross_consistency(const PairingConvention& conv);

/// Row of the commutation table: w_ij * g in canonical text.
struct OmegaCommutationRow {
    int i, j;
    Gen generator;
    std::string value;
};
std::vector<OmegaCommutationRow> omega_commutation_table(const PairingConvention& conv);

}  // namespace ars
