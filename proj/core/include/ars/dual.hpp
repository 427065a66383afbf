#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ars/algebra.hpp"
#include "ars/report.hpp"
#include "ars/rmatrix.hpp"

namespace ars {

/// 3x3 scalar matrix: the value of a matrix of functionals on one element.
class Mat3 {
public:
    Mat3();
    static Mat3 identity();

    const Scalar& at(int i, int j) const { return m_[i][j]; }
    Scalar& at(int i, int j) { return m_[i][j]; }

    Mat3 operator*(const Mat3& o) const;
    Mat3 operator+(const Mat3& o) const;
    Mat3 scaled(const Scalar& c) const;
    /// Exact inverse; throws std::domain_error when singular.
    Mat3 inverse() const;
    bool eq(const Mat3& o) const;
    bool is_zero() const;
    std::string to_string() const;

private:
    std::array<std::array<Scalar, 3>, 3> m_;
};

using RepMatrix = Mat3;

/// Which Sweedler leg the star action consumes.
enum class StarLeg : std::uint8_t { Second, First };

/// Discrete choices resolving how the pairing reads the R-matrix indices,
/// plus the free normalizations. The default is the literal reading; the
/// calculus module searches the whole space.
struct PairingConvention {
    bool transpose_plus = true;       // index flip on the plus pairing
    bool minus_uses_inverse = true;   // plain inverse (vs flip-conjugated) for minus
    StarLeg star_leg = StarLeg::Second;
    Scalar cplus = Scalar::one();
    Scalar cminus = Scalar::one();

    static PairingConvention defaults() { return {}; }
    std::string to_string() const;
};

/// Enumerates the 8 discrete conventions (c+ = c- = 1).
std::vector<PairingConvention> all_conventions();

/// The two matrix functionals realized extensionally: generator value tables
/// read off the R-matrix per the convention, extended multiplicatively to the
/// whole algebra (f^{-1} and delta^{-1} map to matrix inverses).
class LFunctionals {
public:
    explicit LFunctionals(const PairingConvention& conv = PairingConvention::defaults());

    const PairingConvention& convention() const { return conv_; }

    Mat3 eval_plus(const AlgebraElement& x) const;
    Mat3 eval_minus(const AlgebraElement& x) const;
    Mat3 eval(char sign, const AlgebraElement& x) const;

    /// Generator value table for the report emitters.
    const Mat3& plus_image(Gen g) const;
    const Mat3& minus_image(Gen g) const;

    /// g = S(L+) L- evaluated on x through the coproduct.
    Mat3 g_matrix(const AlgebraElement& x) const;
    /// chi_ij = S(l+_{ik}) l-_{kj} - delta_ij eps, evaluated on x.
    Scalar chi_value(int i, int j, const AlgebraElement& x) const;
    /// Full chi matrix on x.
    Mat3 chi_matrix(const AlgebraElement& x) const;
    /// Convolution action chi_ij * x (leg choice per the convention).
    AlgebraElement star(int i, int j, const AlgebraElement& x) const;

private:
    struct Table {
        Mat3 f, finv, a, b, c, d, delta_inv;
        const Mat3& image(Gen g) const;
    };
    Mat3 eval_with(const Table& t, const AlgebraElement& x) const;

    PairingConvention conv_;
    Table plus_;
    Table minus_;
};

/// Matrix-entry descriptor for the convolution product, optionally twisted by
/// the antipode; the counit is included as a degenerate descriptor.
struct FunctionalDescriptor {
    enum class Kind : std::uint8_t { Entry, Counit } kind = Kind::Entry;
    char sign = '+';
    int row = 0;
    int col = 0;
    bool s_twisted = false;

    static FunctionalDescriptor entry(char sign, int row, int col, bool s_twisted = false) {
        return {Kind::Entry, sign, row, col, s_twisted};
    }
    static FunctionalDescriptor eps() { return {Kind::Counit, '+', 0, 0, false}; }
};

/// (u v)(x) = sum u(x_(1)) v(x_(2)) over the coproduct of x.
Scalar convolve(const LFunctionals& lf,
                const FunctionalDescriptor& u,
                const FunctionalDescriptor& v,
                const AlgebraElement& x);

/// Verifies that both evaluations kill every defining relation at the matrix
/// level and that eval is multiplicative on seeded random pairs.
CheckResult check_representation(const PairingConvention& conv,
                                 std::uint64_t seed = 1,
                                 std::size_t random_pairs = 100);

/// All normal monomials with |k| + i + j + l + m <= degree_bound.
std::vector<Monomial> monomials_up_to(int degree_bound);

/// Evaluates both sides of the three commutation relations of the dual
/// matrices (same-sign plus/minus and the mixed one) as functionals on every
/// monomial of total degree <= degree_bound; passes iff all entries agree.
CheckResult check_rll(const PairingConvention& conv, int degree_bound);

}  // namespace ars
