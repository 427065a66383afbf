#pragma once

#include <array>
#include <vector>

#include "ars/algebra.hpp"
#include "ars/report.hpp"
#include "ars/scalar.hpp"

namespace ars {

/// Fixed basis order of the 9-dimensional pair space:
/// (00),(01),(02),(10),(20),(11),(12),(21),(22).
inline constexpr std::array<std::pair<int, int>, 9> kPairOrder{
    {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}};

/// Position of the pair (i, j) in the fixed basis order.
int pair_index(int i, int j);

/// 9x9 matrix of scalars over the fixed pair basis.
class RMatrix {
public:
    RMatrix();

    const Scalar& entry(int row, int col) const { return m_[row][col]; }
    Scalar& entry(int row, int col) { return m_[row][col]; }
    const Scalar& entry_pairs(std::pair<int, int> row, std::pair<int, int> col) const {
        return m_[pair_index(row.first, row.second)][pair_index(col.first, col.second)];
    }

    RMatrix operator*(const RMatrix& o) const;
    bool eq(const RMatrix& o) const;

    static RMatrix identity();

private:
    std::array<std::array<Scalar, 9>, 9> m_;
};

/// The block R-matrix: diag(r, S^{-1}, S, R_r) with the coupling block
/// Lambda = lambda * Id between the (10),(20) rows and (01),(02) columns,
/// where S = diag(s, 1) and R_r is the standard one-parameter 4x4 block.
RMatrix build_r();

/// Exact inverse over the scalar field; throws std::domain_error when singular.
RMatrix invert(const RMatrix& m);

/// Quantum Yang-Baxter equation R12 R13 R23 = R23 R13 R12, verified as exact
/// 27x27 scalar matrices with explicit Kronecker placement of the legs.
bool check_ybe(const RMatrix& r);

/// One extracted commutation relation: a formal combination of two-letter
/// words as read off the matrix identity before any reduction.
struct ExtractedRelation {
    std::map<std::vector<Gen>, Scalar> combo;
    std::string to_string() const;
};

struct RttReport {
    CheckResult result;
    std::vector<ExtractedRelation> relations;   // distinct, leading-normalized
    std::size_t matched_defining = 0;           // defining relations recovered
};

/// Forms all 81 entries of R T1 T2 - T2 T1 R with entries in the algebra,
/// reduces each to normal form, and extracts the distinct nontrivial
/// relations seen before reduction. Passes iff every entry reduces to zero
/// and every defining relation is recovered (up to scalar) in the extracted
/// set, with every extracted relation reducing to zero.
RttReport check_rtt();

}  // namespace ars
