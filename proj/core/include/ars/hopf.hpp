#pragma once

#include <array>
#include <string>
#include <vector>

#include "ars/algebra.hpp"
#include "ars/report.hpp"

namespace ars {

/// The 3x3 matrix of generators, labelled 0..2: the (0,0) entry is f and the
/// lower 2x2 block is [[a, b], [c, d]]; every other entry is zero.
class GeneratorMatrix {
public:
    GeneratorMatrix();
    const AlgebraElement& entry(int i, int j) const { return entries_[i][j]; }

private:
    std::array<std::array<AlgebraElement, 3>, 3> entries_;
};

/// Coproduct: the algebra-map extension of Delta(T) = T (x). T on the
/// generator matrix, with f^{+-1} and delta^{-1} group-like.
TensorElement coproduct(const AlgebraElement& x);

/// Counit: multiplicative, 1 on f^{+-1}, a, d, delta^{-1} and 0 on b, c.
Scalar counit(const AlgebraElement& x);

/// Antipode: anti-algebra map with S(f) = f^{-1}, S(a) = delta^{-1} d,
/// S(b) = -delta^{-1} r b, S(c) = -delta^{-1} r^{-1} c, S(d) = delta^{-1} a.
AlgebraElement antipode(const AlgebraElement& x);

/// (eps (x) id)Delta and (id (x) eps)Delta collapsed back into the algebra.
AlgebraElement counit_left_collapse(const TensorElement& t);
AlgebraElement counit_right_collapse(const TensorElement& t);

/// m(S (x) id)Delta(x) and m(id (x) S)Delta(x).
AlgebraElement antipode_convolution_left(const AlgebraElement& x);
AlgebraElement antipode_convolution_right(const AlgebraElement& x);

/// Coassociativity witness: (Delta (x) id)Delta(x) == (id (x) Delta)Delta(x),
/// compared in the triple tensor power.
bool coassociative_on(const AlgebraElement& x);

/// Verifies coassociativity, the counit laws, both antipode identities on the
/// given samples, and that Delta and eps annihilate all defining relations.
CheckResult check_hopf_axioms(const std::vector<AlgebraElement>& samples);

/// Verifies that delta and D = delta f are group-like, eps(D) = 1, and that
/// D fails to be central (witnessed on b).
CheckResult check_grouplike();

}  // namespace ars
