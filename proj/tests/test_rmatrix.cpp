#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ars/rmatrix.hpp"

using namespace ars;

TEST_CASE("entries of the built matrix") {
    const RMatrix r = build_r();
    CHECK(r.entry_pairs({0, 0}, {0, 0}).eq(Scalar::r(1)));
    CHECK(r.entry_pairs({0, 1}, {0, 1}).eq(Scalar::s(-1)));
    CHECK(r.entry_pairs({2, 1}, {1, 2}).eq(Scalar::lambda()));
    CHECK(r.entry_pairs({0, 1}, {1, 0}).is_zero());
    CHECK(r.entry_pairs({1, 0}, {0, 1}).eq(Scalar::lambda()));
    CHECK(r.entry_pairs({1, 0}, {1, 0}).eq(Scalar::s(1)));
    // 12 nonzero entries in total.
    int nonzero = 0;
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j)
            if (!r.entry(i, j).is_zero()) ++nonzero;
    CHECK(nonzero == 12);
}

TEST_CASE("inversion") {
    CHECK(invert(RMatrix::identity()).eq(RMatrix::identity()));
    const RMatrix r = build_r();
    const RMatrix rinv = invert(r);
    CHECK(rinv.entry_pairs({0, 0}, {0, 0}).eq(Scalar::r(-1)));
    CHECK(rinv.entry_pairs({1, 0}, {0, 1}).eq(-Scalar::lambda()));
    CHECK((r * rinv).eq(RMatrix::identity()));
    CHECK((rinv * r).eq(RMatrix::identity()));

    RMatrix singular;   // all zero
    CHECK_THROWS_AS(invert(singular), std::domain_error);
}

TEST_CASE("yang-baxter") {
    CHECK(check_ybe(build_r()));
    CHECK(check_ybe(RMatrix::identity()));
    RMatrix broken = build_r();
    broken.entry(pair_index(2, 1), pair_index(1, 2)) = Scalar::one();
    CHECK_FALSE(check_ybe(broken));
}

TEST_CASE("matrix commutation identity regenerates the relations") {
    const RttReport rep = check_rtt();
    CHECK(rep.result.passed);
    CHECK(rep.matched_defining == defining_relations().size());
    CHECK(rep.relations.size() == 11);
    // Every extracted relation reduces to zero in the algebra.
    for (const ExtractedRelation& rel : rep.relations) {
        AlgebraElement acc = AlgebraElement::zero();
        for (const auto& [w, c] : rel.combo)
            acc = acc + AlgebraElement::from_poly(straighten(w)).scaled(c);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("one-parameter sanity at s0 = r0") {
    // At s = r the (01),(01) entry becomes r^-1.
    const RMatrix r = build_r();
    const Rational v = r.entry_pairs({0, 1}, {0, 1}).specialize(Rational(5), Rational(5));
    CHECK(v == Rational(1, 5));
}
