#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ars/algebra.hpp"
#include "ars/suite.hpp"
#include "support/naive_reduce.hpp"

using namespace ars;
using ars::testing::NaiveReducer;

namespace {

AlgebraElement elem(Gen g) { return AlgebraElement::gen(g); }

AlgebraElement word_elem(std::initializer_list<Gen> w) {
    return AlgebraElement::from_poly(straighten(w));
}

}  // namespace

TEST_CASE("straightening of the defining pairs") {
    using enum Gen;
    CHECK(straighten({B, A}).eq(Poly::term(Monomial{0, 1, 1, 0, 0}, Scalar::r(1))));
    // d a -> a d - (r^-1 - r) b c
    Poly expect;
    expect.add_term(Monomial{0, 1, 0, 0, 1}, Scalar::one());
    expect.add_term(Monomial{0, 0, 1, 1, 0}, -(Scalar::r(-1) - Scalar::r(1)));
    CHECK(straighten({D, A}).eq(expect));
    CHECK(straighten({B, F}).eq(Poly::term(Monomial{1, 0, 1, 0, 0}, Scalar::s(-1))));
    CHECK(straighten({A}).eq(Poly::term(Monomial::of(Gen::A), Scalar::one())));
    CHECK(straighten({F, Finv}).eq(Poly::unit()));
}

TEST_CASE("multiplication and localization") {
    const AlgebraElement delta = AlgebraElement::delta();
    CHECK((AlgebraElement::delta_inv() * delta).eq(AlgebraElement::one()));
    CHECK((elem(Gen::D) * elem(Gen::A)).eq(word_elem({Gen::D, Gen::A})));
    // Associativity against the one-shot reduction of the flat word.
    CHECK((elem(Gen::A) * (elem(Gen::B) * elem(Gen::C)))
              .eq(word_elem({Gen::A, Gen::B, Gen::C})));
    CHECK(((elem(Gen::A) * elem(Gen::B)) * elem(Gen::C))
              .eq(word_elem({Gen::A, Gen::B, Gen::C})));
}

TEST_CASE("quantum determinant is central, D = delta f is not") {
    const AlgebraElement delta = AlgebraElement::delta();
    for (Gen g : {Gen::A, Gen::B, Gen::C, Gen::D, Gen::F, Gen::Finv})
        CHECK((delta * elem(g)).eq(elem(g) * delta));
    const AlgebraElement qdet = AlgebraElement::quantum_determinant();
    CHECK_FALSE((qdet * elem(Gen::B)).eq(elem(Gen::B) * qdet));
    CHECK(AlgebraElement::delta().eq(AlgebraElement::delta()));
}

TEST_CASE("module action of f") {
    CHECK(act_f(elem(Gen::B)).eq(elem(Gen::B).scaled(Scalar::s(1))));
    CHECK(act_f(AlgebraElement::one()).eq(AlgebraElement::one()));
    CHECK(act_f(elem(Gen::B) * elem(Gen::C)).eq(elem(Gen::B) * elem(Gen::C)));
    CHECK(act_f(AlgebraElement::delta_inv()).eq(AlgebraElement::delta_inv()));
    CHECK(check_smash_consistency());
}

TEST_CASE("strategy independence on random words") {
    SeededRng rng(101);
    for (int n = 0; n < 100; ++n) {
        const std::vector<Gen> w = ars::testing::random_word(rng, 6);
        const Poly left = straighten(w, Strategy::LeftmostFirst);
        const Poly right = straighten(w, Strategy::RightmostFirst);
        CHECK(left.eq(right));
    }
}

TEST_CASE("associativity against the naive oracle") {
    SeededRng rng(202);
    NaiveReducer oracle;
    for (int n = 0; n < 60; ++n) {
        const AlgebraElement x = random_element(rng, 2, false);
        const AlgebraElement y = random_element(rng, 2, false);
        const AlgebraElement z = random_element(rng, 2, false);
        const AlgebraElement left = (x * y) * z;
        const AlgebraElement right = x * (y * z);
        CHECK(left.eq(right));

        std::vector<Gen> flat;
        for (const AlgebraElement* e : {&x, &y, &z}) {
            const auto letters = e->poly().terms().begin()->first.letters();
            flat.insert(flat.end(), letters.begin(), letters.end());
        }
        CHECK(left.eq(AlgebraElement::from_poly(oracle.normal_form(flat))));
    }
}

TEST_CASE("classical commutativity at r0 = s0 = 1") {
    SeededRng rng(303);
    for (int n = 0; n < 40; ++n) {
        const AlgebraElement x = random_element(rng, 2, false);
        const AlgebraElement y = random_element(rng, 2, false);
        const AlgebraElement diff = x * y - y * x;
        for (const auto& [m, c] : diff.poly().terms())
            CHECK(c.specialize(Rational(1), Rational(1)) == 0);
    }
}

TEST_CASE("localization soundness") {
    SeededRng rng(404);
    for (int n = 0; n < 30; ++n) {
        const AlgebraElement x = random_element(rng, 2);
        const AlgebraElement scaled(x.delta_pow() + 1,
                                    (AlgebraElement::delta() *
                                     AlgebraElement::from_poly(x.poly()))
                                        .poly());
        CHECK(scaled.eq(x));
    }
}

TEST_CASE("optional delta division") {
    const Poly p = (AlgebraElement::delta() * AlgebraElement::gen(Gen::B)).poly();
    const auto q = divide_by_delta(p);
    REQUIRE(q.has_value());
    CHECK(q->eq(Poly::term(Monomial::of(Gen::B), Scalar::one())));
    CHECK_FALSE(divide_by_delta(Poly::term(Monomial::of(Gen::B), Scalar::one())).has_value());

    const AlgebraElement redundant(1, (AlgebraElement::delta() * AlgebraElement::gen(Gen::C)).poly());
    const AlgebraElement normal = redundant.normalized();
    CHECK(normal.delta_pow() == 0);
    CHECK(normal.eq(redundant));
    CHECK(normal.eq(AlgebraElement::gen(Gen::C)));
}

TEST_CASE("tensor square is leg-wise") {
    const TensorElement ab = TensorElement::simple(elem(Gen::A), elem(Gen::B));
    const TensorElement cd = TensorElement::simple(elem(Gen::C), elem(Gen::D));
    CHECK((ab * cd).eq(TensorElement::simple(elem(Gen::A) * elem(Gen::C),
                                             elem(Gen::B) * elem(Gen::D))));

    // Equality across different delta presentations of the legs.
    const TensorElement one_plain = TensorElement::unit();
    const TensorElement one_dressed = TensorElement::simple(
        AlgebraElement::delta_inv() * AlgebraElement::delta(), AlgebraElement::one());
    CHECK(one_plain.eq(one_dressed));
    CHECK((one_plain - one_dressed).is_zero());
}

TEST_CASE("canonical element text") {
    const AlgebraElement x(1, Poly::term(Monomial{2, 1, 1, 0, 0}, Scalar::lambda()));
    CHECK(x.to_string() == "delta^-1 * ( f^2 a b : (r^2 - 1)/(r) )");
    CHECK(AlgebraElement::zero().to_string() == "( 0 )");
}
