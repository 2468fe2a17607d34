#include "nsize/density.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace nsize;

namespace {
const SetExpr S = SetExpr::super_exponential();
}

TEST_CASE("arithmetic progressions have density 1/a") {
    CHECK(natural_density(SetExpr::arith_prog(5, 2)) ==
          DensityValue::exact(Rational(1, 5)));
    CHECK(natural_density(SetExpr::evens()) == DensityValue::exact(Rational(1, 2)));
    CHECK(natural_density(SetExpr::arith_prog(1, 0)) == DensityValue::exact(1));
}

TEST_CASE("zero-density families") {
    CHECK(natural_density(SetExpr::powers(3)) == DensityValue::exact(0));
    CHECK(natural_density(SetExpr::primes()) == DensityValue::exact(0));
    CHECK(natural_density(SetExpr::finite({1, 2, 3, 4})) == DensityValue::exact(0));
    CHECK(natural_density(SetExpr::cofinite({9})) == DensityValue::exact(1));
}

TEST_CASE("block sets have no natural density, only bounds") {
    CHECK(natural_density(S) == DensityValue::bounds(0, 1));
    CHECK(natural_density(SetExpr::bit_length_odd()) ==
          DensityValue::bounds(Rational(1, 3), Rational(2, 3)));
    CHECK(natural_density(SetExpr::leading_digit(1)) ==
          DensityValue::bounds(Rational(1, 9), Rational(5, 9)));
}

TEST_CASE("complement law") {
    const DensityValue d = natural_density(~SetExpr::arith_prog(4, 1));
    CHECK(d == DensityValue::exact(Rational(3, 4)));
    const DensityValue b = natural_density(~SetExpr::leading_digit(1));
    CHECK(b == DensityValue::bounds(Rational(4, 9), Rational(8, 9)));
}

TEST_CASE("finite-union additivity on disjoint decided classes") {
    const DensityValue d =
        natural_density(SetExpr::arith_prog(4, 0) | SetExpr::arith_prog(4, 1));
    CHECK(d == DensityValue::exact(Rational(1, 2)));
    const DensityValue e =
        natural_density(SetExpr::arith_prog(6, 1) | SetExpr::arith_prog(4, 2));
    CHECK(e == DensityValue::exact(Rational(1, 6) + Rational(1, 4)));
}

TEST_CASE("zero-density absorption") {
    CHECK(natural_density(SetExpr::evens() | SetExpr::powers(2)) ==
          DensityValue::exact(Rational(1, 2)));
    CHECK(natural_density(SetExpr::evens() | SetExpr::primes()) ==
          DensityValue::exact(Rational(1, 2)));
    CHECK(natural_density(S | SetExpr::powers(5)) == DensityValue::bounds(0, 1));
}

TEST_CASE("unknown stays unknown") {
    CHECK(natural_density(SetExpr::evens() & SetExpr::bit_length_odd()).kind ==
          DensityValue::Kind::Unknown);
    // intersecting with a zero-density set is decided exactly
    CHECK(natural_density(SetExpr::evens() & SetExpr::primes()) ==
          DensityValue::exact(0));
}

TEST_CASE("generalised hull equals the density picture") {
    CHECK(generalized_hull(S) == DensityValue::bounds(0, 1));
    CHECK(generalized_hull(SetExpr::odds()) == DensityValue::exact(Rational(1, 2)));
    CHECK(generalized_hull(SetExpr::full()) == DensityValue::exact(1));
}

TEST_CASE("density profile rows are exact") {
    const auto rows = density_profile(S, {BigInt(4), BigInt(16)});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].f == 2);
    CHECK(rows[0].ratio == Rational(1, 2));
    CHECK(rows[1].f == 2);
    CHECK(rows[1].ratio == Rational(1, 8));
    const auto evens = density_profile(SetExpr::evens(), {BigInt(7)});
    CHECK(evens[0].f == 3);
    CHECK(evens[0].ratio == Rational(3, 7));
    CHECK_THROWS_AS(density_profile(S, {}), precondition_error);
}

TEST_CASE("superexp sandwich at the odd boundaries") {
    // at n = 2^(2^k), k odd: 1 - n^(-1/2) <= f/n < 1 - n^(-1/2) + n^(-3/4),
    // with equality on the left exactly at k = 1 (the sum has two terms)
    const SizeSequence f = partial_sums(S);
    for (const unsigned k : {1u, 3u, 5u}) {
        const BigInt n = pow2_tower(k);
        const Rational ratio = make_rational(f.value_at(n), n);
        const Rational lower = 1 - make_rational(1, pow2(pow2(k - 1)));
        if (k == 1) {
            CHECK(ratio == lower);
        } else {
            const Rational upper = lower + make_rational(1, pow2(3 * pow2(k - 2)));
            CHECK(ratio > lower);
            CHECK(ratio < upper);
        }
    }
}

TEST_CASE("superexp sandwich at the even boundaries") {
    // at n = 2^(2^k), k even: n^(-1/2) - n^(-3/4) <= f/n < n^(-1/2),
    // with equality on the left exactly at k = 2
    const SizeSequence f = partial_sums(S);
    for (const unsigned k : {2u, 4u, 6u}) {
        const BigInt n = pow2_tower(k);
        const Rational ratio = make_rational(f.value_at(n), n);
        const Rational inv_sqrt = make_rational(1, pow2(pow2(k - 1)));
        const Rational lower = inv_sqrt - make_rational(1, pow2(3 * pow2(k - 2)));
        if (k == 2) {
            CHECK(ratio == lower);
        } else {
            CHECK(ratio > lower);
        }
        CHECK(ratio < inv_sqrt);
    }
}

TEST_CASE("bit-length block ends approach the limits") {
    const SizeSequence f = partial_sums(SetExpr::bit_length_odd());
    // even m: the ratio at n = 2^m - 1 is exactly 1/3
    for (const unsigned m : {2u, 10u, 20u, 40u}) {
        const BigInt n = pow2(m) - 1;
        CHECK(make_rational(f.value_at(n), n) == Rational(1, 3));
    }
    // odd m: within 1/(3(2^m - 1)) of 2/3
    const BigInt n39 = pow2(39) - 1;
    const Rational gap = make_rational(f.value_at(n39), n39) - Rational(2, 3);
    CHECK(gap > 0);
    CHECK(gap < Rational(1, 1'000'000'000));
}
