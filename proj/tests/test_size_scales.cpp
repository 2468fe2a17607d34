#include "nsize/size_scales.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace nsize;

namespace {
const SetExpr S = SetExpr::super_exponential();
}

TEST_CASE("cardinality classes") {
    CHECK(cardinality(SetExpr::finite({4, 7})) == CardinalityClass::finite_card(2));
    CHECK(cardinality(S) == CardinalityClass::aleph0());
    CHECK(cardinality(SetExpr::cofinite({1})) == CardinalityClass::aleph0());
    CHECK(cardinality(SetExpr::empty()) == CardinalityClass::finite_card(0));
    CHECK_THROWS_AS(cardinality(SetExpr::evens() | SetExpr::odds()),
                    precondition_error);
}

TEST_CASE("lottery valuations") {
    CHECK(lottery_value(SetExpr::finite({1, 2, 3})) == LotteryValue::v(3));
    CHECK(lottery_value(SetExpr::cofinite({5})) == LotteryValue::vminus(1));
    CHECK(lottery_value(SetExpr::evens()) == LotteryValue::vinf());
    CHECK(lottery_value(SetExpr::empty()) == LotteryValue::v(0));
    CHECK(lottery_value(SetExpr::full()) == LotteryValue::vminus(0));
}

TEST_CASE("lottery order is the displayed chain") {
    CHECK(lottery_compare(LotteryValue::v(2), LotteryValue::vinf()) ==
          LotteryOrder::Less);
    CHECK(lottery_compare(LotteryValue::vinf(), LotteryValue::vminus(3)) ==
          LotteryOrder::Less);
    CHECK(lottery_compare(LotteryValue::v(0), LotteryValue::v(0)) ==
          LotteryOrder::Equal);
    CHECK(lottery_compare(LotteryValue::vminus(1), LotteryValue::vminus(0)) ==
          LotteryOrder::Less);
    CHECK(lottery_compare(LotteryValue::v(0), LotteryValue::vminus(0)) ==
          LotteryOrder::Less);

    // full chain V0 < ... < V100 < Vinf < V-100 < ... < V-0, pairwise
    std::vector<LotteryValue> chain;
    for (int n = 0; n <= 100; ++n) chain.push_back(LotteryValue::v(n));
    chain.push_back(LotteryValue::vinf());
    for (int n = 100; n >= 0; --n) chain.push_back(LotteryValue::vminus(n));
    for (std::size_t i = 0; i < chain.size(); ++i) {
        for (std::size_t j = 0; j < chain.size(); ++j) {
            const LotteryOrder expected = i < j   ? LotteryOrder::Less
                                          : i > j ? LotteryOrder::Greater
                                                  : LotteryOrder::Equal;
            REQUIRE(lottery_compare(chain[i], chain[j]) == expected);
        }
    }
}

TEST_CASE("complement mirror law on random classifiable sets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const SetExpr e = oracle::random_classifiable(rng);
        const LotteryValue v = lottery_value(e);
        const LotteryValue w = lottery_value(~e);
        switch (v.kind) {
            case LotteryValue::Kind::V:
                REQUIRE(w == LotteryValue::vminus(v.index));
                break;
            case LotteryValue::Kind::Vminus:
                REQUIRE(w == LotteryValue::v(v.index));
                break;
            case LotteryValue::Kind::Vinf:
                REQUIRE(w == LotteryValue::vinf());
                break;
        }
    }
}

TEST_CASE("size report for the running examples") {
    const SizeReport evens = size_report(SetExpr::evens());
    CHECK(evens.density == DensityValue::exact(Rational(1, 2)));
    CHECK(evens.lottery == LotteryValue::vinf());
    REQUIRE(evens.alpha_canonical.kind == NumerosityAnswer::Kind::Exact);
    CHECK(evens.alpha_canonical.exact ==
          AlphaExpr::alpha().scaled(Rational(1, 2)));
    CHECK(!evens.cnum_notes.empty());

    const SizeReport empty = size_report(SetExpr::empty());
    CHECK(empty.cardinality == CardinalityClass::finite_card(0));
    CHECK(empty.lottery == LotteryValue::v(0));
    CHECK(empty.density == DensityValue::exact(0));
    CHECK(empty.alpha_canonical.exact == AlphaExpr());

    const SizeReport s = size_report(S);
    CHECK(s.density == DensityValue::bounds(0, 1));
    CHECK(s.lottery == LotteryValue::vinf());
    CHECK(s.alpha_free.kind == NumerosityAnswer::Kind::Range);

    // consistency: finite k across every column
    const SizeReport fin = size_report(SetExpr::finite({10, 20}));
    CHECK(fin.cardinality == CardinalityClass::finite_card(2));
    CHECK(fin.lottery == LotteryValue::v(2));
    CHECK(fin.density == DensityValue::exact(0));
    CHECK(fin.alpha_canonical.exact == AlphaExpr::constant(2));
}

TEST_CASE("coarse-graining chain on sampled pairs") {
    // equal canonical alpha answers imply equal hull and equal cardinality;
    // equal cnum classes imply equal exact density
    const std::vector<SetExpr> family = {
        SetExpr::evens(),
        SetExpr::odds(),
        SetExpr::arith_prog(4, 0),
        SetExpr::arith_prog(4, 2),
        SetExpr::powers(2),
        SetExpr::finite({1, 2}),
        SetExpr::finite({3, 9}),
        SetExpr::cofinite({1}),
        SetExpr::full(),
    };
    for (const auto& x : family) {
        for (const auto& y : family) {
            const auto ax = alpha_numerosity(x, Profile::Canonical);
            const auto ay = alpha_numerosity(y, Profile::Canonical);
            if (ax.kind == NumerosityAnswer::Kind::Exact &&
                ay.kind == NumerosityAnswer::Kind::Exact && ax.exact == ay.exact) {
                REQUIRE(generalized_hull(x) == generalized_hull(y));
                REQUIRE(cardinality(x) == cardinality(y));
            }
            if (cnum_compare(cnum(x), cnum(y)).verdict ==
                EventualComparison::Verdict::Equal) {
                const auto dx = natural_density(x);
                const auto dy = natural_density(y);
                if (dx.kind == DensityValue::Kind::Exact)
                    REQUIRE(dx == dy);
            }
        }
    }
}
