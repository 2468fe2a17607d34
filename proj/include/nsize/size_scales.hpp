#pragma once

#include "nsize/density.hpp"
#include "nsize/numerosity.hpp"
#include "nsize/set_expr.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nsize {

struct CardinalityClass {
    enum class Kind { FiniteCard, Aleph0 };
    Kind kind = Kind::FiniteCard;
    BigInt count;  // valid for FiniteCard

    static CardinalityClass finite_card(BigInt k) {
        return {Kind::FiniteCard, std::move(k)};
    }
    static CardinalityClass aleph0() { return {Kind::Aleph0, 0}; }

    bool operator==(const CardinalityClass&) const = default;
};

std::string to_string(const CardinalityClass& c);

// Norton's infinite-lottery valuations, totally ordered as
//   V0 < V1 < V2 < ... < Vinf < ... < V-2 < V-1 < V-0.
// V(n) for finite sets with n elements (V0 = empty set), V-(n) for
// co-finite sets missing n elements (V-0 = N), Vinf for everything else.
struct LotteryValue {
    enum class Kind { V, Vinf, Vminus };
    Kind kind = Kind::Vinf;
    BigInt index;  // valid for V and Vminus

    static LotteryValue v(BigInt n) { return {Kind::V, std::move(n)}; }
    static LotteryValue vinf() { return {Kind::Vinf, 0}; }
    static LotteryValue vminus(BigInt n) { return {Kind::Vminus, std::move(n)}; }

    bool operator==(const LotteryValue&) const = default;
};

std::string to_string(const LotteryValue& v);

enum class LotteryOrder { Less, Equal, Greater };

std::string to_string(LotteryOrder order);

// Throws precondition_error when the finiteness class is Unknown.
CardinalityClass cardinality(const SetExpr& expr);
LotteryValue lottery_value(const SetExpr& expr);

LotteryOrder lottery_compare(const LotteryValue& u, const LotteryValue& v);

// One row of the composite picture: every formalism's verdict on one set,
// with honest Unknown entries where classification fails.
struct SizeReport {
    std::string rendering;
    std::optional<CardinalityClass> cardinality;
    std::optional<LotteryValue> lottery;
    DensityValue density;
    DensityValue hull;
    NumerosityAnswer alpha_canonical;
    NumerosityAnswer alpha_free;
    // Decided c-numerosity comparisons against the reference family
    // (empty set, small finite sets, evens, odds, N).
    std::vector<std::string> cnum_notes;
};

SizeReport size_report(const SetExpr& expr);

}  // namespace nsize
