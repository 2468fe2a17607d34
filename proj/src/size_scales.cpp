#include "nsize/size_scales.hpp"

namespace nsize {

std::string to_string(const CardinalityClass& c) {
    if (c.kind == CardinalityClass::Kind::Aleph0) return "aleph0";
    return "finite " + to_string(c.count);
}

std::string to_string(const LotteryValue& v) {
    switch (v.kind) {
        case LotteryValue::Kind::V: return "V" + to_string(v.index);
        case LotteryValue::Kind::Vinf: return "Vinf";
        case LotteryValue::Kind::Vminus: return "V-" + to_string(v.index);
    }
    return "Vinf";
}

std::string to_string(LotteryOrder order) {
    switch (order) {
        case LotteryOrder::Less: return "Less";
        case LotteryOrder::Equal: return "Equal";
        case LotteryOrder::Greater: return "Greater";
    }
    return "Equal";
}

CardinalityClass cardinality(const SetExpr& expr) {
    const FinitenessClass fc = classify_finiteness(expr);
    switch (fc.kind) {
        case FinitenessClass::Kind::Finite:
            return CardinalityClass::finite_card(fc.count);
        case FinitenessClass::Kind::CoFinite:
        case FinitenessClass::Kind::InfiniteCoInfinite:
            return CardinalityClass::aleph0();
        case FinitenessClass::Kind::Unknown:
            throw precondition_error("cardinality: cannot classify finiteness");
    }
    throw precondition_error("cardinality: cannot classify finiteness");
}

LotteryValue lottery_value(const SetExpr& expr) {
    const FinitenessClass fc = classify_finiteness(expr);
    switch (fc.kind) {
        case FinitenessClass::Kind::Finite: return LotteryValue::v(fc.count);
        case FinitenessClass::Kind::CoFinite: return LotteryValue::vminus(fc.count);
        case FinitenessClass::Kind::InfiniteCoInfinite: return LotteryValue::vinf();
        case FinitenessClass::Kind::Unknown:
            throw precondition_error("lottery_value: cannot classify finiteness");
    }
    throw precondition_error("lottery_value: cannot classify finiteness");
}

LotteryOrder lottery_compare(const LotteryValue& u, const LotteryValue& v) {
    // Rank the three regimes, then the index (reversed on the V- side).
    const auto rank = [](const LotteryValue& x) {
        switch (x.kind) {
            case LotteryValue::Kind::V: return 0;
            case LotteryValue::Kind::Vinf: return 1;
            case LotteryValue::Kind::Vminus: return 2;
        }
        return 1;
    };
    const int ru = rank(u), rv = rank(v);
    if (ru != rv) return ru < rv ? LotteryOrder::Less : LotteryOrder::Greater;
    if (ru == 1) return LotteryOrder::Equal;
    if (u.index == v.index) return LotteryOrder::Equal;
    const bool less = (ru == 0) ? u.index < v.index : u.index > v.index;
    return less ? LotteryOrder::Less : LotteryOrder::Greater;
}

namespace {

std::vector<std::pair<std::string, SetExpr>> reference_family() {
    return {
        {"empty", SetExpr::empty()},
        {"finite{1}", SetExpr::finite({1})},
        {"finite{1,2,3}", SetExpr::finite({1, 2, 3})},
        {"mod 2 0", SetExpr::evens()},
        {"mod 2 1", SetExpr::odds()},
        {"all", SetExpr::full()},
    };
}

}  // namespace

SizeReport size_report(const SetExpr& expr) {
    SizeReport report;
    report.rendering = render(expr);
    try {
        report.cardinality = cardinality(expr);
        report.lottery = lottery_value(expr);
    } catch (const precondition_error&) {
        // Unknown finiteness: leave both fields empty rather than guess.
    }
    report.density = natural_density(expr);
    report.hull = generalized_hull(expr);
    report.alpha_canonical = alpha_numerosity(expr, Profile::Canonical);
    report.alpha_free = alpha_numerosity(expr, Profile::Free);

    const CnumClass self = cnum(expr);
    for (const auto& [name, ref] : reference_family()) {
        const EventualComparison cmp = cnum_compare(self, cnum(ref), BigInt(1) << 12);
        if (cmp.verdict == EventualComparison::Verdict::Unknown) continue;
        report.cnum_notes.push_back("vs " + name + ": " + to_string(cmp.verdict));
    }
    return report;
}

}  // namespace nsize
