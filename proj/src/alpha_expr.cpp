#include "nsize/alpha_expr.hpp"

#include <sstream>

namespace nsize {

AlphaExpr AlphaExpr::constant(Rational value) { return term(std::move(value), 0); }

AlphaExpr AlphaExpr::alpha() { return term(1, 1); }

AlphaExpr AlphaExpr::alpha_power(Rational exponent) { return term(1, std::move(exponent)); }

AlphaExpr AlphaExpr::term(Rational coefficient, Rational exponent) {
    if (exponent < 0) throw precondition_error("alpha term: exponent must be >= 0");
    AlphaExpr e;
    if (coefficient != 0) e.terms_.emplace(std::move(exponent), std::move(coefficient));
    return e;
}

AlphaExpr& AlphaExpr::operator+=(const AlphaExpr& other) {
    for (const auto& [exp, coeff] : other.terms_) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

AlphaExpr& AlphaExpr::operator-=(const AlphaExpr& other) { return *this += -other; }

AlphaExpr AlphaExpr::operator+(const AlphaExpr& other) const {
    AlphaExpr result = *this;
    result += other;
    return result;
}

AlphaExpr AlphaExpr::operator-(const AlphaExpr& other) const {
    AlphaExpr result = *this;
    result -= other;
    return result;
}

AlphaExpr AlphaExpr::operator-() const {
    AlphaExpr result;
    for (const auto& [exp, coeff] : terms_) result.terms_.emplace(exp, -coeff);
    return result;
}

AlphaExpr AlphaExpr::scaled(const Rational& factor) const {
    AlphaExpr result;
    if (factor == 0) return result;
    for (const auto& [exp, coeff] : terms_)
        result.terms_.emplace(exp, Rational(coeff * factor));
    return result;
}

bool AlphaExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational AlphaExpr::coefficient(const Rational& exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> AlphaExpr::leading_exponent() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

Rational AlphaExpr::standard_part_ratio() const {
    for (const auto& [exp, coeff] : terms_) {
        if (exp > 1)
            throw precondition_error(
                "standard_part_ratio: exponent above 1, ratio to alpha is infinite");
    }
    return coefficient(1);
}

bool operator==(const AlphaExpr& x, const AlphaExpr& y) { return x.terms_ == y.terms_; }

std::strong_ordering operator<=>(const AlphaExpr& x, const AlphaExpr& y) {
    // Sign of the leading term of x - y.
    auto ix = x.terms_.begin();
    auto iy = y.terms_.begin();
    while (ix != x.terms_.end() || iy != y.terms_.end()) {
        if (iy == y.terms_.end() || (ix != x.terms_.end() && ix->first > iy->first)) {
            if (ix->second != 0)
                return ix->second > 0 ? std::strong_ordering::greater
                                      : std::strong_ordering::less;
            ++ix;
        } else if (ix == x.terms_.end() || iy->first > ix->first) {
            if (iy->second != 0)
                return iy->second > 0 ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
            ++iy;
        } else {
            if (ix->second != iy->second)
                return ix->second > iy->second ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
            ++ix;
            ++iy;
        }
    }
    return std::strong_ordering::equal;
}

AlphaOrder alpha_compare(const AlphaExpr& x, const AlphaExpr& y) {
    const auto cmp = x <=> y;
    if (cmp == std::strong_ordering::less) return AlphaOrder::Less;
    if (cmp == std::strong_ordering::greater) return AlphaOrder::Greater;
    return AlphaOrder::Equal;
}

std::string to_string(AlphaOrder order) {
    switch (order) {
        case AlphaOrder::Less: return "Less";
        case AlphaOrder::Equal: return "Equal";
        case AlphaOrder::Greater: return "Greater";
    }
    return "Equal";
}

namespace {

void render_power(const Rational& exponent, std::ostream& os) {
    if (exponent == 1) {
        os << "a";
    } else if (exponent == Rational(1, 2)) {
        os << "sqrt(a)";
    } else if (boost::multiprecision::denominator(exponent) == 1) {
        os << "a^" << boost::multiprecision::numerator(exponent);
    } else {
        os << "a^(" << to_string(exponent) << ")";
    }
}

}  // namespace

std::string AlphaExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exp, coeff] : terms_) {
        const bool negative = coeff < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rational magnitude = negative ? Rational(-coeff) : coeff;
        if (exp == 0) {
            os << nsize::to_string(magnitude);
        } else {
            if (magnitude != 1) os << nsize::to_string(magnitude) << " ";
            render_power(exp, os);
        }
        first = false;
    }
    return os.str();
}

}  // namespace nsize
