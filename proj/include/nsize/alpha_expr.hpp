#pragma once

#include "nsize/numeric.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace nsize {

// Normalized term sum(c_q * a^q) over rational coefficients and nonnegative
// rational exponents, where `a` (alpha) is the numerosity of N. Totally
// ordered by leading-term dominance: a^q swamps every rational multiple of a
// lower power, so comparison inspects the largest exponent at which two
// terms differ.
class AlphaExpr {
  public:
    AlphaExpr() = default;  // zero

    static AlphaExpr constant(Rational value);
    static AlphaExpr alpha();                     // a^1
    static AlphaExpr alpha_power(Rational exponent);  // a^q, q >= 0
    static AlphaExpr term(Rational coefficient, Rational exponent);

    AlphaExpr operator+(const AlphaExpr& other) const;
    AlphaExpr operator-(const AlphaExpr& other) const;
    AlphaExpr operator-() const;
    AlphaExpr scaled(const Rational& factor) const;

    AlphaExpr& operator+=(const AlphaExpr& other);
    AlphaExpr& operator-=(const AlphaExpr& other);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient at a given exponent (0 when absent).
    Rational coefficient(const Rational& exponent) const;
    // Largest exponent present, or nullopt for zero.
    std::optional<Rational> leading_exponent() const;

    // st(x / a): the alpha^1 coefficient, all lower-order terms discarded.
    // Requires every exponent <= 1 (the ratio must be finite).
    Rational standard_part_ratio() const;

    // Total order; Equal iff identical normal forms.
    friend std::strong_ordering operator<=>(const AlphaExpr& x, const AlphaExpr& y);
    friend bool operator==(const AlphaExpr& x, const AlphaExpr& y);

    // Fixed rendering grammar (stable for golden tests): terms in descending
    // exponent order joined by " + " / " - ", coefficients as reduced
    // fractions with unit coefficients omitted, "a" for a^1, "sqrt(a)" for
    // a^(1/2), "a^(p/q)" otherwise. Examples: "a - sqrt(a) + a^(1/4)",
    // "1/2 a - 1".
    std::string to_string() const;

  private:
    // exponent -> nonzero coefficient, kept in descending exponent order
    std::map<Rational, Rational, std::greater<Rational>> terms_;
};

enum class AlphaOrder { Less, Equal, Greater };

// Three-way comparison in the transferred total order.
AlphaOrder alpha_compare(const AlphaExpr& x, const AlphaExpr& y);

std::string to_string(AlphaOrder order);

}  // namespace nsize
