#pragma once

#include "nsize/alpha_expr.hpp"
#include "nsize/sequence.hpp"
#include "nsize/set_expr.hpp"

#include <optional>
#include <string>

namespace nsize {

// c-numerosity: the class of f(S) under eventual equality, an element of the
// partially ordered non-Archimedean commutative semiring of non-decreasing
// sequences modulo the co-finite filter. Addition is componentwise; there is
// deliberately no subtraction. Every operation is representative-independent
// under eventual equality.
class CnumClass {
  public:
    explicit CnumClass(SizeSequence representative)
        : rep_(std::move(representative)) {}

    const SizeSequence& representative() const { return rep_; }

    // Same class, different representative: the leading entries are replaced
    // verbatim (classes are blind to finite prefixes).
    CnumClass equivalent_with_prefix(std::vector<BigInt> prefix) const {
        return CnumClass(rep_.with_prefix_override(std::move(prefix)));
    }

  private:
    SizeSequence rep_;
};

// cnum(S) = [f(S)]; cnum(N) is the class of the identity sequence, alpha.
CnumClass cnum(const SetExpr& expr);

// Componentwise sum; agrees with cnum of a disjoint union.
CnumClass cnum_add(const CnumClass& a, const CnumClass& b);

// Eventual comparison in the quotient order. When the class sources satisfy
// S proper-subset T the verdict is strict (Euclidean guarantee) even where
// the density rules alone are silent.
EventualComparison cnum_compare(const CnumClass& a, const CnumClass& b,
                                const BigInt& horizon = default_compare_horizon());

// Admissible-assignment policy for alpha-numerosity.
enum class Profile {
    Canonical,  // stipulates num(M_{a,i}) = a/a_modulus and num(powers p) = a^(1/p)
    Free,       // nothing beyond the four axioms; underdetermined values become ranges
};

struct AlphaBracket {
    AlphaExpr lo, hi;  // lo <= hi in the AlphaExpr order
};

// Alpha-numerosity of a set. Exact when the axioms (plus stipulations, under
// Canonical) pin the value; Range when the admissible assignments span an
// interval: every admissible value lies between something in the lower
// bracket and something in the upper bracket. No ultrafilter is ever
// constructed - ranges are the supervaluation hull of all admissible
// assignments.
struct NumerosityAnswer {
    enum class Kind { Exact, Range, Unknown };
    Kind kind = Kind::Unknown;
    AlphaExpr exact;
    AlphaBracket lower, upper;

    static NumerosityAnswer exact_value(AlphaExpr value);
    static NumerosityAnswer range(AlphaBracket lower, AlphaBracket upper);
    static NumerosityAnswer unknown() { return {}; }
};

std::string to_string(const NumerosityAnswer& answer);

NumerosityAnswer alpha_numerosity(const SetExpr& expr, Profile profile);

// st(num(S)/alpha) for an Exact alpha-numerosity: see
// AlphaExpr::standard_part_ratio.

// Supervaluation across all admissible alpha-numerosity assignments: a
// super value exists exactly for finite and co-finite sets; everything else
// reports the Free-profile hull (its sub-alpha-numerosities).
struct Supervaluation {
    bool has_super = false;
    AlphaExpr super;        // valid when has_super
    NumerosityAnswer subs;  // valid otherwise
};

Supervaluation supervaluation(const SetExpr& expr);

}  // namespace nsize
