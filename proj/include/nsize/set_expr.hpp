#pragma once

#include "nsize/numeric.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nsize {

// Block schedules: membership alternates over consecutive index blocks whose
// boundaries grow without bound.

// n is a member iff the smallest k with n <= 2^(2^k) is odd. Initial
// fragment: {3, 4, 17, 18, 19, 20, ...}.
struct SuperExpBlocks {};

// n is a member iff its binary expansion has an odd number of digits.
struct BitLengthParity {};

// n is a member iff its decimal expansion starts with `digit`.
struct LeadingDecimal {
    int digit = 1;  // 1..9
};

// Geometric block ladder: block j is [start*ratio^j, start*ratio^(j+1));
// members are the blocks whose index parity matches. Indices below `start`
// are excluded.
struct GeometricBlocks {
    BigInt start = 1;     // >= 1
    unsigned ratio = 2;   // >= 2
    bool include_even = true;
};

using BlockSchedule =
    std::variant<SuperExpBlocks, BitLengthParity, LeadingDecimal, GeometricBlocks>;

bool operator==(const BlockSchedule& a, const BlockSchedule& b);

// Symbolic subset of N = {1, 2, 3, ...}. Immutable shared tree with value
// semantics; all operations on it are pure.
class SetExpr {
  public:
    struct Empty {};
    struct Full {};
    struct FiniteSet {
        std::vector<BigInt> elements;  // strictly increasing, >= 1
    };
    struct CoFiniteSet {
        std::vector<BigInt> excluded;  // strictly increasing, >= 1
    };
    struct ArithProg {
        BigInt modulus;  // a >= 1
        BigInt residue;  // 0 <= i < a
    };
    struct Powers {
        unsigned exponent;  // p >= 2
    };
    struct Primes {};
    struct BlockSet {
        BlockSchedule schedule;
    };
    // recursive nodes; defined right after the class
    struct Union;
    struct Intersection;
    struct Complement;
    struct Difference;

    using Node = std::variant<Empty, Full, FiniteSet, CoFiniteSet, ArithProg, Powers,
                              Primes, BlockSet, Union, Intersection, Complement,
                              Difference>;

    SetExpr();  // Empty

    static SetExpr empty();
    static SetExpr full();
    // Elements are sorted and deduplicated; all must be >= 1.
    static SetExpr finite(std::vector<BigInt> elements);
    static SetExpr cofinite(std::vector<BigInt> excluded);
    // M_{a,i} = { n in N : n mod a = i }.
    static SetExpr arith_prog(BigInt modulus, BigInt residue);
    static SetExpr powers(unsigned exponent);
    static SetExpr primes();
    static SetExpr block(BlockSchedule schedule);
    static SetExpr super_exponential();   // the alternating set S
    static SetExpr bit_length_odd();
    static SetExpr leading_digit(int digit = 1);
    static SetExpr evens();  // M_{2,0}
    static SetExpr odds();   // M_{2,1}

    static SetExpr union_of(SetExpr left, SetExpr right);
    static SetExpr intersection_of(SetExpr left, SetExpr right);
    static SetExpr complement_of(SetExpr inner);
    static SetExpr difference_of(SetExpr left, SetExpr right);

    const Node& node() const;  // defined after the recursive nodes below

    friend bool operator==(const SetExpr& a, const SetExpr& b);

  private:
    explicit SetExpr(Node node);
    std::shared_ptr<const Node> node_;
};

struct SetExpr::Union {
    SetExpr left, right;
};
struct SetExpr::Intersection {
    SetExpr left, right;
};
struct SetExpr::Complement {
    SetExpr inner;
};
struct SetExpr::Difference {
    SetExpr left, right;
};

inline const SetExpr::Node& SetExpr::node() const { return *node_; }

SetExpr operator|(const SetExpr& a, const SetExpr& b);
SetExpr operator&(const SetExpr& a, const SetExpr& b);
SetExpr operator~(const SetExpr& a);
// Set difference a \ b.
SetExpr operator-(const SetExpr& a, const SetExpr& b);

// chi_n: 1 iff n is a member. Total for n >= 1; exact integer arithmetic
// throughout (no floating point anywhere near block thresholds).
bool membership(const SetExpr& expr, const BigInt& n);

// True when a Primes atom occurs anywhere in the tree; enumeration-style
// loops use this to extend the shared prime sieve once up front.
bool mentions_primes(const SetExpr& expr);

// S_n = S intersect {1..n}, in increasing order. Throws resource_error when
// n exceeds the enumeration cap.
std::vector<BigInt> enumerate_prefix(const SetExpr& expr, const BigInt& n);

struct FinitenessClass {
    enum class Kind { Finite, CoFinite, InfiniteCoInfinite, Unknown };
    Kind kind = Kind::Unknown;
    // Element count for Finite, excluded-element count for CoFinite.
    BigInt count = 0;

    static FinitenessClass finite(BigInt k) { return {Kind::Finite, std::move(k)}; }
    static FinitenessClass cofinite(BigInt k) { return {Kind::CoFinite, std::move(k)}; }
    static FinitenessClass infinite_coinfinite() { return {Kind::InfiniteCoInfinite, 0}; }
    static FinitenessClass unknown() { return {Kind::Unknown, 0}; }

    bool operator==(const FinitenessClass&) const = default;
};

// Conservative symbolic classification: decides atoms, finite/co-finite
// support of Boolean combinations, residue-residue intersections, and
// complement flips; everything else is Unknown. Never scans for an eventual
// fact it cannot certify.
FinitenessClass classify_finiteness(const SetExpr& expr);

// Exact member list when the expression is decidably finite.
std::optional<std::vector<BigInt>> decide_finite_elements(const SetExpr& expr);
// Exact complement list when the expression is decidably co-finite.
std::optional<std::vector<BigInt>> decide_excluded_elements(const SetExpr& expr);

// Sound Boolean rewrites: double complement, De Morgan pushdown, identity /
// annihilator absorption, finite and co-finite set merging. Membership is
// preserved at every n.
SetExpr normalize(const SetExpr& expr);

// DSL rendering (parseable by dsl::parse for every DSL-expressible node).
std::string render(const SetExpr& expr);

// Sound, incomplete certificates used by the comparison and numerosity
// layers. A `true` answer is a proof; `false` only means "not certified".
bool certified_subset(const SetExpr& a, const SetExpr& b);
bool certified_disjoint(const SetExpr& a, const SetExpr& b);
// True when the two sets certifiably partition N (disjoint with full union).
bool certified_partition_of_full(const SetExpr& a, const SetExpr& b);
// Smallest witness of b \ a within [1, scan_limit], if any.
std::optional<BigInt> proper_superset_witness(const SetExpr& a, const SetExpr& b,
                                              std::uint64_t scan_limit = 1 << 16);

}  // namespace nsize
