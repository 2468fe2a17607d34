#include "nsize/set_expr.hpp"

#include <algorithm>
#include <sstream>

namespace nsize {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<BigInt> sorted_unique(std::vector<BigInt> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<BigInt>& sorted, const BigInt& n) {
    return std::binary_search(sorted.begin(), sorted.end(), n);
}

}  // namespace

bool operator==(const BlockSchedule& a, const BlockSchedule& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const SuperExpBlocks&) { return true; },
            [&](const BitLengthParity&) { return true; },
            [&](const LeadingDecimal& x) {
                return x.digit == std::get<LeadingDecimal>(b).digit;
            },
            [&](const GeometricBlocks& x) {
                const auto& y = std::get<GeometricBlocks>(b);
                return x.start == y.start && x.ratio == y.ratio &&
                       x.include_even == y.include_even;
            },
        },
        a);
}

SetExpr::SetExpr() : node_(std::make_shared<const Node>(Empty{})) {}
SetExpr::SetExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

SetExpr SetExpr::empty() { return SetExpr(Node{Empty{}}); }
SetExpr SetExpr::full() { return SetExpr(Node{Full{}}); }

SetExpr SetExpr::finite(std::vector<BigInt> elements) {
    elements = sorted_unique(std::move(elements));
    if (!elements.empty() && elements.front() < 1)
        throw precondition_error("finite set elements must be >= 1");
    return SetExpr(Node{FiniteSet{std::move(elements)}});
}

SetExpr SetExpr::cofinite(std::vector<BigInt> excluded) {
    excluded = sorted_unique(std::move(excluded));
    if (!excluded.empty() && excluded.front() < 1)
        throw precondition_error("co-finite excluded elements must be >= 1");
    return SetExpr(Node{CoFiniteSet{std::move(excluded)}});
}

SetExpr SetExpr::arith_prog(BigInt modulus, BigInt residue) {
    if (modulus < 1) throw precondition_error("arith_prog: modulus must be >= 1");
    if (residue < 0 || residue >= modulus)
        throw precondition_error("arith_prog: residue must satisfy 0 <= i < a");
    return SetExpr(Node{ArithProg{std::move(modulus), std::move(residue)}});
}

SetExpr SetExpr::powers(unsigned exponent) {
    if (exponent < 2) throw precondition_error("powers: exponent must be >= 2");
    return SetExpr(Node{Powers{exponent}});
}

SetExpr SetExpr::primes() { return SetExpr(Node{Primes{}}); }

SetExpr SetExpr::block(BlockSchedule schedule) {
    if (auto* ld = std::get_if<LeadingDecimal>(&schedule)) {
        if (ld->digit < 1 || ld->digit > 9)
            throw precondition_error("leading_digit: digit must be in 1..9");
    }
    if (auto* gb = std::get_if<GeometricBlocks>(&schedule)) {
        if (gb->start < 1 || gb->ratio < 2)
            throw precondition_error("geometric blocks: start >= 1, ratio >= 2");
    }
    return SetExpr(Node{BlockSet{std::move(schedule)}});
}

SetExpr SetExpr::super_exponential() { return block(SuperExpBlocks{}); }
SetExpr SetExpr::bit_length_odd() { return block(BitLengthParity{}); }
SetExpr SetExpr::leading_digit(int digit) { return block(LeadingDecimal{digit}); }
SetExpr SetExpr::evens() { return arith_prog(2, 0); }
SetExpr SetExpr::odds() { return arith_prog(2, 1); }

SetExpr SetExpr::union_of(SetExpr left, SetExpr right) {
    return SetExpr(Node{Union{std::move(left), std::move(right)}});
}
SetExpr SetExpr::intersection_of(SetExpr left, SetExpr right) {
    return SetExpr(Node{Intersection{std::move(left), std::move(right)}});
}
SetExpr SetExpr::complement_of(SetExpr inner) {
    return SetExpr(Node{Complement{std::move(inner)}});
}
SetExpr SetExpr::difference_of(SetExpr left, SetExpr right) {
    return SetExpr(Node{Difference{std::move(left), std::move(right)}});
}

SetExpr operator|(const SetExpr& a, const SetExpr& b) { return SetExpr::union_of(a, b); }
SetExpr operator&(const SetExpr& a, const SetExpr& b) {
    return SetExpr::intersection_of(a, b);
}
SetExpr operator~(const SetExpr& a) { return SetExpr::complement_of(a); }
SetExpr operator-(const SetExpr& a, const SetExpr& b) {
    return SetExpr::difference_of(a, b);
}

bool operator==(const SetExpr& a, const SetExpr& b) {
    if (a.node_ == b.node_) return true;
    const auto& na = *a.node_;
    const auto& nb = *b.node_;
    if (na.index() != nb.index()) return false;
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) { return true; },
            [&](const SetExpr::Full&) { return true; },
            [&](const SetExpr::FiniteSet& x) {
                return x.elements == std::get<SetExpr::FiniteSet>(nb).elements;
            },
            [&](const SetExpr::CoFiniteSet& x) {
                return x.excluded == std::get<SetExpr::CoFiniteSet>(nb).excluded;
            },
            [&](const SetExpr::ArithProg& x) {
                const auto& y = std::get<SetExpr::ArithProg>(nb);
                return x.modulus == y.modulus && x.residue == y.residue;
            },
            [&](const SetExpr::Powers& x) {
                return x.exponent == std::get<SetExpr::Powers>(nb).exponent;
            },
            [&](const SetExpr::Primes&) { return true; },
            [&](const SetExpr::BlockSet& x) {
                return x.schedule == std::get<SetExpr::BlockSet>(nb).schedule;
            },
            [&](const SetExpr::Union& x) {
                const auto& y = std::get<SetExpr::Union>(nb);
                return x.left == y.left && x.right == y.right;
            },
            [&](const SetExpr::Intersection& x) {
                const auto& y = std::get<SetExpr::Intersection>(nb);
                return x.left == y.left && x.right == y.right;
            },
            [&](const SetExpr::Complement& x) {
                return x.inner == std::get<SetExpr::Complement>(nb).inner;
            },
            [&](const SetExpr::Difference& x) {
                const auto& y = std::get<SetExpr::Difference>(nb);
                return x.left == y.left && x.right == y.right;
            },
        },
        na);
}

// --- membership ------------------------------------------------------------

namespace {

bool block_member(const BlockSchedule& schedule, const BigInt& n) {
    return std::visit(
        overloaded{
            [&](const SuperExpBlocks&) {
                // Smallest k with n <= 2^(2^k); member iff k is odd. Exact
                // integer thresholds, never floating-point logarithms.
                BigInt threshold = 2;  // 2^(2^0)
                unsigned k = 0;
                while (n > threshold) {
                    threshold *= threshold;
                    ++k;
                }
                return (k & 1u) == 1u;
            },
            [&](const BitLengthParity&) { return (bit_length(n) & 1u) == 1u; },
            [&](const LeadingDecimal& ld) {
                return leading_decimal_digit(n) == ld.digit;
            },
            [&](const GeometricBlocks& gb) {
                if (n < gb.start) return false;
                BigInt boundary = gb.start;  // start of block j
                unsigned j = 0;
                while (boundary * gb.ratio <= n) {
                    boundary *= gb.ratio;
                    ++j;
                }
                const bool even = (j & 1u) == 0u;
                return even == gb.include_even;
            },
        },
        schedule);
}

bool power_member(const BigInt& n, unsigned p) {
    const BigInt r = iroot(n, p);
    return ipow(r, p) == n;
}

}  // namespace

bool membership(const SetExpr& expr, const BigInt& n) {
    if (n < 1) throw precondition_error("membership: n must be >= 1");
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) { return false; },
            [&](const SetExpr::Full&) { return true; },
            [&](const SetExpr::FiniteSet& x) { return contains(x.elements, n); },
            [&](const SetExpr::CoFiniteSet& x) { return !contains(x.excluded, n); },
            [&](const SetExpr::ArithProg& x) { return n % x.modulus == x.residue; },
            [&](const SetExpr::Powers& x) { return power_member(n, x.exponent); },
            [&](const SetExpr::Primes&) { return is_prime(n); },
            [&](const SetExpr::BlockSet& x) { return block_member(x.schedule, n); },
            [&](const SetExpr::Union& x) {
                return membership(x.left, n) || membership(x.right, n);
            },
            [&](const SetExpr::Intersection& x) {
                return membership(x.left, n) && membership(x.right, n);
            },
            [&](const SetExpr::Complement& x) { return !membership(x.inner, n); },
            [&](const SetExpr::Difference& x) {
                return membership(x.left, n) && !membership(x.right, n);
            },
        },
        expr.node());
}

bool mentions_primes(const SetExpr& expr) {
    return std::visit(
        overloaded{
            [&](const SetExpr::Primes&) { return true; },
            [&](const SetExpr::Union& x) {
                return mentions_primes(x.left) || mentions_primes(x.right);
            },
            [&](const SetExpr::Intersection& x) {
                return mentions_primes(x.left) || mentions_primes(x.right);
            },
            [&](const SetExpr::Difference& x) {
                return mentions_primes(x.left) || mentions_primes(x.right);
            },
            [&](const SetExpr::Complement& x) { return mentions_primes(x.inner); },
            [&](const auto&) { return false; },
        },
        expr.node());
}

std::vector<BigInt> enumerate_prefix(const SetExpr& expr, const BigInt& n) {
    if (n < 1) throw precondition_error("enumerate_prefix: n must be >= 1");
    if (n > enumeration_cap())
        throw resource_error("enumerate_prefix: n exceeds the enumeration cap");
    if (mentions_primes(expr)) ensure_prime_sieve(static_cast<std::uint64_t>(n));
    std::vector<BigInt> out;
    for (BigInt i = 1; i <= n; ++i) {
        if (membership(expr, i)) out.push_back(i);
    }
    return out;
}

// --- finiteness classification ----------------------------------------------

namespace {

std::optional<std::vector<BigInt>> filter_by(const std::vector<BigInt>& candidates,
                                             const SetExpr& pred, bool keep_members) {
    std::vector<BigInt> out;
    for (const auto& x : candidates) {
        if (membership(pred, x) == keep_members) out.push_back(x);
    }
    return out;
}

// Residue classes M_{a,i} and M_{b,j} intersect iff i = j (mod gcd(a, b)).
bool residues_compatible(const SetExpr::ArithProg& x, const SetExpr::ArithProg& y) {
    const BigInt g = boost::multiprecision::gcd(x.modulus, y.modulus);
    return x.residue % g == y.residue % g;
}

bool surely_infinite_coinfinite(const SetExpr& expr);

}  // namespace

std::optional<std::vector<BigInt>> decide_finite_elements(const SetExpr& expr) {
    using R = std::optional<std::vector<BigInt>>;
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) -> R { return std::vector<BigInt>{}; },
            [&](const SetExpr::Full&) -> R { return std::nullopt; },
            [&](const SetExpr::FiniteSet& x) -> R { return x.elements; },
            [&](const SetExpr::CoFiniteSet&) -> R { return std::nullopt; },
            [&](const SetExpr::ArithProg&) -> R { return std::nullopt; },
            [&](const SetExpr::Powers&) -> R { return std::nullopt; },
            [&](const SetExpr::Primes&) -> R { return std::nullopt; },
            [&](const SetExpr::BlockSet&) -> R { return std::nullopt; },
            [&](const SetExpr::Union& x) -> R {
                auto l = decide_finite_elements(x.left);
                if (!l) return std::nullopt;
                auto r = decide_finite_elements(x.right);
                if (!r) return std::nullopt;
                std::vector<BigInt> merged;
                std::merge(l->begin(), l->end(), r->begin(), r->end(),
                           std::back_inserter(merged));
                return sorted_unique(std::move(merged));
            },
            [&](const SetExpr::Intersection& x) -> R {
                if (auto l = decide_finite_elements(x.left))
                    return filter_by(*l, x.right, true);
                if (auto r = decide_finite_elements(x.right))
                    return filter_by(*r, x.left, true);
                const auto* pa = std::get_if<SetExpr::ArithProg>(&x.left.node());
                const auto* pb = std::get_if<SetExpr::ArithProg>(&x.right.node());
                if (pa && pb && !residues_compatible(*pa, *pb))
                    return std::vector<BigInt>{};
                return std::nullopt;
            },
            [&](const SetExpr::Complement& x) -> R {
                return decide_excluded_elements(x.inner);
            },
            [&](const SetExpr::Difference& x) -> R {
                if (auto l = decide_finite_elements(x.left))
                    return filter_by(*l, x.right, false);
                // left intersect (finite complement of right)
                if (auto excl = decide_excluded_elements(x.right))
                    return filter_by(*excl, x.left, true);
                return std::nullopt;
            },
        },
        expr.node());
}

std::optional<std::vector<BigInt>> decide_excluded_elements(const SetExpr& expr) {
    using R = std::optional<std::vector<BigInt>>;
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) -> R { return std::nullopt; },
            [&](const SetExpr::Full&) -> R { return std::vector<BigInt>{}; },
            [&](const SetExpr::FiniteSet&) -> R { return std::nullopt; },
            [&](const SetExpr::CoFiniteSet& x) -> R { return x.excluded; },
            [&](const SetExpr::ArithProg& x) -> R {
                if (x.modulus == 1) return std::vector<BigInt>{};  // M_{1,0} = N
                return std::nullopt;
            },
            [&](const SetExpr::Powers&) -> R { return std::nullopt; },
            [&](const SetExpr::Primes&) -> R { return std::nullopt; },
            [&](const SetExpr::BlockSet&) -> R { return std::nullopt; },
            [&](const SetExpr::Union& x) -> R {
                if (auto l = decide_excluded_elements(x.left))
                    return filter_by(*l, x.right, false);
                if (auto r = decide_excluded_elements(x.right))
                    return filter_by(*r, x.left, false);
                return std::nullopt;
            },
            [&](const SetExpr::Intersection& x) -> R {
                auto l = decide_excluded_elements(x.left);
                if (!l) return std::nullopt;
                auto r = decide_excluded_elements(x.right);
                if (!r) return std::nullopt;
                std::vector<BigInt> merged;
                std::merge(l->begin(), l->end(), r->begin(), r->end(),
                           std::back_inserter(merged));
                return sorted_unique(std::move(merged));
            },
            [&](const SetExpr::Complement& x) -> R {
                return decide_finite_elements(x.inner);
            },
            [&](const SetExpr::Difference& x) -> R {
                // l \ r is co-finite when l is co-finite and r is finite.
                auto l = decide_excluded_elements(x.left);
                if (!l) return std::nullopt;
                auto r = decide_finite_elements(x.right);
                if (!r) return std::nullopt;
                std::vector<BigInt> merged;
                std::merge(l->begin(), l->end(), r->begin(), r->end(),
                           std::back_inserter(merged));
                return sorted_unique(std::move(merged));
            },
        },
        expr.node());
}

namespace {

bool surely_infinite_coinfinite(const SetExpr& expr) {
    const auto finite_side = [](const SetExpr& e) {
        return decide_finite_elements(e).has_value();
    };
    const auto cofinite_side = [](const SetExpr& e) {
        return decide_excluded_elements(e).has_value();
    };
    return std::visit(
        overloaded{
            [&](const SetExpr::ArithProg& x) { return x.modulus >= 2; },
            [&](const SetExpr::Powers&) { return true; },
            [&](const SetExpr::Primes&) { return true; },
            [&](const SetExpr::BlockSet&) { return true; },
            [&](const SetExpr::Complement& x) {
                return surely_infinite_coinfinite(x.inner);
            },
            [&](const SetExpr::Union& x) {
                return (surely_infinite_coinfinite(x.left) && finite_side(x.right)) ||
                       (surely_infinite_coinfinite(x.right) && finite_side(x.left));
            },
            [&](const SetExpr::Intersection& x) {
                // Compatible residue classes intersect in a progression mod
                // the lcm (Chinese remainder theorem).
                const auto* pa = std::get_if<SetExpr::ArithProg>(&x.left.node());
                const auto* pb = std::get_if<SetExpr::ArithProg>(&x.right.node());
                if (pa && pb && residues_compatible(*pa, *pb) &&
                    (pa->modulus > 1 || pb->modulus > 1))
                    return true;
                return (surely_infinite_coinfinite(x.left) && cofinite_side(x.right)) ||
                       (surely_infinite_coinfinite(x.right) && cofinite_side(x.left));
            },
            [&](const SetExpr::Difference& x) {
                return (surely_infinite_coinfinite(x.left) && finite_side(x.right)) ||
                       (cofinite_side(x.left) && surely_infinite_coinfinite(x.right));
            },
            [&](const auto&) { return false; },
        },
        expr.node());
}

}  // namespace

FinitenessClass classify_finiteness(const SetExpr& expr) {
    if (auto elems = decide_finite_elements(expr))
        return FinitenessClass::finite(BigInt(elems->size()));
    if (auto excl = decide_excluded_elements(expr))
        return FinitenessClass::cofinite(BigInt(excl->size()));
    if (surely_infinite_coinfinite(expr))
        return FinitenessClass::infinite_coinfinite();
    return FinitenessClass::unknown();
}

// --- normalization -----------------------------------------------------------

namespace {

bool is_empty_node(const SetExpr& e) {
    return std::holds_alternative<SetExpr::Empty>(e.node());
}
bool is_full_node(const SetExpr& e) {
    return std::holds_alternative<SetExpr::Full>(e.node());
}

SetExpr normalize_impl(const SetExpr& expr, bool complemented);

SetExpr normalize_union(const SetExpr& a, const SetExpr& b) {
    if (is_full_node(a) || is_full_node(b)) return SetExpr::full();
    if (is_empty_node(a)) return b;
    if (is_empty_node(b)) return a;
    if (a == b) return a;
    const auto* fa = std::get_if<SetExpr::FiniteSet>(&a.node());
    const auto* fb = std::get_if<SetExpr::FiniteSet>(&b.node());
    if (fa && fb) {
        std::vector<BigInt> merged;
        std::merge(fa->elements.begin(), fa->elements.end(), fb->elements.begin(),
                   fb->elements.end(), std::back_inserter(merged));
        return SetExpr::finite(std::move(merged));
    }
    const auto* ca = std::get_if<SetExpr::CoFiniteSet>(&a.node());
    const auto* cb = std::get_if<SetExpr::CoFiniteSet>(&b.node());
    if (ca && cb) {
        std::vector<BigInt> kept;
        std::set_intersection(ca->excluded.begin(), ca->excluded.end(),
                              cb->excluded.begin(), cb->excluded.end(),
                              std::back_inserter(kept));
        return SetExpr::cofinite(std::move(kept));
    }
    if (ca && fb) {
        std::vector<BigInt> kept;
        std::set_difference(ca->excluded.begin(), ca->excluded.end(),
                            fb->elements.begin(), fb->elements.end(),
                            std::back_inserter(kept));
        return SetExpr::cofinite(std::move(kept));
    }
    if (fa && cb) return normalize_union(b, a);
    // x | ~x = N (syntactic check only)
    const auto* compl_a = std::get_if<SetExpr::Complement>(&a.node());
    const auto* compl_b = std::get_if<SetExpr::Complement>(&b.node());
    if (compl_b && compl_b->inner == a) return SetExpr::full();
    if (compl_a && compl_a->inner == b) return SetExpr::full();
    return SetExpr::union_of(a, b);
}

SetExpr normalize_intersection(const SetExpr& a, const SetExpr& b) {
    if (is_empty_node(a) || is_empty_node(b)) return SetExpr::empty();
    if (is_full_node(a)) return b;
    if (is_full_node(b)) return a;
    if (a == b) return a;
    const auto* fa = std::get_if<SetExpr::FiniteSet>(&a.node());
    const auto* fb = std::get_if<SetExpr::FiniteSet>(&b.node());
    if (fa && fb) {
        std::vector<BigInt> kept;
        std::set_intersection(fa->elements.begin(), fa->elements.end(),
                              fb->elements.begin(), fb->elements.end(),
                              std::back_inserter(kept));
        return SetExpr::finite(std::move(kept));
    }
    const auto* ca = std::get_if<SetExpr::CoFiniteSet>(&a.node());
    const auto* cb = std::get_if<SetExpr::CoFiniteSet>(&b.node());
    if (ca && cb) {
        std::vector<BigInt> merged;
        std::merge(ca->excluded.begin(), ca->excluded.end(), cb->excluded.begin(),
                   cb->excluded.end(), std::back_inserter(merged));
        return SetExpr::cofinite(sorted_unique(std::move(merged)));
    }
    if (fa && cb) {
        std::vector<BigInt> kept;
        std::set_difference(fa->elements.begin(), fa->elements.end(),
                            cb->excluded.begin(), cb->excluded.end(),
                            std::back_inserter(kept));
        return SetExpr::finite(std::move(kept));
    }
    if (ca && fb) return normalize_intersection(b, a);
    const auto* compl_a = std::get_if<SetExpr::Complement>(&a.node());
    const auto* compl_b = std::get_if<SetExpr::Complement>(&b.node());
    if (compl_b && compl_b->inner == a) return SetExpr::empty();
    if (compl_a && compl_a->inner == b) return SetExpr::empty();
    return SetExpr::intersection_of(a, b);
}

SetExpr normalize_complement_atom(const SetExpr& atom) {
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) { return SetExpr::full(); },
            [&](const SetExpr::Full&) { return SetExpr::empty(); },
            [&](const SetExpr::FiniteSet& x) { return SetExpr::cofinite(x.elements); },
            [&](const SetExpr::CoFiniteSet& x) { return SetExpr::finite(x.excluded); },
            [&](const auto&) { return SetExpr::complement_of(atom); },
        },
        atom.node());
}

// De Morgan pushdown: `complemented` tracks a pending complement around the
// current node.
SetExpr normalize_impl(const SetExpr& expr, bool complemented) {
    return std::visit(
        overloaded{
            [&](const SetExpr::Union& x) {
                SetExpr l = normalize_impl(x.left, complemented);
                SetExpr r = normalize_impl(x.right, complemented);
                return complemented ? normalize_intersection(l, r)
                                    : normalize_union(l, r);
            },
            [&](const SetExpr::Intersection& x) {
                SetExpr l = normalize_impl(x.left, complemented);
                SetExpr r = normalize_impl(x.right, complemented);
                return complemented ? normalize_union(l, r)
                                    : normalize_intersection(l, r);
            },
            [&](const SetExpr::Difference& x) {
                // a \ b = a & ~b; ~(a \ b) = ~a | b
                SetExpr l = normalize_impl(x.left, complemented);
                SetExpr r = normalize_impl(x.right, !complemented);
                return complemented ? normalize_union(l, r)
                                    : normalize_intersection(l, r);
            },
            [&](const SetExpr::Complement& x) {
                return normalize_impl(x.inner, !complemented);
            },
            [&](const auto&) {
                return complemented ? normalize_complement_atom(expr) : expr;
            },
        },
        expr.node());
}

}  // namespace

SetExpr normalize(const SetExpr& expr) { return normalize_impl(expr, false); }

// --- rendering ----------------------------------------------------------------

namespace {

// Grammar levels: 0 = union/difference, 1 = intersection, 2 = factor.
void render_impl(const SetExpr& expr, int level, std::ostream& os) {
    const auto paren = [&](int node_level, auto&& body) {
        if (node_level < level) {
            os << "(";
            body();
            os << ")";
        } else {
            body();
        }
    };
    std::visit(
        overloaded{
            [&](const SetExpr::Empty&) { os << "empty"; },
            [&](const SetExpr::Full&) { os << "all"; },
            [&](const SetExpr::FiniteSet& x) {
                os << "finite{";
                for (std::size_t i = 0; i < x.elements.size(); ++i) {
                    if (i) os << ",";
                    os << x.elements[i];
                }
                os << "}";
            },
            [&](const SetExpr::CoFiniteSet& x) {
                os << "cofinite{";
                for (std::size_t i = 0; i < x.excluded.size(); ++i) {
                    if (i) os << ",";
                    os << x.excluded[i];
                }
                os << "}";
            },
            [&](const SetExpr::ArithProg& x) {
                os << "mod " << x.modulus << " " << x.residue;
            },
            [&](const SetExpr::Powers& x) { os << "powers " << x.exponent; },
            [&](const SetExpr::Primes&) { os << "primes"; },
            [&](const SetExpr::BlockSet& x) {
                std::visit(overloaded{
                               [&](const SuperExpBlocks&) { os << "superexp"; },
                               [&](const BitLengthParity&) { os << "bitodd"; },
                               [&](const LeadingDecimal& ld) {
                                   os << "leading" << ld.digit;
                               },
                               [&](const GeometricBlocks& gb) {
                                   // No DSL surface; diagnostic form only.
                                   os << "blocks(" << gb.start << "," << gb.ratio
                                      << "," << (gb.include_even ? "even" : "odd")
                                      << ")";
                               },
                           },
                           x.schedule);
            },
            [&](const SetExpr::Union& x) {
                paren(0, [&] {
                    render_impl(x.left, 0, os);
                    os << " | ";
                    render_impl(x.right, 1, os);
                });
            },
            [&](const SetExpr::Difference& x) {
                paren(0, [&] {
                    render_impl(x.left, 0, os);
                    os << " \\ ";
                    render_impl(x.right, 1, os);
                });
            },
            [&](const SetExpr::Intersection& x) {
                paren(1, [&] {
                    render_impl(x.left, 1, os);
                    os << " & ";
                    render_impl(x.right, 2, os);
                });
            },
            [&](const SetExpr::Complement& x) {
                os << "~";
                render_impl(x.inner, 2, os);
            },
        },
        expr.node());
}

}  // namespace

std::string render(const SetExpr& expr) {
    std::ostringstream os;
    render_impl(expr, 0, os);
    return os.str();
}

// --- certificates ---------------------------------------------------------------

bool certified_subset(const SetExpr& a, const SetExpr& b) {
    if (a == b) return true;
    if (is_empty_node(a) || is_full_node(b)) return true;
    if (auto elems = decide_finite_elements(a)) {
        for (const auto& x : *elems)
            if (!membership(b, x)) return false;
        return true;
    }
    if (auto excl = decide_excluded_elements(b)) {
        // a avoids every non-member of b
        for (const auto& x : *excl)
            if (membership(a, x)) return false;
        return true;
    }
    const auto* pa = std::get_if<SetExpr::ArithProg>(&a.node());
    const auto* pb = std::get_if<SetExpr::ArithProg>(&b.node());
    if (pa && pb)
        return pa->modulus % pb->modulus == 0 &&
               pa->residue % pb->modulus == pb->residue;
    const auto* wa = std::get_if<SetExpr::Powers>(&a.node());
    const auto* wb = std::get_if<SetExpr::Powers>(&b.node());
    if (wa && wb) return wa->exponent % wb->exponent == 0;

    // Structural rules.
    if (const auto* u = std::get_if<SetExpr::Union>(&b.node()))
        if (certified_subset(a, u->left) || certified_subset(a, u->right)) return true;
    if (const auto* i = std::get_if<SetExpr::Intersection>(&b.node()))
        if (certified_subset(a, i->left) && certified_subset(a, i->right)) return true;
    if (const auto* d = std::get_if<SetExpr::Difference>(&b.node()))
        if (certified_subset(a, d->left) && certified_disjoint(a, d->right))
            return true;
    if (const auto* c = std::get_if<SetExpr::Complement>(&b.node()))
        if (certified_disjoint(a, c->inner)) return true;

    if (const auto* u = std::get_if<SetExpr::Union>(&a.node()))
        if (certified_subset(u->left, b) && certified_subset(u->right, b)) return true;
    if (const auto* i = std::get_if<SetExpr::Intersection>(&a.node()))
        if (certified_subset(i->left, b) || certified_subset(i->right, b)) return true;
    if (const auto* d = std::get_if<SetExpr::Difference>(&a.node()))
        if (certified_subset(d->left, b)) return true;
    const auto* ca = std::get_if<SetExpr::Complement>(&a.node());
    const auto* cb = std::get_if<SetExpr::Complement>(&b.node());
    if (ca && cb) return certified_subset(cb->inner, ca->inner);
    return false;
}

bool certified_disjoint(const SetExpr& a, const SetExpr& b) {
    if (is_empty_node(a) || is_empty_node(b)) return true;
    if (auto elems = decide_finite_elements(a)) {
        for (const auto& x : *elems)
            if (membership(b, x)) return false;
        return true;
    }
    if (auto elems = decide_finite_elements(b)) {
        for (const auto& x : *elems)
            if (membership(a, x)) return false;
        return true;
    }
    const auto* pa = std::get_if<SetExpr::ArithProg>(&a.node());
    const auto* pb = std::get_if<SetExpr::ArithProg>(&b.node());
    if (pa && pb && !residues_compatible(*pa, *pb)) return true;

    if (const auto* c = std::get_if<SetExpr::Complement>(&a.node()))
        if (certified_subset(b, c->inner)) return true;
    if (const auto* c = std::get_if<SetExpr::Complement>(&b.node()))
        if (certified_subset(a, c->inner)) return true;
    if (const auto* u = std::get_if<SetExpr::Union>(&a.node()))
        if (certified_disjoint(u->left, b) && certified_disjoint(u->right, b))
            return true;
    if (const auto* u = std::get_if<SetExpr::Union>(&b.node()))
        if (certified_disjoint(a, u->left) && certified_disjoint(a, u->right))
            return true;
    if (const auto* i = std::get_if<SetExpr::Intersection>(&a.node()))
        if (certified_disjoint(i->left, b) || certified_disjoint(i->right, b))
            return true;
    if (const auto* i = std::get_if<SetExpr::Intersection>(&b.node()))
        if (certified_disjoint(a, i->left) || certified_disjoint(a, i->right))
            return true;
    if (const auto* d = std::get_if<SetExpr::Difference>(&a.node()))
        if (certified_disjoint(d->left, b) || certified_subset(b, d->right))
            return true;
    if (const auto* d = std::get_if<SetExpr::Difference>(&b.node()))
        if (certified_disjoint(a, d->left) || certified_subset(a, d->right))
            return true;
    return false;
}

bool certified_partition_of_full(const SetExpr& a, const SetExpr& b) {
    if (!certified_disjoint(a, b)) return false;
    // Complement pair, after structural normalization.
    const SetExpr na = normalize(a);
    const SetExpr nb = normalize(b);
    if (normalize(~na) == nb || normalize(~nb) == na) return true;
    // Two residue classes cover N only with modulus 2.
    const auto* pa = std::get_if<SetExpr::ArithProg>(&na.node());
    const auto* pb = std::get_if<SetExpr::ArithProg>(&nb.node());
    if (pa && pb && pa->modulus == 2 && pb->modulus == 2 &&
        pa->residue != pb->residue)
        return true;
    if (auto excl = decide_excluded_elements(na | nb)) return excl->empty();
    return false;
}

std::optional<BigInt> proper_superset_witness(const SetExpr& a, const SetExpr& b,
                                              std::uint64_t scan_limit) {
    if (auto excl = decide_excluded_elements(a)) {
        for (const auto& x : *excl)
            if (membership(b, x)) return x;
        return std::nullopt;
    }
    for (BigInt n = 1; n <= scan_limit; ++n) {
        if (membership(b, n) && !membership(a, n)) return n;
    }
    return std::nullopt;
}

}  // namespace nsize
