#include "nsize/numerosity.hpp"

namespace nsize {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

CnumClass cnum(const SetExpr& expr) { return CnumClass(partial_sums(expr)); }

CnumClass cnum_add(const CnumClass& a, const CnumClass& b) {
    return CnumClass(SizeSequence::sum(a.representative(), b.representative()));
}

EventualComparison cnum_compare(const CnumClass& a, const CnumClass& b,
                                const BigInt& horizon) {
    EventualComparison cmp =
        compare_eventually(a.representative(), b.representative(), horizon);
    if (cmp.verdict != EventualComparison::Verdict::Unknown) return cmp;

    // Euclidean route: a certified proper subset is strictly smaller in the
    // quotient order, whatever the density rules say.
    const auto& sa = a.representative().source();
    const auto& sb = b.representative().source();
    if (sa && sb) {
        if (certified_subset(*sa, *sb)) {
            if (auto witness = proper_superset_witness(*sa, *sb)) {
                EventualComparison c;
                c.verdict = EventualComparison::Verdict::StrictLess;
                c.leq_eventually = TriBool::True;
                c.geq_eventually = TriBool::False;
                c.eq_eventually = TriBool::False;
                c.evidence = "proper subset; extra element at n = " + to_string(*witness);
                return c;
            }
        }
        if (certified_subset(*sb, *sa)) {
            if (auto witness = proper_superset_witness(*sb, *sa)) {
                EventualComparison c;
                c.verdict = EventualComparison::Verdict::StrictGreater;
                c.leq_eventually = TriBool::False;
                c.geq_eventually = TriBool::True;
                c.eq_eventually = TriBool::False;
                c.evidence = "proper superset; extra element at n = " + to_string(*witness);
                return c;
            }
        }
    }
    return cmp;
}

// --- alpha-numerosity -----------------------------------------------------------

NumerosityAnswer NumerosityAnswer::exact_value(AlphaExpr value) {
    NumerosityAnswer a;
    a.kind = Kind::Exact;
    a.exact = std::move(value);
    return a;
}

NumerosityAnswer NumerosityAnswer::range(AlphaBracket lower, AlphaBracket upper) {
    if (lower.lo > lower.hi || upper.lo > upper.hi || lower.lo > upper.lo ||
        lower.hi > upper.hi)
        throw precondition_error("numerosity range brackets out of order");
    NumerosityAnswer a;
    a.kind = Kind::Range;
    a.lower = std::move(lower);
    a.upper = std::move(upper);
    return a;
}

std::string to_string(const NumerosityAnswer& answer) {
    switch (answer.kind) {
        case NumerosityAnswer::Kind::Exact:
            return "exact " + answer.exact.to_string();
        case NumerosityAnswer::Kind::Range:
            return "range [" + answer.lower.lo.to_string() + ", " +
                   answer.lower.hi.to_string() + "] .. [" + answer.upper.lo.to_string() +
                   ", " + answer.upper.hi.to_string() + "]";
        case NumerosityAnswer::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

NumerosityAnswer shifted(const NumerosityAnswer& a, const AlphaExpr& offset) {
    switch (a.kind) {
        case NumerosityAnswer::Kind::Exact:
            return NumerosityAnswer::exact_value(a.exact + offset);
        case NumerosityAnswer::Kind::Range:
            return NumerosityAnswer::range(
                AlphaBracket{a.lower.lo + offset, a.lower.hi + offset},
                AlphaBracket{a.upper.lo + offset, a.upper.hi + offset});
        case NumerosityAnswer::Kind::Unknown: return NumerosityAnswer::unknown();
    }
    return NumerosityAnswer::unknown();
}

NumerosityAnswer superexp_range() {
    // Dominant terms of the boundary sums: the minimal admissible values lie
    // in (sqrt(a) - a^(1/4), sqrt(a)), the maximal in
    // (a - sqrt(a), a - sqrt(a) + a^(1/4)).
    const AlphaExpr root = AlphaExpr::alpha_power(Rational(1, 2));
    const AlphaExpr fourth = AlphaExpr::alpha_power(Rational(1, 4));
    const AlphaExpr alpha = AlphaExpr::alpha();
    return NumerosityAnswer::range(AlphaBracket{root - fourth, root},
                                   AlphaBracket{alpha - root, alpha - root + fourth});
}

// Count of elements of `candidates` that are members / non-members of expr.
BigInt count_members(const std::vector<BigInt>& candidates, const SetExpr& expr,
                     bool members) {
    BigInt count = 0;
    for (const auto& x : candidates)
        if (membership(expr, x) == members) ++count;
    return count;
}

NumerosityAnswer evaluate(const SetExpr& expr, Profile profile);

NumerosityAnswer evaluate_arith_prog(const SetExpr::ArithProg& ap, Profile profile) {
    const AlphaExpr share = AlphaExpr::term(make_rational(1, ap.modulus), 1);
    if (ap.modulus == 1) return NumerosityAnswer::exact_value(AlphaExpr::alpha());
    if (profile == Profile::Canonical) return NumerosityAnswer::exact_value(share);
    const AlphaExpr one = AlphaExpr::constant(1);
    if (ap.modulus == 2 && ap.residue == 0) {
        // Offset argument for the evens: the admissible values are a/2 - 1
        // and a/2, nothing else.
        return NumerosityAnswer::range(AlphaBracket{share - one, share - one},
                                       AlphaBracket{share, share});
    }
    // General residue classes: finite slack around a/a_mod, bounded by 1.
    return NumerosityAnswer::range(AlphaBracket{share - one, share - one},
                                   AlphaBracket{share + one, share + one});
}

NumerosityAnswer evaluate_powers(const SetExpr::Powers& p, Profile profile) {
    const AlphaExpr root = AlphaExpr::alpha_power(Rational(1, p.exponent));
    if (profile == Profile::Canonical) return NumerosityAnswer::exact_value(root);
    // Hypernatural floor of a^(1/p): strictly above a^(1/p) - 1, at most
    // a^(1/p).
    const AlphaExpr one = AlphaExpr::constant(1);
    return NumerosityAnswer::range(AlphaBracket{root - one, root},
                                   AlphaBracket{root - one, root});
}

NumerosityAnswer evaluate(const SetExpr& expr, Profile profile) {
    // Finite and co-finite sets are pinned by the axioms under every profile.
    if (auto elems = decide_finite_elements(expr))
        return NumerosityAnswer::exact_value(
            AlphaExpr::constant(Rational(BigInt(elems->size()))));
    if (auto excl = decide_excluded_elements(expr))
        return NumerosityAnswer::exact_value(
            AlphaExpr::alpha() - AlphaExpr::constant(Rational(BigInt(excl->size()))));

    return std::visit(
        overloaded{
            [&](const SetExpr::ArithProg& x) { return evaluate_arith_prog(x, profile); },
            [&](const SetExpr::Powers& x) { return evaluate_powers(x, profile); },
            [&](const SetExpr::Primes&) { return NumerosityAnswer::unknown(); },
            [&](const SetExpr::BlockSet& x) {
                if (std::holds_alternative<SuperExpBlocks>(x.schedule))
                    return superexp_range();
                return NumerosityAnswer::unknown();
            },
            [&](const SetExpr::Complement& x) {
                // num(~S) = alpha - num(S) for every admissible assignment,
                // so ranges flip around alpha.
                const NumerosityAnswer inner = evaluate(x.inner, profile);
                const AlphaExpr alpha = AlphaExpr::alpha();
                switch (inner.kind) {
                    case NumerosityAnswer::Kind::Exact:
                        return NumerosityAnswer::exact_value(alpha - inner.exact);
                    case NumerosityAnswer::Kind::Range:
                        return NumerosityAnswer::range(
                            AlphaBracket{alpha - inner.upper.hi, alpha - inner.upper.lo},
                            AlphaBracket{alpha - inner.lower.hi, alpha - inner.lower.lo});
                    case NumerosityAnswer::Kind::Unknown:
                        return NumerosityAnswer::unknown();
                }
                return NumerosityAnswer::unknown();
            },
            [&](const SetExpr::Union& x) {
                // A certified partition of N has numerosity alpha under any
                // admissible assignment.
                if (certified_partition_of_full(x.left, x.right))
                    return NumerosityAnswer::exact_value(AlphaExpr::alpha());
                // Finite perturbation: additivity gives num(S) + |F \ S|.
                if (auto elems = decide_finite_elements(x.right)) {
                    const NumerosityAnswer left = evaluate(x.left, profile);
                    if (left.kind == NumerosityAnswer::Kind::Unknown)
                        return NumerosityAnswer::unknown();
                    return shifted(left, AlphaExpr::constant(Rational(
                                             count_members(*elems, x.left, false))));
                }
                if (auto elems = decide_finite_elements(x.left)) {
                    const NumerosityAnswer right = evaluate(x.right, profile);
                    if (right.kind == NumerosityAnswer::Kind::Unknown)
                        return NumerosityAnswer::unknown();
                    return shifted(right, AlphaExpr::constant(Rational(
                                              count_members(*elems, x.right, false))));
                }
                if (certified_disjoint(x.left, x.right)) {
                    const NumerosityAnswer left = evaluate(x.left, profile);
                    const NumerosityAnswer right = evaluate(x.right, profile);
                    if (left.kind == NumerosityAnswer::Kind::Exact &&
                        right.kind == NumerosityAnswer::Kind::Exact)
                        return NumerosityAnswer::exact_value(left.exact + right.exact);
                }
                return NumerosityAnswer::unknown();
            },
            [&](const SetExpr::Difference& x) {
                // Removing a finite slice: num(S) - |F intersect S|.
                if (auto elems = decide_finite_elements(x.right)) {
                    const NumerosityAnswer left = evaluate(x.left, profile);
                    if (left.kind == NumerosityAnswer::Kind::Unknown)
                        return NumerosityAnswer::unknown();
                    return shifted(left, -AlphaExpr::constant(Rational(
                                             count_members(*elems, x.left, true))));
                }
                // Subtracting a certified subset with exact answers.
                if (certified_subset(x.right, x.left)) {
                    const NumerosityAnswer left = evaluate(x.left, profile);
                    const NumerosityAnswer right = evaluate(x.right, profile);
                    if (left.kind == NumerosityAnswer::Kind::Exact &&
                        right.kind == NumerosityAnswer::Kind::Exact)
                        return NumerosityAnswer::exact_value(left.exact - right.exact);
                }
                return NumerosityAnswer::unknown();
            },
            [&](const SetExpr::Intersection& x) {
                // Intersection with a co-finite set removes finitely many
                // elements.
                if (auto excl = decide_excluded_elements(x.right)) {
                    const NumerosityAnswer left = evaluate(x.left, profile);
                    if (left.kind == NumerosityAnswer::Kind::Unknown)
                        return NumerosityAnswer::unknown();
                    return shifted(left, -AlphaExpr::constant(Rational(
                                             count_members(*excl, x.left, true))));
                }
                if (auto excl = decide_excluded_elements(x.left)) {
                    const NumerosityAnswer right = evaluate(x.right, profile);
                    if (right.kind == NumerosityAnswer::Kind::Unknown)
                        return NumerosityAnswer::unknown();
                    return shifted(right, -AlphaExpr::constant(Rational(
                                              count_members(*excl, x.right, true))));
                }
                return NumerosityAnswer::unknown();
            },
            [&](const auto&) { return NumerosityAnswer::unknown(); },
        },
        expr.node());
}

}  // namespace

NumerosityAnswer alpha_numerosity(const SetExpr& expr, Profile profile) {
    return evaluate(expr, profile);
}

Supervaluation supervaluation(const SetExpr& expr) {
    Supervaluation s;
    if (auto elems = decide_finite_elements(expr)) {
        s.has_super = true;
        s.super = AlphaExpr::constant(Rational(BigInt(elems->size())));
        return s;
    }
    if (auto excl = decide_excluded_elements(expr)) {
        s.has_super = true;
        s.super = AlphaExpr::alpha() - AlphaExpr::constant(Rational(BigInt(excl->size())));
        return s;
    }
    s.has_super = false;
    s.subs = alpha_numerosity(expr, Profile::Free);
    return s;
}

}  // namespace nsize
