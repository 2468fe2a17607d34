#include "nsize/sequence.hpp"

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

constexpr std::uint64_t kPeriodLimit = 1u << 16;
constexpr std::uint64_t kPreperiodLimit = 1u << 16;

void warm_sieve_for(const SizeSequence& seq, const BigInt& limit);

}  // namespace

BigInt prime_count(const BigInt& n) {
    if (n < 2) return 0;
    if (n > enumeration_cap())
        throw resource_error("prime_count: n exceeds the enumeration cap");
    return BigInt(sieved_prime_count(static_cast<std::uint64_t>(n)));
}

// --- closed-form evaluation ----------------------------------------------------

namespace {

BigInt floor_linear_count(const BigInt& a, const BigInt& i, const BigInt& n) {
    if (i == 0) return n / a;
    if (n < i) return 0;
    return (n - i) / a + 1;
}

BigInt superexp_count(const BigInt& n) {
    if (n <= 2) return 0;
    std::vector<BigInt> thresholds{2};  // 2^(2^0), 2^(2^1), ...
    while (n > thresholds.back()) {
        const BigInt& t = thresholds.back();
        thresholds.push_back(t * t);
    }
    const std::size_t k = thresholds.size() - 1;  // smallest k with n <= 2^(2^k)
    BigInt f = 0;
    for (std::size_t j = 1; j < k; ++j) {
        if (j & 1u) f += thresholds[j] - thresholds[j - 1];
    }
    if (k & 1u) f += n - thresholds[k - 1];
    return f;
}

BigInt bit_length_odd_count(const BigInt& n) {
    const unsigned m = bit_length(n);
    if (m & 1u) {
        const BigInt start = pow2(m - 1);
        return (start - 1) / 3 + (n - start + 1);
    }
    return (pow2(m) - 1) / 3;
}

BigInt leading_digit_count(int digit, const BigInt& n) {
    // Decade [10^m, 10^(m+1)) containing n.
    unsigned m = 0;
    BigInt decade = 1;
    while (decade * 10 <= n) {
        decade *= 10;
        ++m;
    }
    BigInt f = (decade - 1) / 9;  // one full run of 10^j values per decade j < m
    const BigInt lo = digit * decade;
    if (n >= lo) f += std::min(BigInt(n - lo + 1), decade);
    return f;
}

BigInt geometric_blocks_count(const GeometricBlocks& gb, const BigInt& n) {
    if (n < gb.start) return 0;
    BigInt block_start = gb.start;
    unsigned j = 0;
    BigInt f = 0;
    while (block_start * gb.ratio <= n) {
        if (((j & 1u) == 0u) == gb.include_even)
            f += block_start * (gb.ratio - 1);
        block_start *= gb.ratio;
        ++j;
    }
    if (((j & 1u) == 0u) == gb.include_even) f += n - block_start + 1;
    return f;
}

BigInt block_sum_count(const BlockSchedule& schedule, const BigInt& n) {
    return std::visit(
        overloaded{
            [&](const SuperExpBlocks&) { return superexp_count(n); },
            [&](const BitLengthParity&) { return bit_length_odd_count(n); },
            [&](const LeadingDecimal& ld) { return leading_digit_count(ld.digit, n); },
            [&](const GeometricBlocks& gb) { return geometric_blocks_count(gb, n); },
        },
        schedule);
}

BigInt count_upto(const std::vector<BigInt>& sorted, const BigInt& n) {
    return BigInt(std::upper_bound(sorted.begin(), sorted.end(), n) - sorted.begin());
}

}  // namespace

// --- SizeSequence ---------------------------------------------------------------

struct SizeSequence::Impl {
    std::optional<SetExpr> source;
    ClosedForm form = NoClosedForm{};
    GrowthDescriptor desc;
    std::vector<BigInt> prefix_override;
};

SizeSequence::SizeSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

const GrowthDescriptor& SizeSequence::descriptor() const { return impl_->desc; }
const std::optional<SetExpr>& SizeSequence::source() const { return impl_->source; }
const SizeSequence::ClosedForm& SizeSequence::closed_form() const { return impl_->form; }

bool SizeSequence::has_closed_form() const {
    return !std::holds_alternative<NoClosedForm>(impl_->form);
}

bool shares_state(const SizeSequence& a, const SizeSequence& b) {
    return a.impl_ == b.impl_;
}

BigInt SizeSequence::value_at(const BigInt& n) const {
    if (n < 1) throw precondition_error("value_at: n must be >= 1");
    if (!impl_->prefix_override.empty() && n <= impl_->prefix_override.size())
        return impl_->prefix_override[static_cast<std::size_t>(n) - 1];
    return std::visit(
        overloaded{
            [&](const FloorLinear& cf) {
                return floor_linear_count(cf.modulus, cf.residue, n);
            },
            [&](const RootFloor& cf) { return iroot(n, cf.exponent); },
            [&](const PrimeCount&) { return prime_count(n); },
            [&](const BlockSum& cf) { return block_sum_count(cf.schedule, n); },
            [&](const ExplicitFinite& cf) { return count_upto(cf.elements, n); },
            [&](const ExplicitCoFinite& cf) {
                return BigInt(n - count_upto(cf.excluded, n));
            },
            [&](const PeriodicTable& cf) {
                if (n <= cf.preperiod)
                    return cf.prefix_counts[static_cast<std::size_t>(n) - 1];
                const BigInt base =
                    cf.prefix_counts.empty() ? BigInt(0) : cf.prefix_counts.back();
                const BigInt offset = n - cf.preperiod;
                const BigInt full = offset / cf.period;
                const auto rem = static_cast<std::size_t>(offset % cf.period);
                return BigInt(base + full * cf.gain + cf.window_counts[rem]);
            },
            [&](const SumParts& cf) {
                BigInt total = 0;
                for (const auto& part : *cf.parts) total += part.value_at(n);
                return total;
            },
            [&](const NoClosedForm&) {
                if (!impl_->source)
                    throw resource_error("value_at: no closed form and no source");
                if (n > enumeration_cap())
                    throw resource_error(
                        "value_at: enumeration beyond cap and no closed form");
                if (mentions_primes(*impl_->source))
                    ensure_prime_sieve(static_cast<std::uint64_t>(n));
                BigInt count = 0;
                for (BigInt i = 1; i <= n; ++i)
                    if (membership(*impl_->source, i)) ++count;
                return count;
            },
        },
        impl_->form);
}

std::size_t SizeSequence::prefix_override_length() const {
    return impl_->prefix_override.size();
}

SizeSequence SizeSequence::with_prefix_override(std::vector<BigInt> values) const {
    auto impl = std::make_shared<Impl>(*impl_);
    impl->prefix_override = std::move(values);
    if (impl->desc.periodic) {
        const BigInt len(impl->prefix_override.size());
        if (impl->desc.periodic->preperiod < len) impl->desc.periodic->preperiod = len;
    }
    return SizeSequence(std::move(impl));
}

SizeSequence SizeSequence::sum(const SizeSequence& a, const SizeSequence& b) {
    auto impl = std::make_shared<Impl>();
    auto parts = std::make_shared<std::vector<SizeSequence>>();
    const auto identically_zero = [](const SizeSequence& s) {
        const auto* fin = std::get_if<ExplicitFinite>(&s.impl_->form);
        return fin && fin->elements.empty() && s.impl_->prefix_override.empty();
    };
    const auto flatten = [&](const SizeSequence& s) {
        if (identically_zero(s)) return;
        if (const auto* sp = std::get_if<SumParts>(&s.impl_->form);
            sp && s.impl_->prefix_override.empty()) {
            parts->insert(parts->end(), sp->parts->begin(), sp->parts->end());
        } else {
            parts->push_back(s);
        }
    };
    flatten(a);
    flatten(b);
    if (parts->empty()) {
        impl->form = ExplicitFinite{{}};
        impl->desc.lower_density = Rational(0);
        impl->desc.upper_density = Rational(0);
        impl->desc.periodic = PeriodicDescriptor{0, 1, 0};
        return SizeSequence(std::move(impl));
    }
    if (parts->size() == 1) return parts->front();
    impl->form = SumParts{parts};

    const auto& da = a.descriptor();
    const auto& db = b.descriptor();
    GrowthDescriptor desc;
    if (da.periodic && db.periodic) {
        const BigInt period = boost::multiprecision::lcm(da.periodic->period,
                                                         db.periodic->period);
        if (period <= kPeriodLimit) {
            PeriodicDescriptor pd;
            pd.preperiod = std::max(da.periodic->preperiod, db.periodic->preperiod);
            pd.period = period;
            pd.gain = da.periodic->gain * (period / da.periodic->period) +
                      db.periodic->gain * (period / db.periodic->period);
            desc.periodic = pd;
        }
    }
    if (desc.periodic) {
        const Rational d = make_rational(desc.periodic->gain, desc.periodic->period);
        desc.lower_density = d;
        desc.upper_density = d;
    } else if (da.has_exact_density() && db.has_exact_density()) {
        const Rational d = *da.lower_density + *db.lower_density;
        desc.lower_density = d;
        desc.upper_density = d;
    }
    impl->desc = std::move(desc);
    return SizeSequence(std::move(impl));
}

// --- growth descriptors -----------------------------------------------------------

namespace {

std::pair<Rational, Rational> block_density_bounds(const BlockSchedule& schedule) {
    return std::visit(
        overloaded{
            [&](const SuperExpBlocks&) {
                return std::pair<Rational, Rational>(0, 1);
            },
            [&](const BitLengthParity&) {
                return std::pair<Rational, Rational>(Rational(1, 3), Rational(2, 3));
            },
            [&](const LeadingDecimal& ld) {
                return std::pair<Rational, Rational>(
                    Rational(1, 9 * ld.digit), Rational(10, 9 * (ld.digit + 1)));
            },
            [&](const GeometricBlocks& gb) {
                return std::pair<Rational, Rational>(
                    Rational(1, gb.ratio + 1), Rational(gb.ratio, gb.ratio + 1));
            },
        },
        schedule);
}

GrowthDescriptor exact_periodic(BigInt preperiod, BigInt period, BigInt gain) {
    GrowthDescriptor d;
    const Rational density = make_rational(gain, period);
    d.lower_density = density;
    d.upper_density = density;
    d.periodic = PeriodicDescriptor{std::move(preperiod), std::move(period),
                                    std::move(gain)};
    return d;
}

bool upper_is_zero(const GrowthDescriptor& d) {
    return d.upper_density && *d.upper_density == 0;
}
bool lower_is_one(const GrowthDescriptor& d) {
    return d.lower_density && *d.lower_density == 1;
}

GrowthDescriptor zero_density() {
    GrowthDescriptor d;
    d.lower_density = Rational(0);
    d.upper_density = Rational(0);
    return d;
}

enum class BoolOp { Union, Intersection, Difference };

GrowthDescriptor compose_binary(const SetExpr& whole, const SetExpr& left,
                                const SetExpr& right, const GrowthDescriptor& dl,
                                const GrowthDescriptor& dr, BoolOp op) {
    // Exact route: both characteristic sequences eventually periodic.
    if (dl.periodic && dr.periodic) {
        const BigInt period =
            boost::multiprecision::lcm(dl.periodic->period, dr.periodic->period);
        const BigInt preperiod =
            std::max(dl.periodic->preperiod, dr.periodic->preperiod);
        if (period <= kPeriodLimit && preperiod <= kPreperiodLimit) {
            BigInt gain = 0;
            for (BigInt n = preperiod + 1; n <= preperiod + period; ++n)
                if (membership(whole, n)) ++gain;
            return exact_periodic(preperiod, period, gain);
        }
    }
    GrowthDescriptor d;
    switch (op) {
        case BoolOp::Union:
            if (dl.has_exact_density() && dr.has_exact_density() &&
                certified_disjoint(left, right)) {
                const Rational sum = *dl.lower_density + *dr.lower_density;
                d.lower_density = sum;
                d.upper_density = sum;
            } else if (upper_is_zero(dr)) {
                d.lower_density = dl.lower_density;
                d.upper_density = dl.upper_density;
            } else if (upper_is_zero(dl)) {
                d.lower_density = dr.lower_density;
                d.upper_density = dr.upper_density;
            } else if (lower_is_one(dl) || lower_is_one(dr)) {
                d.lower_density = Rational(1);
                d.upper_density = Rational(1);
            }
            break;
        case BoolOp::Intersection:
            if (upper_is_zero(dl) || upper_is_zero(dr)) {
                d = zero_density();
            } else if (lower_is_one(dr)) {
                d.lower_density = dl.lower_density;
                d.upper_density = dl.upper_density;
            } else if (lower_is_one(dl)) {
                d.lower_density = dr.lower_density;
                d.upper_density = dr.upper_density;
            }
            break;
        case BoolOp::Difference:
            if (upper_is_zero(dl) || lower_is_one(dr)) {
                d = zero_density();
            } else if (upper_is_zero(dr)) {
                d.lower_density = dl.lower_density;
                d.upper_density = dl.upper_density;
            }
            break;
    }
    return d;
}

}  // namespace

GrowthDescriptor growth_descriptor(const SetExpr& expr) {
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) { return exact_periodic(0, 1, 0); },
            [&](const SetExpr::Full&) { return exact_periodic(0, 1, 1); },
            [&](const SetExpr::FiniteSet& x) {
                return exact_periodic(x.elements.empty() ? 0 : x.elements.back(), 1, 0);
            },
            [&](const SetExpr::CoFiniteSet& x) {
                return exact_periodic(x.excluded.empty() ? 0 : x.excluded.back(), 1, 1);
            },
            [&](const SetExpr::ArithProg& x) {
                return exact_periodic(0, x.modulus, 1);
            },
            [&](const SetExpr::Powers&) { return zero_density(); },
            [&](const SetExpr::Primes&) {
                // Prime number theorem, taken as an axiom of the rule table.
                return zero_density();
            },
            [&](const SetExpr::BlockSet& x) {
                GrowthDescriptor d;
                auto [lo, hi] = block_density_bounds(x.schedule);
                d.lower_density = lo;
                d.upper_density = hi;
                return d;
            },
            [&](const SetExpr::Complement& x) {
                GrowthDescriptor inner = growth_descriptor(x.inner);
                GrowthDescriptor d;
                if (inner.periodic) {
                    d.periodic = PeriodicDescriptor{
                        inner.periodic->preperiod, inner.periodic->period,
                        inner.periodic->period - inner.periodic->gain};
                }
                if (inner.upper_density) d.lower_density = 1 - *inner.upper_density;
                if (inner.lower_density) d.upper_density = 1 - *inner.lower_density;
                return d;
            },
            [&](const SetExpr::Union& x) {
                return compose_binary(expr, x.left, x.right,
                                      growth_descriptor(x.left),
                                      growth_descriptor(x.right), BoolOp::Union);
            },
            [&](const SetExpr::Intersection& x) {
                return compose_binary(expr, x.left, x.right,
                                      growth_descriptor(x.left),
                                      growth_descriptor(x.right),
                                      BoolOp::Intersection);
            },
            [&](const SetExpr::Difference& x) {
                return compose_binary(expr, x.left, x.right,
                                      growth_descriptor(x.left),
                                      growth_descriptor(x.right),
                                      BoolOp::Difference);
            },
        },
        expr.node());
}

// --- partial sums -----------------------------------------------------------------

namespace {

SizeSequence::ClosedForm closed_form_for(const SetExpr& expr,
                                         const GrowthDescriptor& desc) {
    using CF = SizeSequence::ClosedForm;
    return std::visit(
        overloaded{
            [&](const SetExpr::Empty&) -> CF {
                return SizeSequence::ExplicitFinite{{}};
            },
            [&](const SetExpr::Full&) -> CF {
                return SizeSequence::FloorLinear{1, 0};
            },
            [&](const SetExpr::FiniteSet& x) -> CF {
                return SizeSequence::ExplicitFinite{x.elements};
            },
            [&](const SetExpr::CoFiniteSet& x) -> CF {
                return SizeSequence::ExplicitCoFinite{x.excluded};
            },
            [&](const SetExpr::ArithProg& x) -> CF {
                return SizeSequence::FloorLinear{x.modulus, x.residue};
            },
            [&](const SetExpr::Powers& x) -> CF {
                return SizeSequence::RootFloor{x.exponent};
            },
            [&](const SetExpr::Primes&) -> CF { return SizeSequence::PrimeCount{}; },
            [&](const SetExpr::BlockSet& x) -> CF {
                return SizeSequence::BlockSum{x.schedule};
            },
            [&](const auto&) -> CF {
                // Boolean combination: exact table when eventually periodic.
                if (desc.periodic && desc.periodic->preperiod <= kPreperiodLimit &&
                    desc.periodic->period <= kPeriodLimit) {
                    SizeSequence::PeriodicTable table;
                    table.preperiod =
                        static_cast<std::uint64_t>(desc.periodic->preperiod);
                    table.period = static_cast<std::uint64_t>(desc.periodic->period);
                    table.gain = desc.periodic->gain;
                    table.prefix_counts.reserve(table.preperiod);
                    BigInt count = 0;
                    for (std::uint64_t n = 1; n <= table.preperiod; ++n) {
                        if (membership(expr, n)) ++count;
                        table.prefix_counts.push_back(count);
                    }
                    table.window_counts.reserve(table.period + 1);
                    BigInt window = 0;
                    table.window_counts.push_back(window);
                    for (std::uint64_t t = 1; t <= table.period; ++t) {
                        if (membership(expr, BigInt(table.preperiod) + t)) ++window;
                        table.window_counts.push_back(window);
                    }
                    return table;
                }
                return SizeSequence::NoClosedForm{};
            },
        },
        expr.node());
}

}  // namespace

SizeSequence partial_sums(const SetExpr& expr) {
    auto impl = std::make_shared<SizeSequence::Impl>();
    impl->source = expr;
    impl->desc = growth_descriptor(expr);
    impl->form = closed_form_for(expr, impl->desc);
    return SizeSequence(std::move(impl));
}

// --- eventual comparison ------------------------------------------------------------

std::string to_string(EventualComparison::Verdict v) {
    using V = EventualComparison::Verdict;
    switch (v) {
        case V::Equal: return "Equal";
        case V::StrictLess: return "StrictLess";
        case V::StrictGreater: return "StrictGreater";
        case V::WeakLess: return "WeakLess";
        case V::WeakGreater: return "WeakGreater";
        case V::Incomparable: return "Incomparable";
        case V::Unknown: return "Unknown";
    }
    return "Unknown";
}

BigInt default_compare_horizon() { return BigInt(1) << 20; }

namespace {

using Verdict = EventualComparison::Verdict;

EventualComparison make_equal() {
    EventualComparison c;
    c.verdict = Verdict::Equal;
    c.leq_eventually = TriBool::True;
    c.geq_eventually = TriBool::True;
    c.eq_eventually = TriBool::True;
    c.eventual_diff_range = {BigInt(0), BigInt(0)};
    return c;
}

EventualComparison make_strict(bool less) {
    EventualComparison c;
    c.verdict = less ? Verdict::StrictLess : Verdict::StrictGreater;
    c.leq_eventually = less ? TriBool::True : TriBool::False;
    c.geq_eventually = less ? TriBool::False : TriBool::True;
    c.eq_eventually = TriBool::False;
    return c;
}

bool closed_forms_identical(const SizeSequence::ClosedForm& a,
                            const SizeSequence::ClosedForm& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const SizeSequence::FloorLinear& x) {
                const auto& y = std::get<SizeSequence::FloorLinear>(b);
                return x.modulus == y.modulus && x.residue == y.residue;
            },
            [&](const SizeSequence::RootFloor& x) {
                return x.exponent == std::get<SizeSequence::RootFloor>(b).exponent;
            },
            [&](const SizeSequence::PrimeCount&) { return true; },
            [&](const SizeSequence::BlockSum& x) {
                return x.schedule == std::get<SizeSequence::BlockSum>(b).schedule;
            },
            [&](const SizeSequence::ExplicitFinite& x) {
                return x.elements == std::get<SizeSequence::ExplicitFinite>(b).elements;
            },
            [&](const SizeSequence::ExplicitCoFinite& x) {
                return x.excluded == std::get<SizeSequence::ExplicitCoFinite>(b).excluded;
            },
            [&](const auto&) { return false; },
        },
        a);
}

// Checkpoints where a block schedule's running ratio peaks (ends of included
// blocks) and bottoms out (ends of excluded blocks).
struct BlockCheckpoints {
    std::string high_description, low_description;
    std::vector<BigInt> high, low;
};

BlockCheckpoints block_checkpoints(const BlockSchedule& schedule) {
    BlockCheckpoints cp;
    std::visit(
        overloaded{
            [&](const SuperExpBlocks&) {
                cp.high_description = "n = 2^(2^k), k odd";
                cp.low_description = "n = 2^(2^k), k even";
                for (unsigned k = 1; k <= 7; k += 2) cp.high.push_back(pow2_tower(k));
                for (unsigned k = 2; k <= 6; k += 2) cp.low.push_back(pow2_tower(k));
            },
            [&](const BitLengthParity&) {
                cp.high_description = "n = 2^m - 1, m odd";
                cp.low_description = "n = 2^m - 1, m even";
                for (unsigned m = 25; m <= 39; m += 2) cp.high.push_back(pow2(m) - 1);
                for (unsigned m = 26; m <= 40; m += 2) cp.low.push_back(pow2(m) - 1);
            },
            [&](const LeadingDecimal& ld) {
                cp.high_description = "n at ends of included decades";
                cp.low_description = "n just before included decades";
                for (unsigned m = 6; m <= 12; m += 2) {
                    cp.high.push_back((ld.digit + 1) * ipow(10, m) - 1);
                    cp.low.push_back(ld.digit * ipow(10, m) - 1);
                }
            },
            [&](const GeometricBlocks& gb) {
                cp.high_description = "ends of included blocks";
                cp.low_description = "ends of excluded blocks";
                BigInt boundary = gb.start;
                for (unsigned j = 0; j <= 40; ++j) {
                    const BigInt end = boundary * gb.ratio - 1;
                    if (j >= 20) {
                        const bool included = ((j & 1u) == 0u) == gb.include_even;
                        (included ? cp.high : cp.low).push_back(end);
                    }
                    boundary *= gb.ratio;
                }
            },
        },
        schedule);
    return cp;
}

std::optional<BlockSchedule> find_block_schedule(const SetExpr& expr) {
    if (const auto* bs = std::get_if<SetExpr::BlockSet>(&expr.node()))
        return bs->schedule;
    return std::visit(
        overloaded{
            [&](const SetExpr::Union& x) -> std::optional<BlockSchedule> {
                auto l = find_block_schedule(x.left);
                return l ? l : find_block_schedule(x.right);
            },
            [&](const SetExpr::Intersection& x) -> std::optional<BlockSchedule> {
                auto l = find_block_schedule(x.left);
                return l ? l : find_block_schedule(x.right);
            },
            [&](const SetExpr::Difference& x) -> std::optional<BlockSchedule> {
                auto l = find_block_schedule(x.left);
                return l ? l : find_block_schedule(x.right);
            },
            [&](const SetExpr::Complement& x) {
                return find_block_schedule(x.inner);
            },
            [&](const auto&) -> std::optional<BlockSchedule> { return std::nullopt; },
        },
        expr.node());
}

// Keep only checkpoints where (left - right) has the requested sign; both
// sides evaluated exactly.
WitnessFamily verify_family(const SizeSequence& a, const SizeSequence& b,
                            const std::vector<BigInt>& candidates, int wanted_sign,
                            std::string description) {
    WitnessFamily family;
    family.description = std::move(description);
    for (const auto& n : candidates) {
        try {
            const BigInt diff = a.value_at(n) - b.value_at(n);
            if ((wanted_sign > 0 && diff > 0) || (wanted_sign < 0 && diff < 0))
                family.samples.push_back(n);
        } catch (const resource_error&) {
            // checkpoint out of evaluation reach; skip
        }
        if (family.samples.size() >= 4) break;
    }
    return family;
}

void warm_sieve_for(const SizeSequence& seq, const BigInt& limit) {
    if (seq.source() && mentions_primes(*seq.source()))
        ensure_prime_sieve(static_cast<std::uint64_t>(limit));
    if (const auto* sum = std::get_if<SizeSequence::SumParts>(&seq.closed_form()))
        for (const auto& part : *sum->parts) warm_sieve_for(part, limit);
}

// Incremental evaluator for horizon scans.
class Cursor {
  public:
    explicit Cursor(const SizeSequence& seq) : seq_(seq) {
        if (const auto* sum = std::get_if<SizeSequence::SumParts>(&seq.closed_form())) {
            for (const auto& part : *sum->parts) children_.emplace_back(part);
        }
    }

    // Value at n = calls so far + 1.
    BigInt next() {
        ++n_;
        BigInt value;
        if (!children_.empty()) {
            value = 0;
            for (auto& child : children_) value += child.next();
        } else if (seq_.source()) {
            if (membership(*seq_.source(), n_)) ++count_;
            value = count_;
        } else {
            value = seq_.value_at(n_);
        }
        if (n_ <= seq_.prefix_override_length()) return seq_.value_at(n_);
        return value;
    }

  private:
    SizeSequence seq_;
    std::vector<Cursor> children_;
    BigInt n_ = 0;
    BigInt count_ = 0;
};

}  // namespace

EventualComparison compare_eventually(const SizeSequence& a, const SizeSequence& b,
                                      const BigInt& horizon) {
    if (shares_state(a, b)) return make_equal();
    if (a.source() && b.source() && *a.source() == *b.source()) return make_equal();
    if (closed_forms_identical(a.closed_form(), b.closed_form())) return make_equal();

    const auto& da = a.descriptor();
    const auto& db = b.descriptor();

    // Exact decision for eventually periodic pairs.
    if (da.periodic && db.periodic) {
        const BigInt period =
            boost::multiprecision::lcm(da.periodic->period, db.periodic->period);
        if (period <= kPeriodLimit) {
            const BigInt gain_a = da.periodic->gain * (period / da.periodic->period);
            const BigInt gain_b = db.periodic->gain * (period / db.periodic->period);
            if (gain_a != gain_b) return make_strict(gain_a < gain_b);
            const BigInt start = std::max(da.periodic->preperiod, db.periodic->preperiod);
            EventualComparison c;
            BigInt min_diff, max_diff;
            std::vector<BigInt> left_ahead_at, right_ahead_at;
            bool first = true;
            for (BigInt n = start + 1; n <= start + period; ++n) {
                const BigInt diff = b.value_at(n) - a.value_at(n);
                if (first || diff < min_diff) min_diff = diff;
                if (first || diff > max_diff) max_diff = diff;
                first = false;
                if (diff < 0 && left_ahead_at.size() < 4) left_ahead_at.push_back(n);
                if (diff > 0 && right_ahead_at.size() < 4) right_ahead_at.push_back(n);
            }
            c.eventual_diff_range = {min_diff, max_diff};
            if (min_diff == 0 && max_diff == 0) return make_equal();
            if (min_diff > 0) return make_strict(true);
            if (max_diff < 0) return make_strict(false);
            if (min_diff >= 0) {
                c.verdict = Verdict::WeakLess;
                c.leq_eventually = TriBool::True;
                c.geq_eventually = TriBool::False;
                c.eq_eventually = TriBool::False;
                return c;
            }
            if (max_diff <= 0) {
                c.verdict = Verdict::WeakGreater;
                c.leq_eventually = TriBool::False;
                c.geq_eventually = TriBool::True;
                c.eq_eventually = TriBool::False;
                return c;
            }
            c.verdict = Verdict::Incomparable;
            c.leq_eventually = TriBool::False;
            c.geq_eventually = TriBool::False;
            c.eq_eventually = TriBool::False;
            std::ostringstream note;
            note << "pattern repeats with period " << period;
            c.left_ahead = WitnessFamily{note.str(), std::move(left_ahead_at)};
            c.right_ahead = WitnessFamily{note.str(), std::move(right_ahead_at)};
            return c;
        }
    }

    // Distinct exact densities force a strict eventual order.
    if (da.has_exact_density() && db.has_exact_density() &&
        *da.lower_density != *db.lower_density) {
        return make_strict(*da.lower_density < *db.lower_density);
    }

    // Straddling liminf/limsup bounds certify incomparability.
    if (da.lower_density && da.upper_density && db.lower_density && db.upper_density) {
        const bool a_straddles =
            *da.upper_density > *db.upper_density && *da.lower_density < *db.lower_density;
        const bool b_straddles =
            *db.upper_density > *da.upper_density && *db.lower_density < *da.lower_density;
        if (a_straddles || b_straddles) {
            EventualComparison c;
            c.verdict = Verdict::Incomparable;
            c.leq_eventually = TriBool::False;
            c.geq_eventually = TriBool::False;
            c.eq_eventually = TriBool::False;
            std::optional<BlockSchedule> schedule;
            bool block_on_left = false;
            if (a_straddles && a.source()) {
                schedule = find_block_schedule(*a.source());
                block_on_left = true;
            }
            if (!schedule && b_straddles && b.source()) {
                schedule = find_block_schedule(*b.source());
                block_on_left = false;
            }
            if (schedule) {
                const BlockCheckpoints cp = block_checkpoints(*schedule);
                if (block_on_left) {
                    c.left_ahead = verify_family(a, b, cp.high, +1, cp.high_description);
                    c.right_ahead = verify_family(a, b, cp.low, -1, cp.low_description);
                } else {
                    c.right_ahead = verify_family(a, b, cp.high, -1, cp.high_description);
                    c.left_ahead = verify_family(a, b, cp.low, +1, cp.low_description);
                }
                // A complemented block set peaks where the schedule bottoms
                // out; retry with the families swapped.
                if (c.left_ahead->samples.empty())
                    c.left_ahead = verify_family(
                        a, b, block_on_left ? cp.low : cp.high, +1,
                        block_on_left ? cp.low_description : cp.high_description);
                if (c.right_ahead->samples.empty())
                    c.right_ahead = verify_family(
                        a, b, block_on_left ? cp.high : cp.low, -1,
                        block_on_left ? cp.high_description : cp.low_description);
            }
            return c;
        }
    }

    // Finiteness classes separate sequences outright: an eventually constant
    // count is eventually below any diverging one, and an infinite
    // co-infinite set stays below every co-finite set (its complement keeps
    // growing).
    if (a.source() && b.source()) {
        const auto rank = [](const SetExpr& e) -> int {
            switch (classify_finiteness(e).kind) {
                case FinitenessClass::Kind::Finite: return 0;
                case FinitenessClass::Kind::InfiniteCoInfinite: return 1;
                case FinitenessClass::Kind::CoFinite: return 2;
                case FinitenessClass::Kind::Unknown: return -1;
            }
            return -1;
        };
        const int ra = rank(*a.source());
        const int rb = rank(*b.source());
        if (ra >= 0 && rb >= 0 && ra != rb) return make_strict(ra < rb);
    }

    // No certificate: scan a finite prefix and report evidence only.
    EventualComparison c;
    c.verdict = Verdict::Unknown;
    const BigInt hard_cap = BigInt(1) << 22;
    const BigInt limit = horizon < hard_cap ? horizon : hard_cap;
    warm_sieve_for(a, limit);
    warm_sieve_for(b, limit);
    Cursor ca(a), cb(b);
    BigInt last_left_ahead = 0, last_right_ahead = 0, last_unequal = 0;
    for (BigInt n = 1; n <= limit; ++n) {
        const BigInt va = ca.next();
        const BigInt vb = cb.next();
        if (va > vb) last_left_ahead = n;
        if (va < vb) last_right_ahead = n;
        if (va != vb) last_unequal = n;
    }
    std::ostringstream ev;
    ev << "undecided; scanned n <= " << limit << ": ";
    if (last_unequal == 0) {
        ev << "sequences agree on the whole prefix";
    } else if (last_left_ahead == 0) {
        ev << "left <= right throughout, last strict gap at n = " << last_right_ahead;
    } else if (last_right_ahead == 0) {
        ev << "left >= right throughout, last strict gap at n = " << last_left_ahead;
    } else {
        ev << "both directions occur (left ahead at n = " << last_left_ahead
           << ", right ahead at n = " << last_right_ahead << ")";
    }
    c.evidence = ev.str();
    return c;
}

}  // namespace nsize
