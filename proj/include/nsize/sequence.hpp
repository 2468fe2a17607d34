#pragma once

#include "nsize/numeric.hpp"
#include "nsize/set_expr.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nsize {

// Certificate of eventual affine periodicity:
//   s_{n+period} = s_n + gain   for all n > preperiod.
// For a set-derived sequence this is equivalent to the characteristic
// sequence being periodic past the preperiod.
struct PeriodicDescriptor {
    BigInt preperiod;
    BigInt period;  // >= 1
    BigInt gain;    // members gained per period, 0 <= gain <= period
};

struct GrowthDescriptor {
    std::optional<Rational> lower_density;  // liminf of s_n / n
    std::optional<Rational> upper_density;  // limsup of s_n / n
    std::optional<PeriodicDescriptor> periodic;

    bool has_exact_density() const {
        return lower_density && upper_density && *lower_density == *upper_density;
    }
};

// Non-decreasing integer sequence with exact evaluation. Set-derived
// sequences f_n(S) take unit steps; sums of such sequences may step faster.
// Immutable; copies share state.
class SizeSequence {
  public:
    struct FloorLinear {
        BigInt modulus, residue;
    };
    struct RootFloor {
        unsigned exponent;
    };
    struct PrimeCount {};
    struct BlockSum {
        BlockSchedule schedule;
    };
    struct ExplicitFinite {
        std::vector<BigInt> elements;
    };
    struct ExplicitCoFinite {
        std::vector<BigInt> excluded;
    };
    // Exact table for an eventually periodic characteristic sequence.
    struct PeriodicTable {
        std::uint64_t preperiod = 0;
        std::uint64_t period = 1;
        BigInt gain;
        std::vector<BigInt> prefix_counts;  // f(1) .. f(preperiod)
        std::vector<BigInt> window_counts;  // members in (preperiod, preperiod+t], t = 0..period
    };
    struct SumParts {
        std::shared_ptr<const std::vector<SizeSequence>> parts;
    };
    struct NoClosedForm {};

    using ClosedForm = std::variant<FloorLinear, RootFloor, PrimeCount, BlockSum,
                                    ExplicitFinite, ExplicitCoFinite, PeriodicTable,
                                    SumParts, NoClosedForm>;

    // f_n. Uses the closed form when available (boundary values such as
    // n = 2^(2^6) never require enumeration); otherwise scans up to the
    // enumeration cap and throws resource_error beyond it.
    BigInt value_at(const BigInt& n) const;

    const GrowthDescriptor& descriptor() const;
    const std::optional<SetExpr>& source() const;
    const ClosedForm& closed_form() const;
    bool has_closed_form() const;

    // Another representative of the same eventual-equality class: the first
    // `values.size()` entries are replaced verbatim. Descriptors are
    // adjusted so decisions never rely on the overridden prefix.
    SizeSequence with_prefix_override(std::vector<BigInt> values) const;
    std::size_t prefix_override_length() const;

    // Componentwise sum (the semiring addition on sequences).
    static SizeSequence sum(const SizeSequence& a, const SizeSequence& b);

    friend SizeSequence partial_sums(const SetExpr& expr);
    friend bool shares_state(const SizeSequence& a, const SizeSequence& b);

  private:
    struct Impl;
    explicit SizeSequence(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

// f(S): the partial-sum sequence of the characteristic sequence, with the
// best available closed form and growth descriptor attached.
SizeSequence partial_sums(const SetExpr& expr);

// Exact liminf/limsup densities and periodicity certificate for the covered
// symbolic classes; unknown fields otherwise.
GrowthDescriptor growth_descriptor(const SetExpr& expr);

enum class TriBool { False, True, Unknown };

struct WitnessFamily {
    std::string description;
    std::vector<BigInt> samples;  // verified indices
};

struct EventualComparison {
    enum class Verdict {
        Equal,
        StrictLess,
        StrictGreater,
        WeakLess,
        WeakGreater,
        Incomparable,
        Unknown,
    };

    Verdict verdict = Verdict::Unknown;
    TriBool leq_eventually = TriBool::Unknown;
    TriBool geq_eventually = TriBool::Unknown;
    TriBool eq_eventually = TriBool::Unknown;

    // For Incomparable: verified index families where each side is strictly
    // ahead.
    std::optional<WitnessFamily> left_ahead;
    std::optional<WitnessFamily> right_ahead;

    // When a periodic decision fixed the eventual values of (right - left):
    // their (min, max) over one eventual period.
    std::optional<std::pair<BigInt, BigInt>> eventual_diff_range;

    std::string evidence;  // human-readable note, set on Unknown and scans
};

std::string to_string(EventualComparison::Verdict v);

BigInt default_compare_horizon();  // 2^20

// Decides eventual (Frechet-filter) comparison where a certificate exists:
// periodic pairs exactly, distinct exact densities, and liminf/limsup
// straddles (Incomparable with verified witnesses). Otherwise scans to the
// horizon and reports Unknown with evidence; a finite prefix never decides
// an eventual fact.
EventualComparison compare_eventually(const SizeSequence& a, const SizeSequence& b,
                                      const BigInt& horizon = default_compare_horizon());

// Exact count of primes <= n (shared sieve; respects the enumeration cap).
BigInt prime_count(const BigInt& n);

}  // namespace nsize
