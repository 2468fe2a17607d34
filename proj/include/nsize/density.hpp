#pragma once

#include "nsize/numeric.hpp"
#include "nsize/sequence.hpp"
#include "nsize/set_expr.hpp"

#include <string>
#include <vector>

namespace nsize {

// Natural density of a set, when the rule table decides it. Bounds carry the
// exact lower and upper density; equal bounds collapse to Exact.
struct DensityValue {
    enum class Kind { Exact, Bounds, Unknown };
    Kind kind = Kind::Unknown;
    Rational lower;  // Exact value, or lower density
    Rational upper;

    static DensityValue exact(Rational q);
    static DensityValue bounds(Rational lower, Rational upper);
    static DensityValue unknown() { return {}; }

    bool operator==(const DensityValue&) const = default;
};

std::string to_string(const DensityValue& d);

// lim f_n(S)/n where the symbolic rules decide it: Exact for finite (0),
// co-finite (1), arithmetic progressions (1/a), powers and primes (0), and
// eventually periodic combinations; Bounds(liminf, limsup) for block sets;
// Unknown otherwise.
DensityValue natural_density(const SetExpr& expr);

// Hull of all generalised (free-ultrafilter) densities: equals the natural
// density when that exists, and the full lower/upper interval otherwise. No
// ultrafilter is ever constructed.
DensityValue generalized_hull(const SetExpr& expr);

struct DensityProfileRow {
    BigInt n;
    BigInt f;
    Rational ratio;  // f/n, reduced
};

// Exact f_n and f_n/n at each checkpoint. Throws resource_error when a
// checkpoint has no closed form and exceeds the enumeration cap.
std::vector<DensityProfileRow> density_profile(const SetExpr& expr,
                                               const std::vector<BigInt>& checkpoints);

}  // namespace nsize
