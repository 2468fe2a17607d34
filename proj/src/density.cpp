#include "nsize/density.hpp"

namespace nsize {

DensityValue DensityValue::exact(Rational q) {
    if (q < 0 || q > 1) throw precondition_error("density must lie in [0, 1]");
    DensityValue d;
    d.kind = Kind::Exact;
    d.lower = q;
    d.upper = std::move(q);
    return d;
}

DensityValue DensityValue::bounds(Rational lower, Rational upper) {
    if (lower > upper) throw precondition_error("density bounds out of order");
    if (lower < 0 || upper > 1) throw precondition_error("density bounds outside [0, 1]");
    if (lower == upper) return exact(std::move(lower));
    DensityValue d;
    d.kind = Kind::Bounds;
    d.lower = std::move(lower);
    d.upper = std::move(upper);
    return d;
}

std::string to_string(const DensityValue& d) {
    switch (d.kind) {
        case DensityValue::Kind::Exact: return "exact " + to_string(d.lower);
        case DensityValue::Kind::Bounds:
            return "bounds " + to_string(d.lower) + " " + to_string(d.upper);
        case DensityValue::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

DensityValue natural_density(const SetExpr& expr) {
    const GrowthDescriptor d = growth_descriptor(expr);
    if (!d.lower_density || !d.upper_density) return DensityValue::unknown();
    if (*d.lower_density == *d.upper_density) return DensityValue::exact(*d.lower_density);
    return DensityValue::bounds(*d.lower_density, *d.upper_density);
}

DensityValue generalized_hull(const SetExpr& expr) {
    // Every generalised limit agrees with the natural density when the
    // latter exists; otherwise the admissible values span exactly the
    // lower/upper interval.
    return natural_density(expr);
}

std::vector<DensityProfileRow> density_profile(const SetExpr& expr,
                                               const std::vector<BigInt>& checkpoints) {
    if (checkpoints.empty())
        throw precondition_error("density_profile: checkpoints must be non-empty");
    const SizeSequence seq = partial_sums(expr);
    std::vector<DensityProfileRow> rows;
    rows.reserve(checkpoints.size());
    for (const auto& n : checkpoints) {
        if (n < 1) throw precondition_error("density_profile: checkpoints must be >= 1");
        BigInt f = seq.value_at(n);
        Rational ratio = make_rational(f, n);
        rows.push_back({n, std::move(f), std::move(ratio)});
    }
    return rows;
}

}  // namespace nsize
