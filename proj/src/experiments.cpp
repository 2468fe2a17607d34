#include "nsize/experiments.hpp"

#include <bit>
#include <cmath>
#include <sstream>

namespace nsize {

std::vector<HistogramRow> subset_histogram(unsigned n) {
    if (n < 2 || n % 2 != 0)
        throw precondition_error("subset_histogram: n must be even and >= 2");
    if (n > 100'000)
        throw resource_error("subset_histogram: n above 10^5");
    const BigInt total = pow2(n);
    std::vector<HistogramRow> rows;
    rows.reserve(n + 1);
    BigInt count = 1;  // C(n, 0)
    for (unsigned k = 0; k <= n; ++k) {
        rows.push_back({k, count, Rational(k, n), make_rational(count, total)});
        if (k < n) {
            count *= n - k;
            count /= k + 1;
        }
    }
    return rows;
}

Rational histogram_mass_near_half(const std::vector<HistogramRow>& rows,
                                  const Rational& tolerance) {
    Rational mass = 0;
    const Rational half(1, 2);
    for (const auto& row : rows) {
        const Rational distance = row.fraction >= half ? Rational(row.fraction - half)
                                                       : Rational(half - row.fraction);
        if (distance <= tolerance) mass += row.relative;
    }
    return mass;
}

std::string histogram_svg(const std::vector<HistogramRow>& rows) {
    const double width = 640.0, height = 400.0, margin = 40.0;
    const double plot_w = width - 2 * margin, plot_h = height - 2 * margin;
    double max_log = 0.0;
    std::vector<double> logs;
    logs.reserve(rows.size());
    for (const auto& row : rows) {
        // integer log2 of the exact count; counts are always >= 1
        const double l = static_cast<double>(bit_length(row.count));
        logs.push_back(l);
        max_log = std::max(max_log, l);
    }
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height
        << "\">\n";
    svg << "  <rect width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    const double bar_w = plot_w / static_cast<double>(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double h = max_log > 0 ? logs[i] / max_log * plot_h : 0.0;
        const double x = margin + static_cast<double>(i) * bar_w;
        const double y = height - margin - h;
        svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << bar_w * 0.9
            << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
    }
    svg << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    svg << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
        << "\" text-anchor=\"middle\" font-size=\"12\">subset size fraction k/n"
           "</text>\n";
    svg << "  <text x=\"12\" y=\"" << height / 2
        << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 12 "
        << height / 2 << ")\">log2 count</text>\n";
    svg << "</svg>\n";
    return svg.str();
}

std::vector<BoundaryRow> superexp_boundary_table(unsigned k_max) {
    if (k_max < 1) throw precondition_error("superexp_boundary_table: k_max must be >= 1");
    if (k_max > 7)
        throw precondition_error("superexp_boundary_table: k_max above 7 (n > 2^128)");
    std::vector<BoundaryRow> rows;
    rows.reserve(k_max);
    // f at the boundary 2^(2^k) is the alternating sum of the tower values
    // 2^(2^l): up to l = k when k is odd, l = k-1 when k is even.
    for (unsigned k = 1; k <= k_max; ++k) {
        const BigInt n = pow2_tower(k);
        const unsigned top = (k % 2 == 1) ? k : k - 1;
        BigInt f = 0;
        for (unsigned l = 0; l <= top; ++l) {
            const BigInt term = pow2_tower(l);
            if (l % 2 == 1)
                f += term;
            else
                f -= term;
        }
        rows.push_back({k, n, f, make_rational(f, n)});
    }
    return rows;
}

namespace {

// SplitMix64: the documented generator behind the reproducible trials.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

TrialStats random_subset_trial(std::uint64_t sample_length, std::uint64_t trials,
                               std::uint64_t seed) {
    if (sample_length < 1)
        throw precondition_error("random_subset_trial: N must be >= 1");
    if (trials < 1) throw precondition_error("random_subset_trial: trials must be >= 1");
    if (sample_length > 1'000'000'000ULL / trials)
        throw resource_error("random_subset_trial: N * trials above 10^9");

    TrialStats stats;
    stats.sample_length = sample_length;
    stats.trials = trials;
    stats.seed = seed;
    stats.deviations.reserve(trials);
    stats.max_deviation = 0;

    SplitMix64 master{seed};
    const Rational half(1, 2);
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 stream{master.next()};
        std::uint64_t ones = 0;
        std::uint64_t remaining = sample_length;
        while (remaining >= 64) {
            ones += static_cast<std::uint64_t>(std::popcount(stream.next()));
            remaining -= 64;
        }
        if (remaining > 0) {
            const std::uint64_t word = stream.next();
            const std::uint64_t mask = (~0ULL) >> (64 - remaining);
            ones += static_cast<std::uint64_t>(std::popcount(word & mask));
        }
        const Rational density(ones, sample_length);
        const Rational deviation =
            density >= half ? Rational(density - half) : Rational(half - density);
        if (deviation > stats.max_deviation) stats.max_deviation = deviation;
        stats.deviations.push_back(deviation);
    }
    return stats;
}

}  // namespace nsize
