#pragma once

#include "nsize/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nsize {

struct HistogramRow {
    unsigned k;         // subset size, 0..n
    BigInt count;       // C(n, k), exact
    Rational fraction;  // k/n
    Rational relative;  // C(n, k) / 2^n
};

// Distribution of subset sizes of an n-element set: one exact row per k.
// n must be even and >= 2; n > 10^5 is rejected as a resource error.
std::vector<HistogramRow> subset_histogram(unsigned n);

// Exact probability mass of rows with |k/n - 1/2| <= tolerance.
Rational histogram_mass_near_half(const std::vector<HistogramRow>& rows,
                                  const Rational& tolerance);

// Self-contained SVG rendering with log-scaled counts (presentation only;
// all data paths stay exact).
std::string histogram_svg(const std::vector<HistogramRow>& rows);

struct BoundaryRow {
    unsigned k;
    BigInt n;       // 2^(2^k)
    BigInt f;       // members of the super-exponential set up to n
    Rational ratio; // f/n
};

// Boundary table of the super-exponential block set at n = 2^(2^k) for
// k = 1..k_max, computed from the alternating block-sum closed form.
// k_max <= 7 (n = 2^128 is the largest supported boundary).
std::vector<BoundaryRow> superexp_boundary_table(unsigned k_max);

struct TrialStats {
    std::uint64_t sample_length = 0;  // N
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<Rational> deviations;  // |f_N/N - 1/2| per trial
    Rational max_deviation;
};

// Draws `trials` independent length-N streams of fair bits from SplitMix64
// (one deterministic substream per trial index) and records how far each
// empirical density lands from 1/2. Bit-identical for identical inputs.
// N * trials is capped at 10^9.
TrialStats random_subset_trial(std::uint64_t sample_length, std::uint64_t trials,
                               std::uint64_t seed);

}  // namespace nsize
