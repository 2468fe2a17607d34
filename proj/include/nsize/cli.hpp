#pragma once

#include "nsize/density.hpp"
#include "nsize/experiments.hpp"
#include "nsize/numerosity.hpp"
#include "nsize/size_scales.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace nsize::cli {

enum class OutputFormat { Text, Csv };

// Deterministic, byte-stable renderings used by the CLI subcommands.
std::string format_size_report(const SizeReport& report, OutputFormat format);
std::string format_density(const DensityValue& value, OutputFormat format);
std::string format_density_profile(const std::vector<DensityProfileRow>& rows,
                                   OutputFormat format);
std::string format_numerosity(const NumerosityAnswer& answer, OutputFormat format);
std::string format_supervaluation(const Supervaluation& sv, OutputFormat format);
std::string format_histogram(const std::vector<HistogramRow>& rows,
                             OutputFormat format);
std::string format_boundary_table(const std::vector<BoundaryRow>& rows,
                                  OutputFormat format);
std::string format_trials(const TrialStats& stats, OutputFormat format);

// Exit codes: 0 success, 2 expression parse error, 3 precondition or usage
// error, 4 resource cap exceeded. Diagnostics go to `err`, data to `out`.
// Honors the NSIZE_MAX_ENUM environment variable (enumeration cap override).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nsize::cli
