#include "nsize/cli.hpp"

#include "nsize/dsl.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace nsize::cli {

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string alpha_or_unknown(const NumerosityAnswer& answer) {
    switch (answer.kind) {
        case NumerosityAnswer::Kind::Exact: return answer.exact.to_string();
        case NumerosityAnswer::Kind::Range:
        case NumerosityAnswer::Kind::Unknown: return to_string(answer);
    }
    return "unknown";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string density_csv_fields(const DensityValue& value) {
    switch (value.kind) {
        case DensityValue::Kind::Exact:
            return "exact," + to_string(boost::multiprecision::numerator(value.lower)) +
                   "," + to_string(boost::multiprecision::denominator(value.lower));
        case DensityValue::Kind::Bounds:
            return "bounds," + to_string(boost::multiprecision::numerator(value.lower)) +
                   "," + to_string(boost::multiprecision::denominator(value.lower)) +
                   "," + to_string(boost::multiprecision::numerator(value.upper)) +
                   "," + to_string(boost::multiprecision::denominator(value.upper));
        case DensityValue::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

std::string format_size_report(const SizeReport& report, OutputFormat format) {
    const std::string cardinality =
        report.cardinality ? to_string(*report.cardinality) : "unknown";
    const std::string lottery = report.lottery ? to_string(*report.lottery) : "unknown";
    const std::string cnum_notes = join(report.cnum_notes, "; ");
    std::ostringstream os;
    if (format == OutputFormat::Text) {
        os << "expr: " << report.rendering << "\n";
        os << "cardinality: " << cardinality << "\n";
        os << "lottery: " << lottery << "\n";
        os << "density: " << to_string(report.density) << "\n";
        os << "hull: " << to_string(report.hull) << "\n";
        os << "alpha_canonical: " << alpha_or_unknown(report.alpha_canonical) << "\n";
        os << "alpha_free: " << alpha_or_unknown(report.alpha_free) << "\n";
        os << "cnum: " << (cnum_notes.empty() ? "no decided comparisons" : cnum_notes)
           << "\n";
    } else {
        os << "expr,cardinality,lottery,density,hull,alpha_canonical,alpha_free,"
              "cnum_notes\n";
        os << csv_quote(report.rendering) << "," << csv_quote(cardinality) << ","
           << csv_quote(lottery) << "," << csv_quote(to_string(report.density)) << ","
           << csv_quote(to_string(report.hull)) << ","
           << csv_quote(alpha_or_unknown(report.alpha_canonical)) << ","
           << csv_quote(alpha_or_unknown(report.alpha_free)) << ","
           << csv_quote(cnum_notes) << "\n";
    }
    return os.str();
}

std::string format_density(const DensityValue& value, OutputFormat format) {
    if (format == OutputFormat::Text) return to_string(value) + "\n";
    return density_csv_fields(value) + "\n";
}

std::string format_density_profile(const std::vector<DensityProfileRow>& rows,
                                   OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "n,f_n,density_num,density_den,density_decimal\n";
        for (const auto& row : rows) {
            os << row.n << "," << row.f << ","
               << boost::multiprecision::numerator(row.ratio) << ","
               << boost::multiprecision::denominator(row.ratio) << ","
               << decimal_string(row.ratio) << "\n";
        }
    } else {
        os << "n f_n f_n/n decimal\n";
        for (const auto& row : rows) {
            os << row.n << " " << row.f << " " << to_string(row.ratio) << " "
               << decimal_string(row.ratio) << "\n";
        }
    }
    return os.str();
}

std::string format_numerosity(const NumerosityAnswer& answer, OutputFormat format) {
    if (format == OutputFormat::Text) return to_string(answer) + "\n";
    switch (answer.kind) {
        case NumerosityAnswer::Kind::Exact:
            return "exact," + csv_quote(answer.exact.to_string()) + "\n";
        case NumerosityAnswer::Kind::Range:
            return "range," + csv_quote(answer.lower.lo.to_string()) + "," +
                   csv_quote(answer.lower.hi.to_string()) + "," +
                   csv_quote(answer.upper.lo.to_string()) + "," +
                   csv_quote(answer.upper.hi.to_string()) + "\n";
        case NumerosityAnswer::Kind::Unknown: return "unknown\n";
    }
    return "unknown\n";
}

std::string format_supervaluation(const Supervaluation& sv, OutputFormat format) {
    if (sv.has_super) {
        if (format == OutputFormat::Text) return "super " + sv.super.to_string() + "\n";
        return "super," + csv_quote(sv.super.to_string()) + "\n";
    }
    if (format == OutputFormat::Text) return "nosuper " + to_string(sv.subs) + "\n";
    return "nosuper," + csv_quote(to_string(sv.subs)) + "\n";
}

std::string format_histogram(const std::vector<HistogramRow>& rows,
                             OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "k,count,fraction_num,fraction_den,relative_decimal\n";
        for (const auto& row : rows) {
            os << row.k << "," << row.count << ","
               << boost::multiprecision::numerator(row.fraction) << ","
               << boost::multiprecision::denominator(row.fraction) << ","
               << decimal_string(row.relative) << "\n";
        }
    } else {
        os << "k count relative\n";
        for (const auto& row : rows) {
            os << row.k << " " << row.count << " " << decimal_string(row.relative)
               << "\n";
        }
    }
    return os.str();
}

std::string format_boundary_table(const std::vector<BoundaryRow>& rows,
                                  OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "k,n,f,ratio_num,ratio_den,ratio_decimal\n";
        for (const auto& row : rows) {
            os << row.k << "," << row.n << "," << row.f << ","
               << boost::multiprecision::numerator(row.ratio) << ","
               << boost::multiprecision::denominator(row.ratio) << ","
               << decimal_string(row.ratio) << "\n";
        }
    } else {
        os << "k n f f/n decimal\n";
        for (const auto& row : rows) {
            os << row.k << " " << row.n << " " << row.f << " " << to_string(row.ratio)
               << " " << decimal_string(row.ratio) << "\n";
        }
    }
    return os.str();
}

std::string format_trials(const TrialStats& stats, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Csv) {
        os << "trial,deviation_decimal\n";
        for (std::size_t t = 0; t < stats.deviations.size(); ++t)
            os << t << "," << decimal_string(stats.deviations[t]) << "\n";
    } else {
        os << "generator splitmix64 seed " << stats.seed << " N "
           << stats.sample_length << " trials " << stats.trials << "\n";
        for (std::size_t t = 0; t < stats.deviations.size(); ++t)
            os << "trial " << t << " deviation " << decimal_string(stats.deviations[t])
               << "\n";
        os << "max_deviation " << decimal_string(stats.max_deviation) << "\n";
    }
    return os.str();
}

namespace {

struct ParseFailureWithText {
    std::string text;
    ParseError error;
};

SetExpr parse_or_throw(const std::string& text) {
    ParseResult result = parse(text);
    if (auto* error = std::get_if<ParseError>(&result)) {
        throw ParseFailureWithText{text, *error};
    }
    return std::get<SetExpr>(result);
}

std::vector<BigInt> parse_int_list(const std::string& text, const char* what) {
    std::vector<BigInt> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw precondition_error(std::string(what) + ": expected comma-separated integers");
        values.push_back(BigInt(item));
    }
    if (values.empty())
        throw precondition_error(std::string(what) + ": expected at least one integer");
    return values;
}

std::string compare_measure(const SetExpr& a, const SetExpr& b,
                            const std::string& measure, const BigInt& horizon,
                            OutputFormat format);

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (const char* cap = std::getenv("NSIZE_MAX_ENUM")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(cap, &end, 10);
        if (end == cap || *end != '\0' || value == 0) {
            err << "invalid NSIZE_MAX_ENUM value: " << cap << "\n";
            return 3;
        }
        set_enumeration_cap(value);
    }

    CLI::App app{"exact set-size calculator for symbolic subsets of N"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string expr_text, expr_text_b;
    std::string checkpoints_text, at_text, measure = "cnum", mode, svg_path;
    std::uint64_t hist_n = 0, kmax = 0, sample_n = 0, trials = 0, seed = 0;
    std::uint64_t horizon_opt = 0;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"text", "csv"}));
    };

    CLI::App* classify = app.add_subcommand("classify", "full multi-measure report");
    classify->add_option("expr", expr_text)->required();
    add_format(classify);

    CLI::App* density = app.add_subcommand("density", "natural density");
    density->add_option("expr", expr_text)->required();
    density->add_option("--profile-checkpoints", checkpoints_text,
                        "comma-separated n values for an exact f_n/n table");
    add_format(density);

    CLI::App* numerosity = app.add_subcommand("numerosity", "numerosity measures");
    numerosity->add_option("expr", expr_text)->required();
    numerosity->add_option("--mode", mode, "canonical|free|cnum|super")
        ->required()
        ->check(CLI::IsMember({"canonical", "free", "cnum", "super"}));
    add_format(numerosity);

    CLI::App* compare = app.add_subcommand("compare", "compare two sets");
    compare->add_option("exprA", expr_text)->required();
    compare->add_option("exprB", expr_text_b)->required();
    compare->add_option("--measure", measure, "cnum|density|alpha|lottery")
        ->check(CLI::IsMember({"cnum", "density", "alpha", "lottery"}));
    compare->add_option("--horizon", horizon_opt, "scan horizon for cnum");
    add_format(compare);

    CLI::App* table = app.add_subcommand("table", "chi, f, f/n at given indices");
    table->add_option("expr", expr_text)->required();
    table->add_option("--at", at_text, "comma-separated n values")->required();
    add_format(table);

    CLI::App* hist = app.add_subcommand("hist", "binomial subset-size histogram");
    hist->add_option("--n", hist_n, "even set size")->required();
    hist->add_option("--svg", svg_path, "write an SVG rendering to this path");
    add_format(hist);

    CLI::App* stable = app.add_subcommand("s-table", "super-exponential boundary table");
    stable->add_option("--kmax", kmax, "largest k (n = 2^(2^k)), at most 7")->required();
    add_format(stable);

    CLI::App* sample = app.add_subcommand("sample-random", "seeded random-subset trials");
    sample->add_option("--n", sample_n, "bits per trial")->required();
    sample->add_option("--trials", trials)->required();
    sample->add_option("--seed", seed)->required();
    add_format(sample);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 3;
    }

    const OutputFormat format =
        format_name == "csv" ? OutputFormat::Csv : OutputFormat::Text;

    try {
        if (classify->parsed()) {
            out << format_size_report(size_report(parse_or_throw(expr_text)), format);
        } else if (density->parsed()) {
            const SetExpr expr = parse_or_throw(expr_text);
            if (checkpoints_text.empty()) {
                out << format_density(natural_density(expr), format);
            } else {
                const auto checkpoints =
                    parse_int_list(checkpoints_text, "--profile-checkpoints");
                out << format_density_profile(density_profile(expr, checkpoints), format);
            }
        } else if (numerosity->parsed()) {
            const SetExpr expr = parse_or_throw(expr_text);
            if (mode == "canonical") {
                out << format_numerosity(alpha_numerosity(expr, Profile::Canonical),
                                         format);
            } else if (mode == "free") {
                out << format_numerosity(alpha_numerosity(expr, Profile::Free), format);
            } else if (mode == "super") {
                out << format_supervaluation(supervaluation(expr), format);
            } else {  // cnum
                const SizeSequence seq = cnum(expr).representative();
                if (format == OutputFormat::Csv) {
                    out << "n,f\n";
                    for (BigInt n = 1; n <= 12; ++n)
                        out << n << "," << seq.value_at(n) << "\n";
                } else {
                    out << "cnum f[1..12] =";
                    for (BigInt n = 1; n <= 12; ++n) out << " " << seq.value_at(n);
                    out << "\n";
                    const auto& desc = seq.descriptor();
                    if (desc.periodic) {
                        out << "eventually periodic: preperiod "
                            << desc.periodic->preperiod << " period "
                            << desc.periodic->period << " gain " << desc.periodic->gain
                            << "\n";
                    }
                }
            }
        } else if (compare->parsed()) {
            const SetExpr a = parse_or_throw(expr_text);
            const SetExpr b = parse_or_throw(expr_text_b);
            const BigInt horizon =
                horizon_opt > 0 ? BigInt(horizon_opt) : default_compare_horizon();
            out << compare_measure(a, b, measure, horizon, format);
        } else if (table->parsed()) {
            const SetExpr expr = parse_or_throw(expr_text);
            const auto at = parse_int_list(at_text, "--at");
            const SizeSequence seq = partial_sums(expr);
            std::ostringstream os;
            if (format == OutputFormat::Csv)
                os << "n,chi,f,ratio_num,ratio_den,ratio_decimal\n";
            else
                os << "n chi f f/n decimal\n";
            for (const auto& n : at) {
                if (n < 1) throw precondition_error("--at: indices must be >= 1");
                const int chi = membership(expr, n) ? 1 : 0;
                const BigInt f = seq.value_at(n);
                const Rational ratio = make_rational(f, n);
                if (format == OutputFormat::Csv) {
                    os << n << "," << chi << "," << f << ","
                       << boost::multiprecision::numerator(ratio) << ","
                       << boost::multiprecision::denominator(ratio) << ","
                       << decimal_string(ratio) << "\n";
                } else {
                    os << n << " " << chi << " " << f << " " << to_string(ratio) << " "
                       << decimal_string(ratio) << "\n";
                }
            }
            out << os.str();
        } else if (hist->parsed()) {
            if (hist_n > 100'000) throw resource_error("hist: n above 10^5");
            const auto rows = subset_histogram(static_cast<unsigned>(hist_n));
            if (!svg_path.empty()) {
                std::ofstream svg_file(svg_path, std::ios::binary);
                if (!svg_file)
                    throw precondition_error("hist: cannot open SVG output path");
                svg_file << histogram_svg(rows);
            }
            out << format_histogram(rows, format);
        } else if (stable->parsed()) {
            out << format_boundary_table(
                superexp_boundary_table(static_cast<unsigned>(kmax)), format);
        } else if (sample->parsed()) {
            out << format_trials(random_subset_trial(sample_n, trials, seed), format);
        }
        return 0;
    } catch (const ParseFailureWithText& failure) {
        err << format_parse_error(failure.text, failure.error) << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return 3;
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 4;
    }
}

namespace {

std::string order_name(int sign) {
    if (sign < 0) return "Less";
    if (sign > 0) return "Greater";
    return "Equal";
}

std::string compare_measure(const SetExpr& a, const SetExpr& b,
                            const std::string& measure, const BigInt& horizon,
                            OutputFormat format) {
    std::ostringstream os;
    const char* sep = format == OutputFormat::Csv ? "," : " ";
    const auto quoted = [&](const std::string& field) {
        return format == OutputFormat::Csv ? csv_quote(field) : field;
    };
    if (measure == "cnum") {
        const EventualComparison cmp = cnum_compare(cnum(a), cnum(b), horizon);
        os << "verdict" << sep << to_string(cmp.verdict) << "\n";
        using V = EventualComparison::Verdict;
        if (cmp.eventual_diff_range &&
            (cmp.verdict == V::WeakLess || cmp.verdict == V::StrictLess ||
             cmp.verdict == V::WeakGreater || cmp.verdict == V::StrictGreater)) {
            const auto& [lo, hi] = *cmp.eventual_diff_range;
            if (hi > 0 && lo >= 0)
                os << "note" << sep
                   << quoted("cnum(left) <= cnum(right) <= cnum(left) + " +
                                to_string(hi))
                   << "\n";
            else if (lo < 0 && hi <= 0)
                os << "note" << sep
                   << quoted("cnum(right) <= cnum(left) <= cnum(right) + " +
                                to_string(BigInt(-lo)))
                   << "\n";
        }
        if (certified_partition_of_full(a, b))
            os << "note" << sep << quoted("cnum(left) + cnum(right) = a") << "\n";
        const auto emit_family = [&](const char* label,
                                     const std::optional<WitnessFamily>& family) {
            if (!family || family->samples.empty()) return;
            os << label << sep << quoted(family->description);
            for (const auto& n : family->samples) os << sep << n;
            os << "\n";
        };
        emit_family("witness_left_ahead", cmp.left_ahead);
        emit_family("witness_right_ahead", cmp.right_ahead);
        if (!cmp.evidence.empty())
            os << "evidence" << sep << quoted(cmp.evidence) << "\n";
        return os.str();
    }
    if (measure == "density") {
        const DensityValue da = natural_density(a);
        const DensityValue db = natural_density(b);
        if (da.kind == DensityValue::Kind::Unknown ||
            db.kind == DensityValue::Kind::Unknown) {
            os << "verdict" << sep << "Unknown\n";
        } else if (da.kind == DensityValue::Kind::Exact &&
                   db.kind == DensityValue::Kind::Exact) {
            const int sign = da.lower < db.lower ? -1 : (da.lower > db.lower ? 1 : 0);
            os << "verdict" << sep << order_name(sign) << "\n";
        } else if (da.upper < db.lower) {
            os << "verdict" << sep << "Less\n";
        } else if (da.lower > db.upper) {
            os << "verdict" << sep << "Greater\n";
        } else {
            os << "verdict" << sep << "Unknown\n";
            os << "note" << sep
               << quoted("density hulls overlap: " + to_string(da) + " vs " +
                            to_string(db))
               << "\n";
        }
        return os.str();
    }
    if (measure == "alpha") {
        const NumerosityAnswer na = alpha_numerosity(a, Profile::Canonical);
        const NumerosityAnswer nb = alpha_numerosity(b, Profile::Canonical);
        if (na.kind == NumerosityAnswer::Kind::Unknown ||
            nb.kind == NumerosityAnswer::Kind::Unknown) {
            os << "verdict" << sep << "Unknown\n";
            return os.str();
        }
        const AlphaExpr a_lo = na.kind == NumerosityAnswer::Kind::Exact ? na.exact
                                                                        : na.lower.lo;
        const AlphaExpr a_hi = na.kind == NumerosityAnswer::Kind::Exact ? na.exact
                                                                        : na.upper.hi;
        const AlphaExpr b_lo = nb.kind == NumerosityAnswer::Kind::Exact ? nb.exact
                                                                        : nb.lower.lo;
        const AlphaExpr b_hi = nb.kind == NumerosityAnswer::Kind::Exact ? nb.exact
                                                                        : nb.upper.hi;
        if (na.kind == NumerosityAnswer::Kind::Exact &&
            nb.kind == NumerosityAnswer::Kind::Exact) {
            os << "verdict" << sep << to_string(alpha_compare(na.exact, nb.exact))
               << "\n";
        } else if (a_hi < b_lo) {
            os << "verdict" << sep << "Less\n";
        } else if (a_lo > b_hi) {
            os << "verdict" << sep << "Greater\n";
        } else {
            os << "verdict" << sep << "Unknown\n";
            os << "note" << sep
               << quoted("admissible ranges overlap: " + to_string(na) + " vs " +
                            to_string(nb))
               << "\n";
        }
        return os.str();
    }
    // lottery
    const LotteryValue la = lottery_value(a);
    const LotteryValue lb = lottery_value(b);
    os << "verdict" << sep << to_string(lottery_compare(la, lb)) << "\n";
    os << "note" << sep
       << quoted(to_string(la) + " vs " + to_string(lb)) << "\n";
    return os.str();
}

}  // namespace

}  // namespace nsize::cli
