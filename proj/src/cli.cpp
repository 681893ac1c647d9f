#include "seacalc/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "seacalc/b_expansion.hpp"
#include "seacalc/combinatorics.hpp"
#include "seacalc/config.hpp"
#include "seacalc/golden.hpp"
#include "seacalc/render.hpp"
#include "seacalc/series.hpp"
#include "seacalc/verifier.hpp"

namespace seacalc {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OutputFormat resolve_format(const std::string& name, OutputFormat fallback) {
    if (name.empty()) return fallback;
    const auto f = parse_format(name);
    if (!f) throw UsageError("unknown format '" + name + "' (expected text, json or latex)");
    return *f;
}

Mutation resolve_mutation(const std::string& name) {
    if (name.empty()) return Mutation::None;
    for (Mutation m : all_mutations()) {
        if (mutation_name(m) == name) return m;
    }
    throw UsageError("unknown mutation '" + name + "'");
}

struct ExpandArgs {
    std::string series;
    std::optional<int> order;
    std::string layer = "pk";
    std::string format;
    std::string wrapper = "plain";
};

int cmd_expand(const ExpandArgs& a, const CliConfig& config, std::ostream& out) {
    const auto id = parse_series_id(a.series);
    if (!id) throw UsageError("unknown series '" + a.series + "'");
    const OutputFormat format = resolve_format(a.format, config.format);
    const SeriesBuilder builder;
    const std::string name(series_name(*id));
    if (a.layer == "pk") {
        const int order = a.order.value_or(config.default_order_pk);
        const PkPoly poly = a.wrapper == "checked" ? builder.build(*id, order) : builder.canonical(*id, order);
        out << render_poly(poly, name, format) << '\n';
    } else {
        if (a.wrapper == "checked") throw UsageError("--wrapper checked applies to the pk layer only");
        const int order = a.order.value_or(config.default_order_b);
        out << render_poly(expand_named(builder, *id, order), name, format) << '\n';
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite;
    std::optional<int> order;
    std::optional<int> order_b;
    std::optional<int> counting_r;
    std::optional<int> coeff_max;
    std::string golden;
    std::string format;
    std::string mutation;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& a, const CliConfig& config, std::ostream& out) {
    const auto& names = suite_names();
    if (a.suite != "all" && std::find(names.begin(), names.end(), a.suite) == names.end()) {
        throw UsageError("unknown suite '" + a.suite + "'");
    }
    VerifyOptions options;
    options.order_pk = a.order.value_or(config.default_order_pk);
    options.order_b = a.order_b.value_or(std::max(config.default_order_b, 5));
    if (a.order) options.order_b = std::min(options.order_b, *a.order);
    options.golden_order = config.default_order_b;
    if (a.counting_r) options.counting_r = *a.counting_r;
    if (a.coeff_max) options.coeff_rmax = *a.coeff_max;
    options.golden_path = a.golden.empty() ? config.golden_path : std::filesystem::path(a.golden);
    options.mutation = resolve_mutation(a.mutation);

    std::vector<VerifyReport> reports;
    try {
        reports = run_suite(a.suite, options);
    } catch (const GoldenParseError& e) {
        VerifyReport r;
        r.suite_name = "golden";
        r.order = options.golden_order;
        Witness w;
        w.label = "golden table " + e.source();
        w.failures.push_back(e.what());
        r.witnesses.push_back(std::move(w));
        r.finalize();
        reports.push_back(std::move(r));
    }
    out << render_reports(reports, resolve_format(a.format, config.format), a.timing);
    for (const auto& r : reports) {
        if (!r.passed) return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_coeff(int max, const std::string& format_name_arg, const CliConfig& config, std::ostream& out) {
    const OutputFormat format = resolve_format(format_name_arg, config.format);
    const CoefficientTable table;
    if (format == OutputFormat::Json) {
        nlohmann::json doc;
        auto rat = [](const Rational& q) { return nlohmann::json{{"num", q.numerator().str()}, {"den", q.denominator().str()}}; };
        for (int n = 0; n <= max; ++n) {
            doc["c"].push_back({{"n", n}, {"value", n == 0 ? rat(Rational(1)) : rat(table.c(n))}});
            doc["e"].push_back({{"n", n}, {"value", rat(table.e(n))}});
        }
        for (int r = 0; r <= max; ++r) {
            for (int l = 0; l <= r; ++l) doc["f"].push_back({{"l", l}, {"r", r}, {"value", rat(table.f(l, r))}});
            for (int rho = 0; rho <= r; ++rho) {
                doc["c_r_rho"].push_back({{"r", r}, {"rho", rho}, {"pi_exponent", 2 * r}, {"value", rat(gamma_ratio_half(r, rho))}});
            }
        }
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    out << "# n\tc_n\te_n\n";
    for (int n = 0; n <= max; ++n) {
        out << n << '\t' << (n == 0 ? Rational(1) : table.c(n)) << '\t' << table.e(n) << '\n';
    }
    out << "\n# l\tr\tf_{l,r}\n";
    for (int r = 0; r <= max; ++r) {
        for (int l = 0; l <= r; ++l) out << l << '\t' << r << '\t' << table.f(l, r) << '\n';
    }
    out << "\n# r\trho\tc(r,rho)\n";
    for (int r = 0; r <= max; ++r) {
        for (int rho = 0; rho <= r; ++rho) out << r << '\t' << rho << '\t' << table.c_r_rho(r, rho).str() << '\n';
    }
    return kExitOk;
}

int cmd_golden_check(const std::string& path, int order, const std::string& format_arg, const CliConfig& config,
                     std::ostream& out) {
    const auto tables = load_golden(path, order);
    const SeriesBuilder builder;
    const VerifyReport report = check_golden(builder, tables);
    out << render_reports({report}, resolve_format(format_arg, config.format));
    return report.passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CliConfig config;
    try {
        config = load_config_from_env();
    } catch (const ConfigError& e) {
        err << "seacalc: " << e.what() << '\n';
        return kExitUsage;
    }

    CLI::App app{"Exact expansions of the fixed-mass operator series", "seacalc"};
    app.require_subcommand(1);

    ExpandArgs ea;
    auto* expand = app.add_subcommand("expand", "Print the expansion of a series");
    expand->add_option("series", ea.series, "Series id (A, X, U, Ktilde, Ptilde, PtildeY, Y, Ttilde, P, "
                                            "KtildeRes_flow, KtildeRes_closed, KtildeRes, PtildeRes, Phe)")
        ->required();
    expand->add_option("--order,-n", ea.order, "Truncation order")->check(CLI::NonNegativeNumber);
    expand->add_option("--layer", ea.layer, "pk or b")->check(CLI::IsMember({"pk", "b"}));
    expand->add_option("--format", ea.format, "text, json or latex");
    expand->add_option("--wrapper", ea.wrapper, "plain or checked (pk layer)")
        ->check(CLI::IsMember({"plain", "checked"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", va.suite, "Suite name or 'all'")->required();
    verify->add_option("--order,-n", va.order, "pk-layer order")->check(CLI::NonNegativeNumber);
    verify->add_option("--order-b", va.order_b, "B-layer order for route checks")->check(CLI::NonNegativeNumber);
    verify->add_option("--counting-r", va.counting_r, "Largest r in the counting check")->check(CLI::NonNegativeNumber);
    verify->add_option("--coeff-max", va.coeff_max, "Largest r in the coefficient identities")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--golden", va.golden, "Golden table file");
    verify->add_option("--format", va.format, "text, json or latex");
    verify->add_option("--mutate", va.mutation, "Flip one sign: flip-c1, flip-e1, flip-f11, flip-c(1,1), flip-sigma-parity");
    verify->add_flag("--timing", va.timing, "Include runtimes");

    int coeff_max = 6;
    std::string coeff_format;
    auto* coeff = app.add_subcommand("coeff", "Print coefficient tables");
    coeff->add_option("--max", coeff_max, "Largest index")->check(CLI::NonNegativeNumber);
    coeff->add_option("--format", coeff_format, "text or json");

    std::string golden_path;
    std::string golden_format;
    std::optional<int> golden_order;
    auto* golden = app.add_subcommand("golden", "Golden table tools");
    golden->require_subcommand(1);
    auto* check = golden->add_subcommand("check", "Compare a golden table file with the engine");
    check->add_option("path", golden_path, "Table file")->required();
    check->add_option("--order,-n", golden_order, "B-order of the table")->check(CLI::NonNegativeNumber);
    check->add_option("--format", golden_format, "text or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*expand) return cmd_expand(ea, config, out);
        if (*verify) return cmd_verify(va, config, out);
        if (*coeff) return cmd_coeff(coeff_max, coeff_format, config, out);
        if (*check) return cmd_golden_check(golden_path, golden_order.value_or(config.default_order_b), golden_format,
                                            config, out);
    } catch (const UsageError& e) {
        err << "seacalc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const GoldenParseError& e) {
        err << "seacalc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "seacalc: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "seacalc: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace seacalc
