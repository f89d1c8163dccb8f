// Command-line surface: builds series and tables, verifies identities,
// prints continuum series and double-scaling residuals.
//
// Exit codes: 0 success/matched, 1 verification mismatch, 2 usage error,
// 3 domain error. Output is buffered so errors never leave partial output.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "penner/continuum.hpp"
#include "penner/euler_char.hpp"
#include "penner/models.hpp"
#include "penner/serialize.hpp"
#include "penner/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

penner::MatrixSize parse_size(const std::string& text) {
    if (text == "sym")
        return penner::MatrixSize::symbolic();
    std::size_t pos = 0;
    long long n = 0;
    try {
        n = std::stoll(text, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("--N must be a positive integer or 'sym'");
    }
    if (pos != text.size())
        throw std::invalid_argument("--N must be a positive integer or 'sym'");
    return penner::MatrixSize::of(n);
}

struct ChiArgs {
    std::string kind;
    int g = -1;
    int n = -1;
    unsigned g_max = 0, n_max = 0;
    std::string format = "csv";
    bool table = false;
};

struct SeriesArgs {
    std::string model;
    std::string size_text;
    int order = 16;
    int alpha = 0;
    std::string orientation = "reciprocal";
    std::string format = "json";
};

struct VerifyArgs {
    std::string identity;
    std::string size_text;
    int order = 16;
    std::string format = "json";
};

struct ContinuumArgs {
    std::string model;
    unsigned g_max = 5;
    unsigned k_max = 5;
    std::string format = "json";
};

struct DoubleScaleArgs {
    double mu = 10.0;
    long long size = 0;
    int q_max = 3;
};

struct ReportArgs {
    std::string size_text;
    int order = 16;
};

penner::CurveKind parse_kind(const std::string& kind) {
    if (kind == "complex")
        return penner::CurveKind::Complex;
    if (kind == "real")
        return penner::CurveKind::Real;
    throw std::invalid_argument("--kind must be 'complex' or 'real'");
}

int run_chi(const ChiArgs& args, std::string& out) {
    const penner::CurveKind kind = parse_kind(args.kind);
    if (args.table) {
        const auto table = penner::chi_table(kind, args.g_max, args.n_max);
        out = args.format == "json" ? penner::serialize_chi_table_json(table) + "\n"
                                    : penner::serialize_chi_table_csv(table);
        return kExitOk;
    }
    if (args.g < 0 || args.n < 0)
        throw std::invalid_argument("chi requires --g and --n (or the 'table' subcommand)");
    const auto g = static_cast<unsigned>(args.g);
    const auto n = static_cast<unsigned>(args.n);
    const penner::Rational v =
        kind == penner::CurveKind::Complex ? penner::chi_complex(g, n) : penner::chi_real(g, n);
    out = v.to_string() + "\n";
    return kExitOk;
}

int run_series(const SeriesArgs& args, std::string& out) {
    using penner::MatrixSize;
    std::optional<MatrixSize> size;
    if (!args.size_text.empty())
        size = parse_size(args.size_text);

    const auto need_size = [&]() -> const MatrixSize& {
        if (!size)
            throw std::invalid_argument("--N is required for this model");
        return *size;
    };

    penner::TSeries s(0);
    if (args.model == "hermitian") {
        s = penner::hermitian_gf_series(need_size(), args.order);
    } else if (args.model == "symplectic") {
        s = penner::symplectic_gf_series(need_size(), args.order);
    } else if (args.model == "orthogonal") {
        s = penner::orthogonal_gf_series(need_size(), args.order);
    } else if (args.model == "nonorientable-product") {
        s = penner::nonorientable_product_series(need_size(), args.order);
    } else if (args.model == "nonorientable-gf") {
        s = penner::nonorientable_gf_series(need_size(), args.order);
    } else if (args.model == "closed-form") {
        const auto orientation = args.orientation == "as_printed"
                                     ? penner::Orientation::AsPrinted
                                     : penner::Orientation::Reciprocal;
        s = penner::penner_closed_form_series(need_size(), args.order, orientation);
    } else if (args.model == "triple-sum") {
        if (args.alpha == 0)
            throw std::invalid_argument("--alpha is required for --model triple-sum");
        s = penner::free_energy_series(args.alpha, need_size(), args.order);
    } else if (args.model == "stirling-tail") {
        s = penner::stirling_tail_series(args.order);
    } else {
        throw std::invalid_argument("unknown --model '" + args.model + "'");
    }
    out = args.format == "text" ? s.to_string() + "\n" : penner::serialize_tseries(s) + "\n";
    return kExitOk;
}

int run_verify(const VerifyArgs& args, std::string& out) {
    const auto id = penner::identity_from_string(args.identity);
    if (!id)
        throw std::invalid_argument("unknown --identity '" + args.identity + "'");
    const auto report = penner::verify_identity(*id, parse_size(args.size_text), args.order);
    out = args.format == "text" ? penner::report_to_text(report)
                                : penner::serialize_report(report) + "\n";
    return report.matched ? kExitOk : kExitMismatch;
}

int run_continuum(const ContinuumArgs& args, std::string& out) {
    penner::MuSeries series;
    std::vector<std::string> notes;
    if (args.model == "penner") {
        series = penner::penner_continuum(args.g_max);
    } else if (args.model == "nonorientable") {
        series = penner::nonorientable_continuum(args.k_max);
    } else if (args.model == "symplectic" || args.model == "orthogonal") {
        const auto sector = args.model == "symplectic" ? penner::Sector::Symplectic
                                                       : penner::Sector::Orthogonal;
        auto r = penner::combined_continuum(sector, args.g_max, args.k_max);
        series = std::move(r.series);
        notes = std::move(r.notes);
    } else {
        throw std::invalid_argument("unknown --model '" + args.model + "'");
    }
    if (args.format == "text") {
        out = series.to_string() + "\n";
        for (const auto& n : notes)
            out += "note: " + n + "\n";
    } else {
        out = penner::serialize_museries(series, notes) + "\n";
    }
    return kExitOk;
}

int run_doublescale(const DoubleScaleArgs& args, std::string& out) {
    const penner::ScalingPoint point(args.size, args.mu);
    const auto check = penner::double_scaling_residual(point, args.q_max);
    out = penner::serialize_residual_check(check) + "\n";
    return kExitOk;
}

int run_report(const ReportArgs& args, std::string& out) {
    const penner::MatrixSize size = parse_size(args.size_text);
    std::vector<penner::IdentityId> ids = {
        penner::IdentityId::Eq17Split,    penner::IdentityId::Eq5VsEq6,
        penner::IdentityId::Eq5VsEq9,     penner::IdentityId::ProductVsEq24,
        penner::IdentityId::MirrorSum,    penner::IdentityId::MirrorDiff,
    };
    if (!size.is_symbolic())
        ids.push_back(penner::IdentityId::ClosedFormOrientation);

    bool all_matched = true;
    out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const auto report = penner::verify_identity(ids[i], size, args.order);
        all_matched = all_matched && report.matched;
        if (i > 0)
            out += ",";
        out += penner::serialize_report(report);
    }
    out += "]\n";
    return all_matched ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions, Euler-characteristic tables and "
                 "double-scaling checks for the unitary, symplectic and orthogonal "
                 "Penner matrix models"};
    app.require_subcommand(1);

    ChiArgs chi_args;
    auto* chi = app.add_subcommand("chi", "Orbifold Euler characteristic values and tables");
    chi->add_option("--kind", chi_args.kind, "complex or real")
        ->required()
        ->check(CLI::IsMember({"complex", "real"}));
    chi->add_option("--g", chi_args.g, "genus index (g for complex, q for real genus 2q)");
    chi->add_option("--n", chi_args.n, "number of punctures");
    auto* chi_table = chi->add_subcommand("table", "All in-range values up to the bounds");
    chi_table->fallthrough(); // --kind may follow the table subcommand
    chi_table->add_option("--gmax", chi_args.g_max, "maximum genus index")->required();
    chi_table->add_option("--nmax", chi_args.n_max, "maximum punctures")->required();
    chi_table->add_option("--format", chi_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    chi_table->callback([&] { chi_args.table = true; });

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Expand a model generating function in t");
    series->add_option("--model", series_args.model,
                       "hermitian|symplectic|orthogonal|nonorientable-product|"
                       "nonorientable-gf|closed-form|triple-sum|stirling-tail")
        ->required();
    series->add_option("--N", series_args.size_text, "matrix size: positive integer or 'sym'");
    series->add_option("--order", series_args.order, "truncation order (default 16)");
    series->add_option("--alpha", series_args.alpha, "ensemble parameter for triple-sum: 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    series->add_option("--orientation", series_args.orientation,
                       "closed-form tail sign: reciprocal (default) or as_printed")
        ->check(CLI::IsMember({"reciprocal", "as_printed"}));
    series->add_option("--format", series_args.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check one identity between model expansions");
    verify->add_option("--identity", verify_args.identity,
                       "eq17|eq5v6|eq5v9|prodv24|mirror-sum|mirror-diff|closed-form")
        ->required();
    verify->add_option("--N", verify_args.size_text, "matrix size: positive integer or 'sym'")
        ->required();
    verify->add_option("--order", verify_args.order, "truncation order (default 16)");
    verify->add_option("--format", verify_args.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    ContinuumArgs continuum_args;
    auto* continuum = app.add_subcommand("continuum", "Continuum-limit mu-series");
    continuum->add_option("--model", continuum_args.model,
                          "penner|nonorientable|symplectic|orthogonal")
        ->required();
    continuum->add_option("--gmax", continuum_args.g_max, "orientable genus cutoff (default 5)");
    continuum->add_option("--kmax", continuum_args.k_max,
                          "non-orientable genus cutoff (default 5)");
    continuum->add_option("--format", continuum_args.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    DoubleScaleArgs ds_args;
    auto* doublescale =
        app.add_subcommand("doublescale", "Finite-size double-scaling residual check");
    doublescale->add_option("--mu", ds_args.mu, "scaling parameter mu (default 10)");
    doublescale->add_option("--N", ds_args.size, "matrix size")->required();
    doublescale->add_option("--qmax", ds_args.q_max, "tail truncation (default 3)");

    ReportArgs report_args;
    auto* report = app.add_subcommand("report", "Run every identity check and print all reports");
    report->add_option("--N", report_args.size_text, "matrix size: positive integer or 'sym'")
        ->required();
    report->add_option("--order", report_args.order, "truncation order (default 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);
        return cli_code == 0 ? kExitOk : kExitUsage;
    }

    std::string out;
    int code = kExitOk;
    try {
        if (chi->parsed())
            code = run_chi(chi_args, out);
        else if (series->parsed())
            code = run_series(series_args, out);
        else if (verify->parsed())
            code = run_verify(verify_args, out);
        else if (continuum->parsed())
            code = run_continuum(continuum_args, out);
        else if (doublescale->parsed())
            code = run_doublescale(ds_args, out);
        else if (report->parsed())
            code = run_report(report_args, out);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    std::cout << out;
    return code;
}
