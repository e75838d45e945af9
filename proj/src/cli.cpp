#include "catode/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "catode/algebraic_field.hpp"
#include "catode/bfile.hpp"
#include "catode/catalan.hpp"
#include "catode/coefficients.hpp"
#include "catode/report.hpp"
#include "catode/suite.hpp"

namespace catode {

namespace {

constexpr const char* kThreadsEnv = "CATALAN_ODE_THREADS";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<Integer>& values)
{
    std::string out;
    for (const auto& v : values) {
        if (!out.empty()) {
            out += ',';
        }
        out += v.get_str();
    }
    return out;
}

nlohmann::json decimal_array(const std::vector<Integer>& values)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& v : values) {
        a.push_back(v.get_str());
    }
    return a;
}

unsigned threads_from_env()
{
    const char* raw = std::getenv(kThreadsEnv);
    if (raw == nullptr || *raw == '\0') {
        return 0;
    }
    const std::string text(raw);
    if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) || text.size() > 6) {
        throw UsageError(std::string(kThreadsEnv) + " must be a non-negative integer, got '" + text + "'");
    }
    return static_cast<unsigned>(std::stoul(text));
}

std::vector<IdentityId> resolve_ids(const std::vector<std::string>& names)
{
    std::vector<IdentityId> ids;
    for (const auto& name : names) {
        if (name == "all") {
            return all_identities();
        }
        const auto id = parse_identity(name);
        if (!id) {
            throw UsageError("unknown identity '" + name + "'");
        }
        if (std::find(ids.begin(), ids.end(), *id) == ids.end()) {
            ids.push_back(*id);
        }
    }
    return ids;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact Catalan-number ODE coefficients and identity verification", "catalan-ode"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "human";
    const std::vector<std::string> formats{"human", "json"};

    unsigned long catalan_max = 12;
    auto* catalan_cmd = app.add_subcommand("catalan", "Print C_0..C_max");
    catalan_cmd->add_option("--max", catalan_max, "Largest index")->capture_default_str();
    catalan_cmd->add_option("--format", format, "human or json")->check(CLI::IsMember(formats));

    unsigned long higher_r = 2;
    unsigned long higher_max = 12;
    auto* higher_cmd = app.add_subcommand("higher", "Print higher-order Catalan numbers C_0^(r)..C_max^(r)");
    higher_cmd->add_option("--r", higher_r, "Order r >= 1")->required()->check(CLI::PositiveNumber);
    higher_cmd->add_option("--max", higher_max, "Largest index")->capture_default_str();
    higher_cmd->add_option("--format", format, "human or json")->check(CLI::IsMember(formats));

    std::string family = "a";
    unsigned long coeffs_max = 8;
    bool closed_form = false;
    auto* coeffs_cmd = app.add_subcommand("coeffs", "Print the a_i(N) or b_i(N) coefficient table");
    coeffs_cmd->add_option("--family", family, "a or b")->required()->check(CLI::IsMember({"a", "b"}));
    coeffs_cmd->add_option("--max-N", coeffs_max, "Largest N")->capture_default_str()->check(CLI::PositiveNumber);
    coeffs_cmd->add_flag("--closed-form", closed_form, "Evaluate closed forms instead of the recurrences");
    coeffs_cmd->add_option("--format", format, "human or json")->check(CLI::IsMember(formats));

    RunConfig config;
    std::vector<std::string> id_names;
    unsigned threads = 0;
    bool timings = false;
    std::size_t cap = kDefaultDegreeCap;
    auto* verify_cmd = app.add_subcommand("verify", "Verify identities and report PASS/FAIL");
    verify_cmd->add_option("--id", id_names, "Identity id(s) or 'all'")->required()->delimiter(',');
    verify_cmd->add_option("--max-N", config.max_N, "Largest ODE order N")->capture_default_str();
    verify_cmd->add_option("--order,-K", config.series_order, "Series truncation order K")->capture_default_str();
    verify_cmd->add_option("--max-n", config.max_n, "Largest n / k for thm2 and thm4")->capture_default_str();
    verify_cmd->add_option("--terms-eq59", config.terms_eq59, "Terms in the eq59 partial sum")->capture_default_str();
    verify_cmd->add_option("--terms-eq62", config.terms_eq62, "Terms in the eq62 partial sum")->capture_default_str();
    verify_cmd->add_option("--max-conv-n", config.max_conv_n, "Largest n for eq64/eq66")->capture_default_str();
    verify_cmd->add_option("--asymptotic-n", config.asymptotic_n, "n for the asymptotic ratio")->capture_default_str();
    auto* threads_opt = verify_cmd->add_option("--threads,-j", threads, "Worker threads (0 = auto)");
    verify_cmd->add_option("--degree-cap", cap, "Polynomial degree cap for symbolic mode")->capture_default_str();
    verify_cmd->add_flag("--timings", timings, "Include cost_ms in JSON output");
    verify_cmd->add_option("--format", format, "human or json")->check(CLI::IsMember(formats));

    std::string bfile_path;
    unsigned long cross_max = 200;
    auto* cross_cmd = app.add_subcommand("crosscheck", "Compare a b-file against computed Catalan numbers");
    cross_cmd->add_option("--bfile", bfile_path, "Path to the b-file")->required();
    cross_cmd->add_option("--max", cross_max, "Largest index to compare")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const bool json = format == "json";
    try {
        if (*catalan_cmd) {
            const auto values = catalan_recurrence(catalan_max);
            if (json) {
                out << nlohmann::json{{"catalan", decimal_array(values)}}.dump() << "\n";
            } else {
                out << join(values) << "\n";
            }
            return kExitOk;
        }
        if (*higher_cmd) {
            const HigherCatalanTable table(higher_r, higher_max);
            std::vector<Integer> values;
            for (unsigned long n = 0; n <= higher_max; ++n) {
                values.push_back(table(higher_r, n));
            }
            if (json) {
                out << nlohmann::json{{"r", higher_r}, {"values", decimal_array(values)}}.dump() << "\n";
            } else {
                out << join(values) << "\n";
            }
            return kExitOk;
        }
        if (*coeffs_cmd) {
            const Family fam = family == "a" ? Family::a : Family::b;
            const CoeffTable table = closed_form ? closed_form_table(fam, coeffs_max)
                                     : fam == Family::a ? a_table_recurrence(coeffs_max)
                                                        : b_table_recurrence(coeffs_max);
            if (json) {
                out << table.to_json().dump() << "\n";
            } else {
                for (unsigned long N = 1; N <= table.max_N(); ++N) {
                    out << "N=" << N << ": ";
                    const auto& row = table.row(N);
                    for (std::size_t k = 0; k < row.size(); ++k) {
                        out << (k ? " " : "") << row[k].get_str();
                    }
                    out << "\n";
                }
            }
            return kExitOk;
        }
        if (*verify_cmd) {
            try {
                validate(config);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const auto ids = resolve_ids(id_names);
            config.parallelism = threads_opt->count() > 0 ? threads : threads_from_env();
            config.format = json ? ReportFormat::json : ReportFormat::human;
            set_degree_cap(cap);
            const auto reports = run_verification(ids, config);
            out << emit_report(reports, {config.format, timings});
            const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
            return ok ? kExitOk : kExitFailure;
        }
        if (*cross_cmd) {
            std::vector<BFileEntry> entries;
            try {
                entries = parse_bfile(read_file(bfile_path));
            } catch (const BFileError& e) {
                throw UsageError(bfile_path + ": " + e.what());
            }
            const auto result = crosscheck_catalan(entries, cross_max);
            for (const auto& m : result.mismatches) {
                out << "mismatch at " << m.index << ": expected " << m.expected.get_str() << ", file has "
                    << m.actual.get_str() << "\n";
            }
            out << "checked " << result.checked << " entries, " << result.mismatches.size() << " mismatches\n";
            return result.mismatches.empty() ? kExitOk : kExitFailure;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace catode
