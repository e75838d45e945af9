#include "catode/report.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace catode {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::array<std::pair<IdentityId, std::string_view>, 11> kIdentityNames{{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm2, "thm2"},
    {IdentityId::thm3, "thm3"},
    {IdentityId::thm4, "thm4"},
    {IdentityId::eq57, "eq57"},
    {IdentityId::eq58, "eq58"},
    {IdentityId::eq59, "eq59"},
    {IdentityId::eq62, "eq62"},
    {IdentityId::eq64, "eq64"},
    {IdentityId::eq66, "eq66"},
    {IdentityId::asymptotic, "asymptotic"},
}};

constexpr std::array<std::pair<Mode, std::string_view>, 4> kModeNames{{
    {Mode::series, "series"},
    {Mode::symbolic, "symbolic"},
    {Mode::numeric, "numeric"},
    {Mode::exact, "exact"},
}};

std::string format_parameters(const std::map<std::string, long long>& params)
{
    std::string out;
    for (const auto& [name, value] : params) {
        if (!out.empty()) {
            out += ' ';
        }
        out += name + "=" + std::to_string(value);
    }
    return out.empty() ? "-" : out;
}

ojson to_json(const VerificationReport& r, bool timings)
{
    ojson params = ojson::object();
    for (const auto& [name, value] : r.parameters) {
        params[name] = value;
    }
    ojson j;
    j["id"] = to_string(r.id);
    j["parameters"] = std::move(params);
    j["mode"] = to_string(r.mode);
    j["passed"] = r.passed;
    if (r.witness) {
        ojson w;
        w["index"] = r.witness->index;
        w["expected"] = r.witness->expected;
        w["actual"] = r.witness->actual;
        if (!r.witness->detail.empty()) {
            w["detail"] = r.witness->detail;
        }
        j["witness"] = std::move(w);
    }
    if (timings) {
        j["cost_ms"] = std::chrono::duration<double, std::milli>(r.cost).count();
    }
    return j;
}

}  // namespace

std::string_view to_string(IdentityId id)
{
    for (const auto& [key, name] : kIdentityNames) {
        if (key == id) {
            return name;
        }
    }
    return "?";
}

std::string_view to_string(Mode mode)
{
    for (const auto& [key, name] : kModeNames) {
        if (key == mode) {
            return name;
        }
    }
    return "?";
}

std::optional<IdentityId> parse_identity(std::string_view text)
{
    for (const auto& [key, name] : kIdentityNames) {
        if (name == text) {
            return key;
        }
    }
    return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view text)
{
    for (const auto& [key, name] : kModeNames) {
        if (name == text) {
            return key;
        }
    }
    return std::nullopt;
}

bool report_less(const VerificationReport& a, const VerificationReport& b)
{
    if (a.id != b.id) {
        return a.id < b.id;
    }
    if (a.parameters != b.parameters) {
        return a.parameters < b.parameters;
    }
    return a.mode < b.mode;
}

void sort_reports(std::vector<VerificationReport>& reports)
{
    std::stable_sort(reports.begin(), reports.end(), report_less);
}

std::string emit_report(std::vector<VerificationReport> reports, const EmitOptions& options)
{
    sort_reports(reports);
    if (options.format == ReportFormat::json) {
        ojson list = ojson::array();
        for (const auto& r : reports) {
            list.push_back(to_json(r, options.json_timings));
        }
        ojson doc;
        doc["version"] = "1";
        doc["reports"] = std::move(list);
        return doc.dump() + "\n";
    }

    std::size_t id_w = 8;
    std::size_t param_w = 10;
    for (const auto& r : reports) {
        id_w = std::max(id_w, to_string(r.id).size());
        param_w = std::max(param_w, format_parameters(r.parameters).size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(id_w)) << "identity" << "  " << std::setw(static_cast<int>(param_w))
       << "parameters" << "  " << std::setw(8) << "mode" << "  " << std::setw(6) << "result" << "  "
       << "time_ms\n";
    std::size_t failed = 0;
    for (const auto& r : reports) {
        const double ms = std::chrono::duration<double, std::milli>(r.cost).count();
        os << std::left << std::setw(static_cast<int>(id_w)) << to_string(r.id) << "  "
           << std::setw(static_cast<int>(param_w)) << format_parameters(r.parameters) << "  " << std::setw(8)
           << to_string(r.mode) << "  " << std::setw(6) << (r.passed ? "PASS" : "FAIL") << "  " << std::fixed
           << std::setprecision(3) << ms << "\n";
        if (!r.passed) {
            ++failed;
            if (r.witness) {
                const auto& w = *r.witness;
                os << "    witness:";
                if (w.index >= 0) {
                    os << " index " << w.index << ":";
                }
                if (!w.expected.empty() || !w.actual.empty()) {
                    os << " expected " << w.expected << ", got " << w.actual;
                }
                if (!w.detail.empty()) {
                    os << " (" << w.detail << ")";
                }
                os << "\n";
            }
        }
    }
    os << reports.size() - failed << "/" << reports.size() << " checks passed\n";
    return os.str();
}

std::vector<std::string> validate_report_json(const ojson& doc)
{
    std::vector<std::string> problems;
    auto problem = [&](std::string msg) { problems.push_back(std::move(msg)); };
    if (!doc.is_object()) {
        problem("document is not an object");
        return problems;
    }
    for (const auto& [key, _] : doc.items()) {
        if (key != "version" && key != "reports") {
            problem("unexpected top-level key '" + key + "'");
        }
    }
    if (!doc.contains("version") || doc["version"] != "1") {
        problem("version must be \"1\"");
    }
    if (!doc.contains("reports") || !doc["reports"].is_array()) {
        problem("reports must be an array");
        return problems;
    }
    std::size_t n = 0;
    for (const auto& r : doc["reports"]) {
        const std::string at = "reports[" + std::to_string(n++) + "]";
        if (!r.is_object()) {
            problem(at + " is not an object");
            continue;
        }
        for (const auto& [key, _] : r.items()) {
            if (key != "id" && key != "parameters" && key != "mode" && key != "passed" && key != "witness" &&
                key != "cost_ms") {
                problem(at + " has unexpected key '" + key + "'");
            }
        }
        if (!r.contains("id") || !r["id"].is_string() || !parse_identity(r["id"].get<std::string>())) {
            problem(at + ".id is not a known identity");
        }
        if (!r.contains("mode") || !r["mode"].is_string() || !parse_mode(r["mode"].get<std::string>())) {
            problem(at + ".mode is not a known mode");
        }
        if (!r.contains("passed") || !r["passed"].is_boolean()) {
            problem(at + ".passed must be a boolean");
        }
        if (!r.contains("parameters") || !r["parameters"].is_object()) {
            problem(at + ".parameters must be an object");
        } else {
            for (const auto& [key, value] : r["parameters"].items()) {
                if (!value.is_number_integer()) {
                    problem(at + ".parameters." + key + " must be an integer");
                }
            }
        }
        const bool passed = r.contains("passed") && r["passed"].is_boolean() && r["passed"].get<bool>();
        if (r.contains("witness")) {
            const auto& w = r["witness"];
            if (!w.is_object() || !w.contains("index") || !w["index"].is_number_integer() || !w.contains("expected") ||
                !w["expected"].is_string() || !w.contains("actual") || !w["actual"].is_string() ||
                (w.contains("detail") && !w["detail"].is_string())) {
                problem(at + ".witness is malformed");
            }
        } else if (!passed) {
            problem(at + " failed without a witness");
        }
        if (r.contains("cost_ms") && !r["cost_ms"].is_number()) {
            problem(at + ".cost_ms must be a number");
        }
    }
    return problems;
}

std::vector<VerificationReport> parse_report_json(std::string_view text)
{
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw std::invalid_argument(std::string("report is not valid JSON: ") + e.what());
    }
    if (const auto problems = validate_report_json(doc); !problems.empty()) {
        throw std::invalid_argument("report violates schema: " + problems.front());
    }
    std::vector<VerificationReport> out;
    for (const auto& r : doc["reports"]) {
        VerificationReport rep;
        rep.id = *parse_identity(r["id"].get<std::string>());
        rep.mode = *parse_mode(r["mode"].get<std::string>());
        rep.passed = r["passed"].get<bool>();
        for (const auto& [key, value] : r["parameters"].items()) {
            rep.parameters[key] = value.get<long long>();
        }
        if (r.contains("witness")) {
            const auto& w = r["witness"];
            rep.witness = Witness{w["index"].get<long long>(), w["expected"].get<std::string>(),
                                  w["actual"].get<std::string>(), w.value("detail", std::string{})};
        }
        if (r.contains("cost_ms")) {
            rep.cost = std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::duration<double, std::milli>(r["cost_ms"].get<double>()));
        }
        out.push_back(std::move(rep));
    }
    return out;
}

}  // namespace catode
