#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace catode {

enum class IdentityId { thm1, thm2, thm3, thm4, eq57, eq58, eq59, eq62, eq64, eq66, asymptotic };

/// How a check was carried out. `exact` covers scalar identities evaluated
/// in exact rationals without series truncation.
enum class Mode { series, symbolic, numeric, exact };

std::string_view to_string(IdentityId id);
std::string_view to_string(Mode mode);
std::optional<IdentityId> parse_identity(std::string_view text);
std::optional<Mode> parse_mode(std::string_view text);

/// First point of disagreement. `index` is the coefficient or term index
/// (-1 when the failure is not tied to an index); values are decimal strings.
struct Witness {
    long long index = -1;
    std::string expected;
    std::string actual;
    std::string detail;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
    IdentityId id = IdentityId::thm1;
    std::map<std::string, long long> parameters;
    Mode mode = Mode::exact;
    bool passed = false;
    std::optional<Witness> witness;
    std::chrono::nanoseconds cost{0};
};

/// Deterministic report order: identity, then parameters, then mode.
bool report_less(const VerificationReport& a, const VerificationReport& b);

void sort_reports(std::vector<VerificationReport>& reports);

enum class ReportFormat { human, json };

struct EmitOptions {
    ReportFormat format = ReportFormat::human;
    /// Adds "cost_ms" to JSON reports; this breaks byte-determinism across runs.
    bool json_timings = false;
};

/// Human output is an aligned table; JSON is a single line
/// {"version":"1","reports":[...]} with reports in deterministic order.
std::string emit_report(std::vector<VerificationReport> reports, const EmitOptions& options = {});

/// Inverse of the JSON emitter. Throws std::invalid_argument on schema violations.
std::vector<VerificationReport> parse_report_json(std::string_view text);

/// Schema problems in a parsed report document; empty when it conforms.
std::vector<std::string> validate_report_json(const nlohmann::ordered_json& doc);

}  // namespace catode
