#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "catode/report.hpp"

namespace catode {

/// Bounds for a verification run.
struct RunConfig {
    unsigned long max_N = 8;
    std::size_t series_order = 64;
    unsigned long max_n = 20;
    unsigned long terms_eq59 = 500;
    unsigned long terms_eq62 = 2000;
    unsigned long max_conv_n = 200;
    unsigned long asymptotic_n = 1000;
    ReportFormat format = ReportFormat::human;
    /// Worker count; 0 picks the hardware concurrency.
    unsigned parallelism = 0;
};

/// Throws std::invalid_argument when a bound is zero or K < max_N + 8.
void validate(const RunConfig& config);

/// Every identity, in report order.
std::vector<IdentityId> all_identities();

/// One unit of work. `id`, `mode` and `parameters` describe the report it
/// produces, which also labels the failure if `run` throws.
struct Job {
    IdentityId id;
    Mode mode;
    std::map<std::string, long long> parameters;
    std::function<std::vector<VerificationReport>()> run;
};

std::vector<Job> plan_jobs(std::span<const IdentityId> ids, const RunConfig& config);

/// Runs jobs on a pool of `threads` workers (0 = hardware concurrency) and
/// returns the reports in deterministic order. A job that throws yields a
/// failed report whose witness detail carries the exception message.
std::vector<VerificationReport> run_jobs(std::vector<Job> jobs, unsigned threads);

/// plan_jobs + run_jobs.
std::vector<VerificationReport> run_verification(std::span<const IdentityId> ids, const RunConfig& config);

}  // namespace catode
